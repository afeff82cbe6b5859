#include <algorithm>
#include <string>

#include <gtest/gtest.h>

#include "hexacycle/app.hpp"

namespace hexacycle::app {
namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

RunConfig instance(std::array<Point, 3> tri, std::array<double, 3> deg) {
  RunConfig c;
  c.triangle = tri;
  c.angles_degrees = deg;
  return c;
}

const std::array<Point, 3> kRef{Point{0, 0}, Point{4, 0}, Point{1, 3}};
const std::array<Point, 3> kEquilateral{Point{0, 0}, Point{2, 0}, Point{1, 1.7320508}};

TEST(Parse, Triangle) {
  const auto t = parse_triangle("0,0 4,0 1,3");
  EXPECT_EQ(t[1], (Point{4, 0}));
  EXPECT_EQ(parse_triangle("  -1.5,2e-1   3,4 5,6 ")[0], (Point{-1.5, 0.2}));
  EXPECT_THROW(parse_triangle("0,0 4,0"), UsageError);
  EXPECT_THROW(parse_triangle("0,0 4,x 1,3"), UsageError);
  EXPECT_THROW(parse_triangle("0,0 4 1,3"), UsageError);
}

TEST(Parse, AnglesAndLayers) {
  EXPECT_EQ(parse_angles("50,60,70"), (std::array<double, 3>{50, 60, 70}));
  EXPECT_THROW(parse_angles("50,60"), UsageError);
  const Layers l = parse_layers("exterior,circles");
  EXPECT_TRUE(l.exterior && l.circles);
  EXPECT_THROW(parse_layers("interior,bogus"), UsageError);
}

TEST(Parse, Preconditions) {
  EXPECT_THROW(checked_triangle(instance({Point{0, 0}, Point{1, 1}, Point{2, 2}}, {60, 60, 60})), UsageError);
  EXPECT_THROW(checked_angles(instance(kRef, {50, 60, 60})), UsageError);
  EXPECT_THROW(checked_angles(instance(kRef, {0, 90, 90})), UsageError);
}

TEST(Verify, ScaleneInstancePasses) {
  const CommandResult r = run_verify(instance(kRef, {50, 60, 70}));
  EXPECT_EQ(r.exit_code, kExitPass) << r.diagnostics;
  EXPECT_NE(r.output.find("\"schema\": \"hexacycle/1\""), std::string::npos);
  EXPECT_NE(r.output.find("\"result\": \"PASS\""), std::string::npos);
}

TEST(Verify, EquilateralCollapseIsReported) {
  const CommandResult r = run_verify(instance(kEquilateral, {60, 60, 60}));
  EXPECT_EQ(r.exit_code, kExitPass) << r.diagnostics;
  EXPECT_NE(r.output.find("degenerate: coincident"), std::string::npos);
  EXPECT_NE(r.output.find("SKIPPED"), std::string::npos);
}

TEST(Verify, UsageErrors) {
  EXPECT_EQ(run_verify(instance({Point{0, 0}, Point{1, 1}, Point{2, 2}}, {60, 60, 60})).exit_code, kExitUsage);
  RunConfig c = instance(kRef, {50, 60, 70});
  c.grid = 100;
  EXPECT_EQ(run_verify(c).exit_code, kExitUsage);
  c.grid = 720;
  c.tol.concyclic = -1;
  EXPECT_EQ(run_verify(c).exit_code, kExitUsage);
}

TEST(Verify, InfeasibleInstance) {
  const CommandResult r = run_verify(instance({Point{0, 0}, Point{10, 0}, Point{2, 1}}, {15, 140, 25}));
  EXPECT_EQ(r.exit_code, kExitInfeasible);
  EXPECT_NE(r.output.find("assignment infeasible (angle sum)"), std::string::npos);
}

TEST(Svg, Structure) {
  RunConfig c = instance(kRef, {50, 60, 70});
  c.layers = parse_layers("interior,exterior,circles");
  const CommandResult r = run_svg(c);
  EXPECT_EQ(r.exit_code, kExitPass) << r.diagnostics;
  EXPECT_EQ(r.output.rfind("<?xml", 0), 0u);
  EXPECT_EQ(count(r.output, "class=\"point\""), 6u);
  EXPECT_EQ(count(r.output, "class=\"point exterior\""), 6u);
  EXPECT_EQ(count(r.output, "class=\"fitted-circle\""), 1u);
  EXPECT_NE(r.output.find("</svg>"), std::string::npos);
}

TEST(Svg, CollapsedPointsAnnotated) {
  const CommandResult r = run_svg(instance(kEquilateral, {60, 60, 60}));
  EXPECT_EQ(r.exit_code, kExitPass);
  EXPECT_EQ(count(r.output, "class=\"fitted-circle\""), 0u);
  EXPECT_NE(r.output.find("coincident"), std::string::npos);
  EXPECT_FALSE(r.diagnostics.empty());
}

TEST(Fuzz, DeterministicAndCountsAddUp) {
  RunConfig c;
  c.seed = 7;
  c.trials = 40;
  const CommandResult a = run_fuzz(c);
  const CommandResult b = run_fuzz(c);
  EXPECT_EQ(a.output, b.output);
  EXPECT_EQ(a.exit_code, kExitPass) << a.diagnostics;
  const auto doc = nlohmann::json::parse(a.output);
  const auto& counts = doc.at("counts");
  EXPECT_EQ(counts.at("pass").get<int>() + counts.at("fail").get<int>() + counts.at("infeasible").get<int>(), 40);
  c.seed = 8;
  EXPECT_NE(run_fuzz(c).output, a.output);
}

TEST(Fuzz, ZeroTrialsIsUsage) {
  RunConfig c;
  c.trials = 0;
  EXPECT_EQ(run_fuzz(c).exit_code, kExitUsage);
}

TEST(Trials, IndependentOfOrderAndReproducible) {
  const Trial t5 = make_trial(42, 5);
  make_trial(42, 4);
  const Trial again = make_trial(42, 5);
  EXPECT_EQ(t5.seed, again.seed);
  EXPECT_EQ(t5.reference.vertices(), again.reference.vertices());
  EXPECT_NE(trial_seed(42, 5), trial_seed(42, 6));
  // The reproducer carries enough digits to rebuild the instance exactly.
  const std::string cmd = reproducer(t5);
  const auto tri_start = cmd.find("--triangle \"") + 12;
  const auto tri = parse_triangle(cmd.substr(tri_start, cmd.find('"', tri_start) - tri_start));
  EXPECT_EQ(tri, t5.reference.vertices());
  const auto ang_start = cmd.find("--angles \"") + 10;
  const auto ang = parse_angles(cmd.substr(ang_start, cmd.find('"', ang_start) - ang_start));
  EXPECT_NEAR(ang[0] * kPi / 180, t5.angles.alpha(), 1e-15);
  EXPECT_NEAR(ang[1] * kPi / 180, t5.angles.beta(), 1e-15);
  EXPECT_NEAR(ang[2] * kPi / 180, t5.angles.gamma(), 1e-15);
}

TEST(Json, SeventeenDigitRoundTrip) {
  nlohmann::ordered_json doc;
  doc["x"] = 0.1;
  doc["y"] = 1.0 / 3.0;
  doc["bad"] = std::nan("");
  doc["v"] = {1.0, 2.0};
  const std::string text = dump_json(doc);
  const auto back = nlohmann::json::parse(text);
  EXPECT_EQ(back.at("x").get<double>(), 0.1);
  EXPECT_EQ(back.at("y").get<double>(), 1.0 / 3.0);
  EXPECT_TRUE(back.at("bad").is_null());
}

}  // namespace
}  // namespace hexacycle::app
