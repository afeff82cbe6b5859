#include <gtest/gtest.h>

#include "hexacycle/triangle_ops.hpp"
#include "support.hpp"

namespace hexacycle {
namespace {

using testing::Rng;

constexpr double kSqrt3 = 1.7320508075688772;

const Triangle kRef({0, 0}, {4, 0}, {1, 3});

void expect_near(Point p, Point q, double tol) {
  EXPECT_NEAR(p.x, q.x, tol);
  EXPECT_NEAR(p.y, q.y, tol);
}

template <typename F>
void expect_error(F&& f, const std::string& what) {
  try {
    f();
    FAIL() << "expected error: " << what;
  } catch (const GeometryError& e) {
    EXPECT_EQ(std::string(e.what()), what);
  }
}

Point random_interior(Rng& rng, const Triangle& t) {
  double u = rng.uniform(0.02, 1);
  double v = rng.uniform(0.02, 1);
  double w = rng.uniform(0.02, 1);
  const double s = u + v + w;
  return (u * t.a() + v * t.b() + w * t.c()) / s;
}

TEST(Triangle, RejectsDegenerate) {
  expect_error([] { Triangle({0, 0}, {1, 0}, {2, 0}); }, "degenerate triangle");
  expect_error([] { Triangle({1, 1}, {1, 1}, {2, 5}); }, "degenerate triangle");
}

TEST(Triangle, BasicMeasurements) {
  EXPECT_DOUBLE_EQ(kRef.area(), 6.0);
  EXPECT_EQ(kRef.orientation(), 1);
  EXPECT_EQ(Triangle({0, 0}, {1, 3}, {4, 0}).orientation(), -1);
  EXPECT_NEAR(kRef.angle(0) + kRef.angle(1) + kRef.angle(2), kPi, 1e-15);
  EXPECT_NEAR(kRef.angle(1), kPi / 4, 1e-15);
  const Circle c = kRef.circumcircle();
  expect_near(c.center(), {2, 1}, 1e-14);
  EXPECT_NEAR(c.radius() * c.radius(), 5.0, 1e-13);
}

TEST(PedalTriangle, Examples) {
  const Triangle eq({0, 0}, {2, 0}, {1, kSqrt3});
  const PedalResult medial = pedal_triangle(eq, {1, 1 / kSqrt3});
  expect_near(medial.foot(Side::AB), {1, 0}, 1e-15);
  expect_near(medial.foot(Side::BC), {1.5, kSqrt3 / 2}, 1e-15);
  expect_near(medial.foot(Side::CA), {0.5, kSqrt3 / 2}, 1e-15);
  EXPECT_NEAR(medial.area, kSqrt3 / 4, 1e-15);

  const PedalResult simson = pedal_triangle(Triangle({0, 0}, {4, 0}, {0, 3}), {0, 0});
  EXPECT_NEAR(simson.area, 0.0, 1e-15);
  EXPECT_TRUE(simson.degenerate());

  const PedalResult orthic = pedal_triangle(kRef, {1, 1});
  expect_near(orthic.foot(Side::BC), {2, 2}, 1e-14);
  expect_near(orthic.foot(Side::CA), {0.4, 1.2}, 1e-14);
  expect_near(orthic.foot(Side::AB), {1, 0}, 1e-14);
  EXPECT_NEAR(orthic.area, 1.2, 1e-14);
}

TEST(PedalTriangle, FeetOnSidesAndAnglesSumToPi) {
  Rng rng(101);
  for (int i = 0; i < 1000; ++i) {
    const Triangle t = testing::random_triangle(rng);
    const Point p = rng.point(-20, 20);
    const PedalResult r = pedal_triangle(t, p);
    for (Side s : kSides) EXPECT_LT(t.side_line(s).distance(r.foot(s)), 1e-12 * 40);
    if (!r.degenerate()) { EXPECT_NEAR(*r.angles[0] + *r.angles[1] + *r.angles[2], kPi, 1e-12); }
  }
}

TEST(AntipedalTriangle, EquilateralCenterIsAnticomplementary) {
  const Triangle eq({0, 0}, {2, 0}, {1, kSqrt3});
  const Triangle anti = antipedal_triangle(eq, {1, 1 / kSqrt3});
  EXPECT_NEAR(anti.area(), 4 * kSqrt3, 1e-13);
}

TEST(AntipedalTriangle, PedalRoundTrip) {
  Rng rng(103);
  // Centroid example, then random points.
  std::vector<std::pair<Triangle, Point>> cases{{kRef, {5.0 / 3.0, 1.0}}};
  for (int i = 0; i < 1000; ++i) {
    const Triangle t = testing::random_triangle(rng);
    cases.emplace_back(t, rng.point(-10, 10));
  }
  int checked = 0;
  for (const auto& [t, p] : cases) {
    Triangle anti = t;
    try {
      anti = antipedal_triangle(t, p);
    } catch (const GeometryError& e) {
      EXPECT_EQ(std::string(e.what()), "antipedal degenerate");
      continue;
    }
    const PedalResult back = pedal_triangle(anti, p);
    const double tol = 1e-8 * std::max(anti.scale(), t.scale());
    for (int k = 0; k < 3; ++k) EXPECT_LT(distance(back.feet[static_cast<std::size_t>(k)], t.vertex(k)), tol);
    ++checked;
  }
  EXPECT_GT(checked, 900);
}

TEST(AntipedalTriangle, VertexIsDegenerate) {
  EXPECT_THROW(antipedal_triangle(kRef, kRef.a()), GeometryError);
}

TEST(IsogonalConjugate, Examples) {
  const Point inc = testing::incenter(kRef.a(), kRef.b(), kRef.c());
  expect_near(isogonal_conjugate(kRef, inc), inc, 1e-13);

  // Circumcenter and orthocenter from the independent formulas.
  const Point o = testing::circumcenter(kRef.a(), kRef.b(), kRef.c());
  const Point h = testing::orthocenter(kRef.a(), kRef.b(), kRef.c());
  expect_near(o, {2, 1}, 1e-14);
  expect_near(h, {1, 1}, 1e-14);
  expect_near(isogonal_conjugate(kRef, o), h, 1e-13);
  expect_near(isogonal_conjugate(kRef, h), o, 1e-13);
  EXPECT_LT(isogonal_pair_residual(kRef, o, h), 1e-13);
}

TEST(IsogonalConjugate, Errors) {
  expect_error([] { isogonal_conjugate(kRef, {2, 0}); }, "isogonal undefined");
  expect_error([] { isogonal_conjugate(kRef, {0, 0}); }, "isogonal undefined");
  // (4, 2) lies on the circumcircle (center (2, 1), R^2 = 5), off the sides.
  expect_error([] { isogonal_conjugate(kRef, {4, 2}); }, "conjugate at infinity");
}

TEST(IsogonalConjugate, InvolutionAndBarycentricAgreement) {
  Rng rng(107);
  for (int i = 0; i < 1000; ++i) {
    const Triangle t = testing::random_triangle(rng);
    const Point p = random_interior(rng, t);
    const Point q = isogonal_conjugate(t, p);
    const double tol = 1e-8 * t.scale();
    EXPECT_LT(distance(q, testing::isogonal_by_barycentrics(t.a(), t.b(), t.c(), p)), tol);
    EXPECT_LT(distance(isogonal_conjugate(t, q), p), tol);
    EXPECT_LT(isogonal_pair_residual(t, p, q), tol);
  }
}

TEST(IsogonalConjugate, InteriorStaysInteriorForAcute) {
  // Logged, not asserted: the count of interior points of acute triangles
  // whose conjugate leaves the triangle.
  Rng rng(109);
  int outside = 0;
  int acute = 0;
  for (int i = 0; i < 1000; ++i) {
    const Triangle t = testing::random_triangle(rng);
    if (std::max({t.angle(0), t.angle(1), t.angle(2)}) >= kPi / 2) continue;
    ++acute;
    const Point q = isogonal_conjugate(t, random_interior(rng, t));
    const double s = t.orientation();
    const bool inside = s * signed_area(t.a(), t.b(), q) > 0 && s * signed_area(t.b(), t.c(), q) > 0 &&
                        s * signed_area(t.c(), t.a(), q) > 0;
    outside += !inside;
  }
  RecordProperty("acute_cases", acute);
  RecordProperty("conjugate_outside", outside);
  EXPECT_GT(acute, 0);
}

TEST(HomothetyBetween, Examples) {
  const Triangle medial(midpoint(kRef.b(), kRef.c()), midpoint(kRef.c(), kRef.a()), midpoint(kRef.a(), kRef.b()));
  const Homothety h = homothety_between(kRef, medial);
  ASSERT_FALSE(h.at_infinity());
  expect_near(*h.center, {5.0 / 3.0, 1.0}, 1e-14);
  EXPECT_NEAR(h.ratio, -0.5, 1e-15);

  const Point shift{1, 0};
  const Homothety tr = homothety_between(kRef, Triangle(kRef.a() + shift, kRef.b() + shift, kRef.c() + shift));
  EXPECT_TRUE(tr.at_infinity());
  EXPECT_NEAR(tr.ratio, 1.0, 1e-15);

  const double ten = 10.0 * kPi / 180.0;
  const Triangle rotated(rotate(kRef.a(), ten), rotate(kRef.b(), ten), rotate(kRef.c(), ten));
  expect_error([&] { homothety_between(kRef, rotated); }, "not homothetic");
}

TEST(HomothetyBetween, RecoversRandomDilations) {
  Rng rng(113);
  for (int i = 0; i < 500; ++i) {
    const Triangle t = testing::random_triangle(rng);
    const Point center = rng.point(-10, 10);
    double k = rng.uniform(-3, 3);
    if (std::abs(k) < 0.1 || std::abs(k - 1) < 0.1) k = 2.0;
    auto map = [&](Point p) { return center + k * (p - center); };
    const Homothety h = homothety_between(t, Triangle(map(t.a()), map(t.b()), map(t.c())));
    ASSERT_FALSE(h.at_infinity());
    EXPECT_NEAR(h.ratio, k, 1e-10);
    EXPECT_LT(distance(*h.center, center), 1e-8 * std::max(t.scale(), norm(center)));
  }
}

// Independent solve for the triangle with C1 on B2B3, C2 on B1B3, C3 on
// B1B2 and sides parallel to the outer triangle: C1 = B3 + u (B2 - B3); C2
// and C3 follow from parallels to A1A2 and A1A3, and the last parallelism
// is affine in u.
Triangle homothetic_by_parallels(const Triangle& outer, Point b1, Point b2, Point b3) {
  auto hit = [](Point from, Point dir, Point p, Point q) {
    // from + s dir on line pq
    const double s = cross(p - from, q - p) / cross(dir, q - p);
    return from + s * dir;
  };
  auto build = [&](double u) {
    const Point c1 = b3 + u * (b2 - b3);
    const Point c2 = hit(c1, outer.b() - outer.a(), b1, b3);
    const Point c3 = hit(c1, outer.c() - outer.a(), b1, b2);
    return std::array<Point, 3>{c1, c2, c3};
  };
  auto f = [&](double u) {
    const auto c = build(u);
    return cross(c[2] - c[1], outer.c() - outer.b());
  };
  const double f0 = f(0.0);
  const double f1 = f(1.0);
  const auto c = build(f0 / (f0 - f1));
  return Triangle(c[0], c[1], c[2]);
}

double ratio(Point p, Point x, Point q) { return distance(p, x) / distance(x, q); }

TEST(InscribeHomothetic, MidpointsGiveMedialOfMedial) {
  const Point b1 = midpoint(kRef.b(), kRef.c());
  const Point b2 = midpoint(kRef.a(), kRef.c());
  const Point b3 = midpoint(kRef.a(), kRef.b());
  const Triangle inner = inscribe_homothetic(kRef, b1, b2, b3);
  EXPECT_NEAR(inner.area(), kRef.area() / 16.0, 1e-14);
  const double mid = std::abs(signed_area(b1, b2, b3));
  EXPECT_NEAR(mid * mid, kRef.area() * inner.area(), 1e-12);
}

TEST(InscribeHomothetic, GeometricMeanAtFixedParameters) {
  const Point a1 = kRef.a(), a2 = kRef.b(), a3 = kRef.c();
  const Point b1 = a2 + 0.3 * (a3 - a2);
  const Point b2 = a3 + 0.6 * (a1 - a3);
  const Point b3 = a1 + 0.2 * (a2 - a1);
  const Triangle inner = inscribe_homothetic(kRef, b1, b2, b3);
  const double mid = std::abs(signed_area(b1, b2, b3));
  EXPECT_LT(std::abs(kRef.area() * inner.area() / (mid * mid) - 1.0), 1e-9);
  EXPECT_NO_THROW(homothety_between(kRef, inner));
}

TEST(InscribeHomothetic, VertexIsRatioUndefined) {
  expect_error([] { inscribe_homothetic(kRef, kRef.b(), midpoint(kRef.a(), kRef.c()), midpoint(kRef.a(), kRef.b())); },
               "ratio undefined");
}

TEST(InscribeHomothetic, BothDirectionsOnRandomInstances) {
  Rng rng(127);
  for (int i = 0; i < 1000; ++i) {
    const Triangle outer = testing::random_triangle(rng);
    const Point a1 = outer.a(), a2 = outer.b(), a3 = outer.c();
    const Point b1 = a2 + rng.uniform(0.05, 0.95) * (a3 - a2);
    const Point b2 = a3 + rng.uniform(0.05, 0.95) * (a1 - a3);
    const Point b3 = a1 + rng.uniform(0.05, 0.95) * (a2 - a1);
    const Triangle inner = inscribe_homothetic(outer, b1, b2, b3);
    const double mid = std::abs(signed_area(b1, b2, b3));
    EXPECT_LT(std::abs(outer.area() * inner.area() / (mid * mid) - 1.0), 1e-9);
    EXPECT_NO_THROW(homothety_between(outer, inner));

    // Converse: the homothetic inscribed triangle found independently
    // divides the inner sides in the outer ratios.
    const Triangle c = homothetic_by_parallels(outer, b1, b2, b3);
    for (int k = 0; k < 3; ++k) EXPECT_LT(distance(c.vertex(k), inner.vertex(k)), 1e-9 * outer.scale());
    EXPECT_NEAR(ratio(a1, b3, a2), ratio(b2, c.c(), b1), 1e-9 * ratio(a1, b3, a2));
    EXPECT_NEAR(ratio(a2, b1, a3), ratio(b3, c.a(), b2), 1e-9 * ratio(a2, b1, a3));
    EXPECT_NEAR(ratio(a3, b2, a1), ratio(b1, c.b(), b3), 1e-9 * ratio(a3, b2, a1));
  }
}

TEST(PedalAreaRatio, Examples) {
  EXPECT_NEAR(pedal_area_ratio(kRef, {2, 1}), 0.25, 1e-15);
  EXPECT_NEAR(pedal_area_ratio(kRef, {4, 2}), 0.0, 1e-15);
  EXPECT_NEAR(pedal_area_ratio(kRef, {1, 1}), 0.2, 1e-15);
  EXPECT_NEAR(pedal_area_ratio(kRef, {1, 1}) * kRef.area(), 1.2, 1e-14);
}

TEST(PedalAreaRatio, MatchesDirectAreaEverywhere) {
  Rng rng(131);
  int exterior = 0;
  for (int i = 0; i < 1000; ++i) {
    const Triangle t = testing::random_triangle(rng);
    const Circle c = t.circumcircle();
    double rho = 1.0;
    while (std::abs(rho - 1.0) < 1e-3) rho = rng.uniform(0, 3);
    const double phi = rng.uniform(-kPi, kPi);
    const Point m = c.center() + rho * c.radius() * Point{std::cos(phi), std::sin(phi)};
    exterior += rho > 1.0;
    const double direct = pedal_triangle(t, m).area / t.area();
    const double formula = pedal_area_ratio(t, m);
    EXPECT_LT(std::abs(direct - formula) / formula, 1e-10) << "rho " << rho;
  }
  EXPECT_GT(exterior, 300);
}

}  // namespace
}  // namespace hexacycle
