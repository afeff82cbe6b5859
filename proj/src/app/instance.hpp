#pragma once

// Evaluation of one (reference, angles) instance: every construction, every
// residual, and a verdict per theorem. Shared by verify, fuzz and svg.

#include <optional>
#include <string>
#include <vector>

#include "hexacycle/app.hpp"
#include "hexacycle/oracle.hpp"
#include "hexacycle/six_circle.hpp"

namespace hexacycle::app {

std::uint64_t splitmix64(std::uint64_t x);

/// Sequential splitmix64 stream; doubles carry the top 53 bits.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : state_(seed) {}
  double uniform(double lo, double hi);

 private:
  std::uint64_t state_;
};

enum class Verdict { Pass, Fail, Infeasible, Skipped };

std::string_view verdict_name(Verdict v);

struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass() const { return value <= tolerance; }
};

struct TheoremResult {
  std::string name;
  Verdict verdict = Verdict::Skipped;
  std::vector<Check> checks;
  std::vector<std::string> notes;
};

struct AssignmentResult {
  SideAssignment assignment;
  std::optional<ExtremalConfig> extremal;
  std::string extremal_error;
  bool extremal_infeasible = false;
  std::optional<InversePedalPair> inverse;
  std::string inverse_error;
  std::optional<oracle::SweepResult> oracle_min;
  std::optional<oracle::SweepResult> oracle_max;
};

struct InstanceResult {
  Triangle reference;
  AngleTriple angles;
  SixPointReport six;
  std::vector<AssignmentResult> assignments;
  std::vector<TheoremResult> theorems;

  bool failed() const;
  bool infeasible() const;
  int exit_code() const;
};

/// `grid` = 0 skips the oracle sweeps.
InstanceResult evaluate_instance(const Triangle& ref, const AngleTriple& angles, const Tolerances& tol, int grid);

/// Sampled checks at random points of the plane around `ref`: pedal area
/// formula, inverse-pair similarity and its converse, homothetic
/// inscription. Deterministic in `seed`.
std::vector<TheoremResult> random_property_suites(const Triangle& ref, std::uint64_t seed);

/// Merges per-check worst values into a theorem verdict.
Verdict combine(const std::vector<Check>& checks, bool any_failed_construction, bool any_infeasible, bool any_data);

nlohmann::ordered_json point_json(Point p);
nlohmann::ordered_json triangle_json(const Triangle& t);
nlohmann::ordered_json circle_json(const Circle& c);
nlohmann::ordered_json theorem_json(const TheoremResult& t);
nlohmann::ordered_json instance_json(const InstanceResult& r, const Tolerances& tol);

}  // namespace hexacycle::app
