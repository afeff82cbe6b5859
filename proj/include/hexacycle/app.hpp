#pragma once

// Command layer behind the hexacycle executable. Commands are pure functions
// of a RunConfig that return the exit code and the bytes they would write,
// so tests can drive them without spawning processes.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hexacycle/extremal.hpp"

namespace hexacycle::app {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitUsage = 64;

inline constexpr std::string_view kSchema = "hexacycle/1";

/// Malformed command-line input; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Layers {
  bool interior = true;
  bool exterior = false;
  bool circles = false;
};

struct Tolerances {
  double concyclic = 1e-7;  // interior fit residual / radius
  double exterior = 1e-6;   // exterior fit residual / radius
  double construct = 1e-8;  // incidence residuals / scale
};

struct RunConfig {
  std::array<Point, 3> triangle{};
  std::array<double, 3> angles_degrees{};
  Tolerances tol;
  std::uint64_t seed = 0;
  int trials = 1000;
  /// Oracle sweep resolution used by fuzz.
  int grid = 720;
  std::string json_path;
  std::string svg_path;
  Layers layers;
};

/// "x,y x,y x,y"
std::array<Point, 3> parse_triangle(std::string_view text);
/// "a,b,c" in degrees.
std::array<double, 3> parse_angles(std::string_view text);
/// "interior,exterior,circles" in any combination.
Layers parse_layers(std::string_view text);

/// Throws UsageError naming the first violated precondition.
Triangle checked_triangle(const RunConfig& config);
AngleTriple checked_angles(const RunConfig& config);

struct CommandResult {
  int exit_code = kExitPass;
  std::string output;       // JSON or SVG document
  std::string diagnostics;  // human-readable lines for stderr
};

CommandResult run_verify(const RunConfig& config);
CommandResult run_fuzz(const RunConfig& config);
CommandResult run_svg(const RunConfig& config);

/// JSON text with every double printed to 17 significant digits and
/// non-finite values as null; object keys keep insertion order.
std::string dump_json(const nlohmann::ordered_json& doc);

/// One fuzz instance. The trial seed depends only on the master seed and
/// the index.
struct Trial {
  std::uint64_t seed = 0;
  Triangle reference;
  AngleTriple angles;
};

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);
/// Triangle in [-10, 10]^2 with all angles >= 10 degrees and an angle triple
/// with every angle >= 10 degrees. With `feasible_only`, the pair is redrawn
/// until all six assignments are feasible.
Trial make_trial(std::uint64_t master, std::uint64_t index, bool feasible_only = false);

/// Shell-ready verify invocation reproducing a trial.
std::string reproducer(const Trial& trial);

}  // namespace hexacycle::app
