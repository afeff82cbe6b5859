#pragma once

// The six pedal points obtained by distributing a prescribed shape over the
// sides of a reference triangle in all six ways, the circle through them,
// and the circle through their inverses in the circumcircle.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hexacycle/extremal.hpp"

namespace hexacycle {

enum class FitStatus { Ok, Coincident, Collinear, Insufficient };

std::string_view fit_status_name(FitStatus s);

struct CircleFit {
  FitStatus status = FitStatus::Coincident;
  std::optional<Circle> circle;
  /// max over points of | |p - center| - radius |; zero unless Ok.
  double max_residual = 0.0;
  /// Circle through the best-conditioned triple, kept for comparison.
  std::optional<Circle> triple_circle;

  double relative_residual() const { return circle ? max_residual / circle->radius() : 0.0; }
};

/// Algebraic least-squares circle refined by one geometric Gauss-Newton
/// step. `scale` is the length scale of the surrounding geometry; points
/// spanning at most coincident_tol * scale are reported as Coincident, and
/// fits with radius above 1e6 * scale as Collinear. Needs at least 3 points.
CircleFit fit_circle(std::span<const Point> points, double scale, double coincident_tol = kRelEps);

struct PedalPointConstruction {
  SideAssignment assignment;
  Point point;
  Circle circle_ab;  // through A, B; sees AB under C + angle on AB
  Circle circle_ca;  // through A, C; sees CA under B + angle on CA
  Circle circle_bc;  // through B, C; sees BC under A + angle on BC
  /// Distance from the point to circle_bc.
  double third_circle_residual = 0.0;
};

/// Pedal point whose pedal triangle carries the prescribed angles on the
/// sides given by `asg`; it lies strictly inside the reference triangle.
PedalPointConstruction pedal_point_for(const Triangle& ref, const AngleTriple& angles, const SideAssignment& asg);

/// All six, in assignment-index order. Throws on the first infeasible one.
std::array<PedalPointConstruction, 6> six_pedal_points(const Triangle& ref, const AngleTriple& angles);

/// True when every assignment has all three inscribed angles below pi.
bool all_assignments_feasible(const Triangle& ref, const AngleTriple& angles);

struct SixPointOptions {
  double concyclic_tol = 1e-7;  // interior residual / radius
  double exterior_tol = 1e-6;   // exterior residual / radius
  /// Relative tolerance for treating constructed points as coincident with
  /// each other or with the circumcenter.
  double coincident_tol = 1e-7;
};

struct SixPointEntry {
  SideAssignment assignment;
  std::optional<PedalPointConstruction> construction;
  std::string error;
  /// Pedal point through the isogonal-of-L route, when it succeeds.
  std::optional<Point> extremal_point;
  std::string extremal_error;
  double route_disagreement = 0.0;
  /// |AMB| + |BMC| + |CMA| - 2 pi
  double angle_sum_error = 0.0;
  /// Angles of the antipedal triangle at the point, for inspection.
  std::optional<std::array<double, 3>> antipedal_angles;
  std::optional<Point> exterior;
  std::string exterior_error;
};

struct SixPointReport {
  Triangle reference;
  AngleTriple angles;
  std::array<SixPointEntry, 6> entries;
  /// (O_D), (O_E), (O_F) through A, B and (O'_D), (O'_E), (O'_F) through
  /// A, C, for the angles alpha, beta, gamma; unset when infeasible.
  std::array<std::optional<Circle>, 6> defining_circles;
  CircleFit interior_fit;
  std::size_t interior_count = 0;
  std::optional<CircleFit> exterior_fit;
  std::string exterior_skip_reason;
  bool interior_pass = false;
  bool exterior_pass = false;

  bool pass() const { return interior_pass && exterior_pass; }
};

SixPointReport six_point_theorem_check(const Triangle& ref, const AngleTriple& angles,
                                       const SixPointOptions& options = {});

}  // namespace hexacycle
