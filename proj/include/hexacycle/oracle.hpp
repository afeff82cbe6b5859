#pragma once

// Brute-force verifiers for the extremal constructions. The inscribed and
// circumscribed similarity classes are one-parameter families; these sweep
// the parameter on a grid, refine the best grid cell by golden-section
// search, and report the extremum. Nothing here calls into extremal or
// six_circle.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hexacycle/extremal.hpp"

namespace hexacycle::oracle {

struct FamilySample {
  /// Inscribed family: direction of side XZ in [0, pi).
  /// Circumscribed family: polar angle of S about the center of its circle.
  double theta = 0.0;
  std::optional<Triangle> triangle;  // vertices ordered (on BC, on CA, on AB) / (Q, R, S)
  double area = 0.0;
};

struct SweepResult {
  std::vector<FamilySample> samples;
  double extremum_theta = 0.0;
  double extremum_area = 0.0;
  std::optional<Triangle> extremum_triangle;
  int refinement_iterations = 0;
};

inline constexpr int kDefaultGrid = 720;

/// Smallest-area triangle of the inscribed class: vertices on the side lines
/// given by `asg`, angles as prescribed, orientation matching ref.
SweepResult inscribed_family_min(const Triangle& ref, const AngleTriple& angles, const SideAssignment& asg,
                                 int grid = kDefaultGrid);

/// Largest-area triangle of the circumscribed class, sweeping S around its
/// circle over AB; Q and R follow from the lines SB and SA.
SweepResult circumscribed_family_max(const Triangle& ref, const AngleTriple& angles, const SideAssignment& asg,
                                     int grid = kDefaultGrid);

/// One inscribed-family member for a given XZ direction, or nullopt at a
/// singular direction.
std::optional<Triangle> inscribed_member(const Triangle& ref, const AngleTriple& angles, const SideAssignment& asg,
                                         double theta);

/// Plain algebraic circle fit from centered second and third moments.
/// Returns the circle and the largest radial residual.
std::pair<Circle, double> reference_circle_fit(std::span<const Point> points);

}  // namespace hexacycle::oracle
