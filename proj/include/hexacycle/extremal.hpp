#pragma once

// Area-extremal triangles of a prescribed shape: the unique minimizer
// inscribed in a reference triangle, the unique maximizer circumscribed to
// it, and the points tying them together (pedal point K, antipedal point L,
// orthology point T, homothety center). Also the pedal similarity between a
// point and its inverse in the circumcircle.

#include <array>
#include <string>

#include "hexacycle/triangle_ops.hpp"

namespace hexacycle {

enum class AngleName { Alpha = 0, Beta = 1, Gamma = 2 };

/// Prescribed shape; angles in radians, each in (0, pi), summing to pi.
class AngleTriple {
 public:
  AngleTriple(double alpha, double beta, double gamma);
  /// Degrees summing to 180 within `sum_tol` degrees; rescaled so the
  /// radian values sum to pi.
  static AngleTriple from_degrees(double alpha, double beta, double gamma, double sum_tol = 1e-9);

  double alpha() const { return v_[0]; }
  double beta() const { return v_[1]; }
  double gamma() const { return v_[2]; }
  double operator[](AngleName n) const { return v_[static_cast<std::size_t>(n)]; }
  double max() const;
  double min() const;

 private:
  std::array<double, 3> v_;
};

/// Which side line of the reference triangle carries the vertex of each
/// prescribed angle. Indices 1..6 use the table
///
///   index | AB    | BC    | CA
///   ------+-------+-------+------
///     1   | alpha | beta  | gamma
///     2   | alpha | gamma | beta
///     3   | beta  | alpha | gamma
///     4   | beta  | gamma | alpha
///     5   | gamma | alpha | beta
///     6   | gamma | beta  | alpha
///
/// reading alpha, beta, gamma as the fundamental angles D, E, F.
class SideAssignment {
 public:
  static SideAssignment from_index(int index);
  /// Throws unless the three sides are distinct.
  static SideAssignment from_sides(Side alpha_side, Side beta_side, Side gamma_side);
  static std::array<SideAssignment, 6> all();

  int index() const { return index_; }
  Side side_of(AngleName n) const { return side_of_[static_cast<std::size_t>(n)]; }
  AngleName angle_on(Side s) const;
  double angle_on(Side s, const AngleTriple& angles) const { return angles[angle_on(s)]; }
  /// e.g. "alpha:AB beta:BC gamma:CA"
  std::string describe() const;

  friend bool operator==(const SideAssignment& x, const SideAssignment& y) { return x.index_ == y.index_; }

 private:
  SideAssignment(int index, std::array<Side, 3> sides) : index_(index), side_of_(sides) {}
  int index_;
  std::array<Side, 3> side_of_;
};

/// The three circles carrying the circumscribed vertices, and their common
/// point L.
struct ArcCircles {
  Circle over_ab;  // locus of S, the vertex seeing AB
  Circle over_bc;  // locus of Q, the vertex seeing BC
  Circle over_ca;  // locus of R, the vertex seeing CA
  Point common_point;
  /// Distance from L to the third circle.
  double residual = 0.0;

  const Circle& over(Side s) const;
};

/// Residuals of the structural identities; all are zero in exact arithmetic.
struct ExtremalChecks {
  double min_on_sides = 0.0;         // length
  double max_circumscribes = 0.0;    // length
  double min_angle_error = 0.0;      // radians
  double max_angle_error = 0.0;      // radians
  double geometric_mean_rel = 0.0;   // | |min||max| / |ref|^2 - 1 |
  double lk_isogonal = 0.0;          // length, in ABC
  double tl_isogonal = 0.0;          // length, in QRS
  double orthology = 0.0;            // length, third perpendicular to T
  double okt_collinear = 0.0;        // length / scale, see collinearity_residual
  double sq_parallel = 0.0;          // radians, SQ against O1O2
  double common_point = 0.0;         // length, L against the third circle
};

struct ExtremalConfig {
  Triangle reference;
  AngleTriple angles;
  SideAssignment assignment;
  /// Vertices ordered (on BC, on CA, on AB).
  Triangle min_triangle;
  /// Vertices ordered (Q, R, S): Q sees BC, R sees CA, S sees AB, so
  /// max vertex i corresponds to min vertex i under the homothety.
  Triangle max_triangle;
  Point pedal_point;      // K
  Point antipedal_point;  // L
  Point orthology_point;  // T
  Point homothety_center;
  double homothety_ratio;
  ArcCircles arcs;
  ExtremalChecks checks;
};

ArcCircles arc_circles(const Triangle& ref, const AngleTriple& angles, const SideAssignment& asg);
Triangle max_circumscribed(const Triangle& ref, const AngleTriple& angles, const SideAssignment& asg);
Triangle max_circumscribed(const ArcCircles& arcs);
ExtremalConfig min_inscribed(const Triangle& ref, const AngleTriple& angles, const SideAssignment& asg);

/// Triangle bounded by the parallels through A, B, C to the sides of an
/// inscribed triangle ordered (on BC, on CA, on AB).
Triangle circumscribed_by_parallels(const Triangle& ref, const Triangle& inscribed);

/// Distance of the remaining point from the line through the farthest pair,
/// divided by `scale`. Stays bounded as the points draw together.
double collinearity_residual(Point p, Point q, Point r, double scale);

struct InversePedalPair {
  Point m;
  Point n;
  PedalResult pedal_m;
  PedalResult pedal_n;
  double area_ratio = 0.0;       // |pedal m| / |pedal n|
  double predicted_ratio = 0.0;  // (R^2 - OM^2) / (ON^2 - R^2)
  double angle_error = 0.0;      // max over sides of the angle mismatch
  double power_error = 0.0;      // |OM*ON - R^2| / R^2
};

InversePedalPair inverse_pedal_pair(const Triangle& ref, Point m);

/// Largest side-matched angle mismatch between the pedal triangles of p and
/// q. Throws when either pedal triangle is degenerate.
double pedal_shape_mismatch(const Triangle& ref, Point p, Point q);

/// Residual, per side (BC, CA, AB), of the pedal angle relation
///   angle at foot on AB = angle AMB - angle C
/// written with directed angles modulo pi, so it holds for every point off
/// the circumcircle. For M inside ABC it is the unsigned relation above; for
/// a point N across AB from C it reads angle at foot = angle BNA + angle C.
std::array<double, 3> verify_angle_relations(const Triangle& ref, Point m);

}  // namespace hexacycle
