#pragma once

// Triangle-level constructions: pedal and antipedal triangles, isogonal
// conjugation, homothety detection, homothetic inscription and the pedal
// area ratio.

#include <array>
#include <optional>
#include <string_view>

#include "hexacycle/geom_core.hpp"

namespace hexacycle {

/// Side lines of a triangle, indexed so that side i is opposite vertex i.
enum class Side { BC = 0, CA = 1, AB = 2 };

inline constexpr std::array<Side, 3> kSides{Side::BC, Side::CA, Side::AB};

constexpr int index_of(Side s) { return static_cast<int>(s); }
std::string_view side_name(Side s);

/// Non-degenerate ordered triangle (A, B, C).
class Triangle {
 public:
  /// Throws GeometryError(InvalidInput, "degenerate triangle") when the
  /// area is below kRelEps * scale^2.
  Triangle(Point a, Point b, Point c);

  Point a() const { return v_[0]; }
  Point b() const { return v_[1]; }
  Point c() const { return v_[2]; }
  Point vertex(int i) const { return v_[static_cast<std::size_t>(i)]; }
  const std::array<Point, 3>& vertices() const { return v_; }

  double signed_area() const { return hexacycle::signed_area(v_[0], v_[1], v_[2]); }
  double area() const { return std::abs(signed_area()); }
  /// +1 counterclockwise, -1 clockwise.
  int orientation() const { return signed_area() > 0 ? 1 : -1; }
  /// Diameter of the vertex set.
  double scale() const;

  /// Interior angle at vertex i.
  double angle(int i) const;
  /// Endpoints of side s, in the order given by its name (BC -> B, C).
  std::array<Point, 2> side_endpoints(Side s) const;
  Line side_line(Side s) const;
  /// Vertex opposite side s.
  Point opposite(Side s) const { return vertex(index_of(s)); }

  Circle circumcircle() const;
  Point centroid() const { return (v_[0] + v_[1] + v_[2]) / 3.0; }

 private:
  std::array<Point, 3> v_;
};

struct PedalResult {
  Point pedal_point;
  /// Feet indexed by host side (BC, CA, AB).
  std::array<Point, 3> feet;
  double area = 0.0;
  /// Interior angle at each foot, unset when the feet are collinear.
  std::array<std::optional<double>, 3> angles;

  Point foot(Side s) const { return feet[static_cast<std::size_t>(index_of(s))]; }
  std::optional<double> angle(Side s) const { return angles[static_cast<std::size_t>(index_of(s))]; }
  bool degenerate() const { return !angles[0].has_value(); }
  /// The feet as a triangle ordered (on BC, on CA, on AB).
  Triangle triangle() const { return Triangle(feet[0], feet[1], feet[2]); }
};

struct Homothety {
  /// Unset for a pure translation.
  std::optional<Point> center;
  double ratio = 1.0;

  bool at_infinity() const { return !center.has_value(); }
  Point apply(Point p) const;
};

PedalResult pedal_triangle(const Triangle& host, Point p);

/// Triangle whose pedal triangle at p is the host; vertex i of the result is
/// opposite the side that passes through host vertex i.
Triangle antipedal_triangle(const Triangle& host, Point p);

Point isogonal_conjugate(const Triangle& host, Point p);

/// Largest distance from q to the reflections of the cevians of p across the
/// angle bisectors of host. Zero when p and q are isogonal conjugates.
double isogonal_pair_residual(const Triangle& host, Point p, Point q);

/// Dilation taking src vertex i to dst vertex i. Side directions must agree
/// within `angle_tol` radians.
Homothety homothety_between(const Triangle& src, const Triangle& dst, double angle_tol = 1e-8);

/// Given b1 on A2A3, b2 on A1A3 and b3 on A1A2, the triangle C1C2C3 inscribed
/// in b1b2b3 that divides its sides in the same ratios and is homothetic to
/// the outer triangle.
Triangle inscribe_homothetic(const Triangle& outer, Point b1, Point b2, Point b3);

/// |R^2 - OM^2| / (4 R^2) for the circumcircle (O, R) of host.
double pedal_area_ratio(const Triangle& host, Point m);

}  // namespace hexacycle
