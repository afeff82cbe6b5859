#pragma once

// Floating-point plane primitives: points, normalized lines, circles and
// inversions. Every predicate that needs a tolerance takes it relative to a
// geometry scale, the diameter of the points involved.

#include <cmath>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hexacycle {

/// Default relative epsilon for incidence and degeneracy predicates.
inline constexpr double kRelEps = 1e-9;

inline constexpr double kPi = 3.14159265358979323846;

enum class ErrorKind {
  InvalidInput,  // malformed or degenerate user-level input
  Degenerate,    // a construction hit a singular configuration
  Infeasible,    // the requested configuration does not exist
};

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
  friend constexpr Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
  friend constexpr Point operator-(Point p) { return {-p.x, -p.y}; }
  friend constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend constexpr Point operator*(Point p, double s) { return {s * p.x, s * p.y}; }
  friend constexpr Point operator/(Point p, double s) { return {p.x / s, p.y / s}; }
  friend constexpr bool operator==(Point, Point) = default;

  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
constexpr double cross(Point p, Point q) { return p.x * q.y - p.y * q.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point p, Point q) { return norm(p - q); }
constexpr Point midpoint(Point p, Point q) { return {0.5 * (p.x + q.x), 0.5 * (p.y + q.y)}; }
/// Counterclockwise quarter turn.
constexpr Point perp(Point p) { return {-p.y, p.x}; }
Point rotate(Point v, double angle);
Point normalized(Point v);

/// Diameter of a point set; the length scale used by relative tolerances.
double geometry_scale(std::span<const Point> points);
double geometry_scale(std::initializer_list<Point> points);

/// Line a*x + b*y = c with a^2 + b^2 = 1.
class Line {
 public:
  /// Normalizes (a, b, c); throws if (a, b) is (0, 0) or not finite.
  Line(double a, double b, double c);

  static Line through(Point p, Point q);
  /// Line through `p` with the given (not necessarily unit) normal.
  static Line with_normal(Point normal, Point p);
  /// Line through `p` with the given direction.
  static Line with_direction(Point direction, Point p);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  Point normal() const { return {a_, b_}; }
  Point direction() const { return {-b_, a_}; }
  /// Signed distance, positive on the side the normal points to.
  double signed_distance(Point p) const { return a_ * p.x + b_ * p.y - c_; }
  double distance(Point p) const { return std::abs(signed_distance(p)); }

 private:
  double a_, b_, c_;
};

class Circle {
 public:
  /// Throws unless radius is positive and finite.
  Circle(Point center, double radius);

  Point center() const { return center_; }
  double radius() const { return radius_; }
  /// | |p - center| - radius |
  double residual(Point p) const { return std::abs(hexacycle::distance(p, center_) - radius_); }
  bool contains_strictly(Point p, double tol = 0.0) const {
    return hexacycle::distance(p, center_) < radius_ - tol;
  }

 private:
  Point center_;
  double radius_;
};

class Inversion {
 public:
  Inversion(Point center, double power);
  Point center() const { return center_; }
  double power() const { return power_; }

 private:
  Point center_;
  double power_;
};

/// Half the cross product of (q - p) and (r - p); positive iff counterclockwise.
double signed_area(Point p, Point q, Point r);

/// Unsigned angle in [0, pi] between rays vertex->p and vertex->q.
double angle_at(Point vertex, Point p, Point q);

/// Signed angle from direction u to direction v, in (-pi, pi].
double signed_angle(Point u, Point v);

Point foot_of_perpendicular(Point p, const Line& l);
Point intersect_lines(const Line& l1, const Line& l2);
Point reflect_across(const Line& l, Point p);
Circle circle_through(Point p, Point q, Point r);

/// Zero, one (tangency) or two points; two are ordered by increasing polar
/// angle about c1's center, measured in (-pi, pi].
std::vector<Point> intersect_circles(const Circle& c1, const Circle& c2);

/// Circle through p and q whose arc on the same side of line pq as `side`
/// sees the chord pq under the angle `phi`.
Circle inscribed_angle_circle(Point p, Point q, double phi, Point side);

Point invert_point(const Inversion& inv, Point p);

}  // namespace hexacycle
