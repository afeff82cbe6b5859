#pragma once

// Test-only helpers: seeded generators and closed-form triangle centers
// computed without going through the library's constructions.

#include <array>
#include <cmath>
#include <random>

#include "hexacycle/extremal.hpp"

namespace hexacycle::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  Point point(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi)}; }

 private:
  std::mt19937_64 engine_;
};

inline double deg(double d) { return d * kPi / 180.0; }

/// Random triangle with vertices in [-10, 10]^2 and every angle >= min_angle.
inline Triangle random_triangle(Rng& rng, double min_angle = deg(10.0)) {
  for (;;) {
    const Point a = rng.point(-10, 10);
    const Point b = rng.point(-10, 10);
    const Point c = rng.point(-10, 10);
    try {
      Triangle t(a, b, c);
      if (t.angle(0) >= min_angle && t.angle(1) >= min_angle && t.angle(2) >= min_angle) return t;
    } catch (const GeometryError&) {
    }
  }
}

/// Random angle triple, each angle >= min_angle.
inline AngleTriple random_angles(Rng& rng, double min_angle = deg(10.0)) {
  for (;;) {
    const double a = rng.uniform(min_angle, kPi - 2 * min_angle);
    const double b = rng.uniform(min_angle, kPi - 2 * min_angle);
    const double c = kPi - a - b;
    if (c >= min_angle) return AngleTriple(a, b, c);
  }
}

/// Solve [a1 b1; a2 b2] (x, y) = (c1, c2) by Cramer's rule.
inline Point solve2(double a1, double b1, double c1, double a2, double b2, double c2) {
  const double det = a1 * b2 - a2 * b1;
  return {(c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det};
}

/// Intersection of the altitudes from A and B: (X - A).(C - B) = 0, (X - B).(C - A) = 0.
inline Point orthocenter(Point a, Point b, Point c) {
  const Point u = c - b;
  const Point v = c - a;
  return solve2(u.x, u.y, dot(u, a), v.x, v.y, dot(v, b));
}

/// Intersection of the perpendicular bisectors of AB and AC.
inline Point circumcenter(Point a, Point b, Point c) {
  const Point u = b - a;
  const Point v = c - a;
  return solve2(u.x, u.y, dot(u, midpoint(a, b)), v.x, v.y, dot(v, midpoint(a, c)));
}

inline Point incenter(Point a, Point b, Point c) {
  const double la = distance(b, c);
  const double lb = distance(c, a);
  const double lc = distance(a, b);
  return (la * a + lb * b + lc * c) / (la + lb + lc);
}

/// Isogonal conjugate through barycentric coordinates (u : v : w) ->
/// (a^2 / u : b^2 / v : c^2 / w).
inline Point isogonal_by_barycentrics(Point a, Point b, Point c, Point p) {
  const double u = signed_area(p, b, c);
  const double v = signed_area(a, p, c);
  const double w = signed_area(a, b, p);
  const double la2 = dot(b - c, b - c);
  const double lb2 = dot(c - a, c - a);
  const double lc2 = dot(a - b, a - b);
  const double x = la2 / u;
  const double y = lb2 / v;
  const double z = lc2 / w;
  return (x * a + y * b + z * c) / (x + y + z);
}

struct Similarity {
  double scale;
  double angle;
  Point shift;
  Point operator()(Point p) const { return scale * rotate(p, angle) + shift; }
};

inline Similarity random_similarity(Rng& rng) {
  return {rng.uniform(0.1, 10.0), rng.uniform(-kPi, kPi), rng.point(-50, 50)};
}

}  // namespace hexacycle::testing
