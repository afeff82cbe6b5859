#include "hexacycle/geom_core.hpp"

#include <algorithm>
#include <array>

namespace hexacycle {

Point rotate(Point v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

Point normalized(Point v) {
  const double n = norm(v);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw GeometryError(ErrorKind::Degenerate, "zero-length vector");
  }
  return v / n;
}

double geometry_scale(std::span<const Point> points) {
  double d = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      d = std::max(d, distance(points[i], points[j]));
    }
  }
  return d;
}

double geometry_scale(std::initializer_list<Point> points) {
  return geometry_scale(std::span<const Point>(points.begin(), points.size()));
}

Line::Line(double a, double b, double c) {
  const double n = std::hypot(a, b);
  if (!(n > 0.0) || !std::isfinite(n) || !std::isfinite(c)) {
    throw GeometryError(ErrorKind::Degenerate, "invalid line");
  }
  a_ = a / n;
  b_ = b / n;
  c_ = c / n;
}

Line Line::through(Point p, Point q) {
  if (p == q) throw GeometryError(ErrorKind::Degenerate, "line through coincident points");
  return with_direction(q - p, p);
}

Line Line::with_normal(Point normal, Point p) {
  const Point n = normalized(normal);
  return Line(n.x, n.y, dot(n, p));
}

Line Line::with_direction(Point direction, Point p) {
  return with_normal(perp(direction), p);
}

Circle::Circle(Point center, double radius) : center_(center), radius_(radius) {
  if (!(radius > 0.0) || !std::isfinite(radius) || !center.finite()) {
    throw GeometryError(ErrorKind::Degenerate, "invalid circle");
  }
}

Inversion::Inversion(Point center, double power) : center_(center), power_(power) {
  if (!(power > 0.0) || !std::isfinite(power) || !center.finite()) {
    throw GeometryError(ErrorKind::InvalidInput, "inversion power must be positive");
  }
}

double signed_area(Point p, Point q, Point r) { return 0.5 * cross(q - p, r - p); }

double angle_at(Point vertex, Point p, Point q) {
  const Point u = p - vertex;
  const Point v = q - vertex;
  const double scale = geometry_scale({vertex, p, q});
  if (norm(u) <= kRelEps * scale || norm(v) <= kRelEps * scale) {
    throw GeometryError(ErrorKind::Degenerate, "degenerate ray");
  }
  return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

double signed_angle(Point u, Point v) { return std::atan2(cross(u, v), dot(u, v)); }

Point foot_of_perpendicular(Point p, const Line& l) {
  return p - l.signed_distance(p) * l.normal();
}

Point intersect_lines(const Line& l1, const Line& l2) {
  const double det = l1.a() * l2.b() - l2.a() * l1.b();
  if (std::abs(det) < 1e-12) {
    throw GeometryError(ErrorKind::Degenerate, "parallel lines");
  }
  return {(l1.c() * l2.b() - l2.c() * l1.b()) / det, (l1.a() * l2.c() - l2.a() * l1.c()) / det};
}

Point reflect_across(const Line& l, Point p) {
  return p - 2.0 * l.signed_distance(p) * l.normal();
}

Circle circle_through(Point p, Point q, Point r) {
  // Solve relative to p to keep the cancellation local.
  const Point u = q - p;
  const Point v = r - p;
  const double d = 2.0 * cross(u, v);
  const double scale = geometry_scale({p, q, r});
  if (std::abs(d) <= 2.0 * kRelEps * scale * scale) {
    throw GeometryError(ErrorKind::Degenerate, "collinear points");
  }
  const double uu = dot(u, u);
  const double vv = dot(v, v);
  const Point offset{(v.y * uu - u.y * vv) / d, (u.x * vv - v.x * uu) / d};
  return Circle(p + offset, norm(offset));
}

std::vector<Point> intersect_circles(const Circle& c1, const Circle& c2) {
  const Point delta = c2.center() - c1.center();
  const double d = norm(delta);
  const double r1 = c1.radius();
  const double r2 = c2.radius();
  const double tol = kRelEps * std::max(r1, r2);
  if (d <= tol) {
    if (std::abs(r1 - r2) <= tol) throw GeometryError(ErrorKind::Degenerate, "coincident circles");
    return {};
  }
  if (d > r1 + r2 + tol || d < std::abs(r1 - r2) - tol) return {};

  const Point e = delta / d;
  // Distance from c1's center to the radical line along e.
  const double along = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
  const double h2 = r1 * r1 - along * along;
  const Point base = c1.center() + along * e;
  if (std::abs(d - (r1 + r2)) <= tol || std::abs(d - std::abs(r1 - r2)) <= tol || h2 <= 0.0) {
    // Tangency: the single contact point lies on the center line.
    return {c1.center() + std::clamp(along, -r1, r1) * e};
  }
  const double h = std::sqrt(h2);
  std::array<Point, 2> pts{base - h * perp(e), base + h * perp(e)};
  auto polar = [&](Point p) { return std::atan2(p.y - c1.center().y, p.x - c1.center().x); };
  if (polar(pts[0]) > polar(pts[1])) std::swap(pts[0], pts[1]);
  return {pts[0], pts[1]};
}

Circle inscribed_angle_circle(Point p, Point q, double phi, Point side) {
  if (!(phi > 0.0) || !(phi < kPi)) {
    throw GeometryError(ErrorKind::InvalidInput, "inscribed angle out of range (0, pi)");
  }
  const Line chord = Line::through(p, q);
  const double scale = geometry_scale({p, q, side});
  const double s = chord.signed_distance(side);
  if (std::abs(s) <= kRelEps * scale) {
    throw GeometryError(ErrorKind::Degenerate, "side witness collinear with chord");
  }
  const Point n = s > 0 ? chord.normal() : -chord.normal();
  const double half = 0.5 * distance(p, q);
  const Point center = midpoint(p, q) + (half * std::cos(phi) / std::sin(phi)) * n;
  return Circle(center, half / std::sin(phi));
}

Point invert_point(const Inversion& inv, Point p) {
  const Point v = p - inv.center();
  const double d2 = dot(v, v);
  // Relative to the inversion radius, the natural length of the map.
  if (d2 <= (kRelEps * kRelEps) * inv.power()) {
    throw GeometryError(ErrorKind::Degenerate, "inversion center");
  }
  return inv.center() + (inv.power() / d2) * v;
}

}  // namespace hexacycle
