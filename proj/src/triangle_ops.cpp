#include "hexacycle/triangle_ops.hpp"

#include <algorithm>

namespace hexacycle {

std::string_view side_name(Side s) {
  switch (s) {
    case Side::BC: return "BC";
    case Side::CA: return "CA";
    case Side::AB: return "AB";
  }
  return "?";
}

Triangle::Triangle(Point a, Point b, Point c) : v_{a, b, c} {
  if (!a.finite() || !b.finite() || !c.finite()) {
    throw GeometryError(ErrorKind::InvalidInput, "non-finite triangle vertex");
  }
  const double s = scale();
  if (!(std::abs(hexacycle::signed_area(a, b, c)) > kRelEps * s * s)) {
    throw GeometryError(ErrorKind::InvalidInput, "degenerate triangle");
  }
}

double Triangle::scale() const { return geometry_scale(std::span<const Point>(v_)); }

double Triangle::angle(int i) const {
  return angle_at(vertex(i), vertex((i + 1) % 3), vertex((i + 2) % 3));
}

std::array<Point, 2> Triangle::side_endpoints(Side s) const {
  const int i = index_of(s);
  return {vertex((i + 1) % 3), vertex((i + 2) % 3)};
}

Line Triangle::side_line(Side s) const {
  const auto [p, q] = side_endpoints(s);
  return Line::through(p, q);
}

Circle Triangle::circumcircle() const { return circle_through(v_[0], v_[1], v_[2]); }

Point Homothety::apply(Point p) const {
  if (!center) throw GeometryError(ErrorKind::Degenerate, "homothety center at infinity");
  return *center + ratio * (p - *center);
}

PedalResult pedal_triangle(const Triangle& host, Point p) {
  PedalResult r;
  r.pedal_point = p;
  for (Side s : kSides) {
    r.feet[static_cast<std::size_t>(index_of(s))] = foot_of_perpendicular(p, host.side_line(s));
  }
  r.area = std::abs(signed_area(r.feet[0], r.feet[1], r.feet[2]));
  const double scale = std::max(host.scale(), geometry_scale(std::span<const Point>(r.feet)));
  if (r.area > kRelEps * scale * scale) {
    for (int i = 0; i < 3; ++i) {
      r.angles[static_cast<std::size_t>(i)] =
          angle_at(r.feet[static_cast<std::size_t>(i)], r.feet[static_cast<std::size_t>((i + 1) % 3)],
                   r.feet[static_cast<std::size_t>((i + 2) % 3)]);
    }
  }
  return r;
}

Triangle antipedal_triangle(const Triangle& host, Point p) {
  const double tol = kRelEps * host.scale();
  auto perp_at = [&](int i) {
    const Point v = host.vertex(i);
    if (distance(v, p) <= tol) throw GeometryError(ErrorKind::Degenerate, "antipedal degenerate");
    return Line::with_normal(v - p, v);
  };
  const std::array<Line, 3> perps{perp_at(0), perp_at(1), perp_at(2)};
  try {
    return Triangle(intersect_lines(perps[1], perps[2]), intersect_lines(perps[2], perps[0]),
                    intersect_lines(perps[0], perps[1]));
  } catch (const GeometryError&) {
    throw GeometryError(ErrorKind::Degenerate, "antipedal degenerate");
  }
}

namespace {

// Cevian through vertex i and p, reflected across the internal bisector at i.
Line reflected_cevian(const Triangle& host, int i, Point p) {
  const Point v = host.vertex(i);
  const Point u = normalized(host.vertex((i + 1) % 3) - v);
  const Point w = normalized(host.vertex((i + 2) % 3) - v);
  const Line bisector = Line::with_direction(u + w, v);
  return Line::through(v, reflect_across(bisector, p));
}

}  // namespace

Point isogonal_conjugate(const Triangle& host, Point p) {
  const double tol = kRelEps * host.scale();
  for (Side s : kSides) {
    if (host.side_line(s).distance(p) <= tol) {
      throw GeometryError(ErrorKind::Degenerate, "isogonal undefined");
    }
  }
  const Line la = reflected_cevian(host, 0, p);
  const Line lb = reflected_cevian(host, 1, p);
  try {
    return intersect_lines(la, lb);
  } catch (const GeometryError&) {
    throw GeometryError(ErrorKind::Degenerate, "conjugate at infinity");
  }
}

double isogonal_pair_residual(const Triangle& host, Point p, Point q) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    worst = std::max(worst, reflected_cevian(host, i, p).distance(q));
  }
  return worst;
}

Homothety homothety_between(const Triangle& src, const Triangle& dst, double angle_tol) {
  double ratio_sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    const Point u = src.vertex((i + 1) % 3) - src.vertex(i);
    const Point v = dst.vertex((i + 1) % 3) - dst.vertex(i);
    const double sin_angle = std::abs(cross(u, v)) / (norm(u) * norm(v));
    if (std::asin(std::min(1.0, sin_angle)) > angle_tol) {
      throw GeometryError(ErrorKind::Degenerate, "not homothetic");
    }
    ratio_sum += dot(u, v) / dot(u, u);
  }
  Homothety h;
  h.ratio = ratio_sum / 3.0;
  const double scale = std::max(src.scale(), dst.scale());
  const double tol = 1e-8 * scale;

  if (std::abs(h.ratio - 1.0) <= 1e-12) {
    const Point shift = dst.centroid() - src.centroid();
    if (norm(shift) > tol) {
      h.ratio = 1.0;
      return h;  // translation
    }
    h.center = src.centroid();
    return h;
  }
  Point center{0.0, 0.0};
  for (int i = 0; i < 3; ++i) {
    center = center + (dst.vertex(i) - h.ratio * src.vertex(i)) / (1.0 - h.ratio);
  }
  h.center = center / 3.0;
  for (int i = 0; i < 3; ++i) {
    if (distance(h.apply(src.vertex(i)), dst.vertex(i)) > tol) {
      throw GeometryError(ErrorKind::Degenerate, "not homothetic");
    }
  }
  return h;
}

namespace {

// Parameter s of `b` along from->to, with b = from + s (to - from).
double division_parameter(Point from, Point to, Point b, double tol) {
  const Point d = to - from;
  if (Line::through(from, to).distance(b) > tol) {
    throw GeometryError(ErrorKind::InvalidInput, "point not on side line");
  }
  const double s = dot(b - from, d) / dot(d, d);
  if (std::abs(s) * norm(d) <= tol || std::abs(1.0 - s) * norm(d) <= tol) {
    throw GeometryError(ErrorKind::InvalidInput, "ratio undefined");
  }
  return s;
}

}  // namespace

Triangle inscribe_homothetic(const Triangle& outer, Point b1, Point b2, Point b3) {
  const double tol = kRelEps * outer.scale();
  const Point a1 = outer.a();
  const Point a2 = outer.b();
  const Point a3 = outer.c();
  const double s1 = division_parameter(a2, a3, b1, tol);  // A2B1 / B1A3
  const double s2 = division_parameter(a3, a1, b2, tol);  // A3B2 / B2A1
  const double s3 = division_parameter(a1, a2, b3, tol);  // A1B3 / B3A2
  const Point c1 = b3 + s1 * (b2 - b3);
  const Point c2 = b1 + s2 * (b3 - b1);
  const Point c3 = b2 + s3 * (b1 - b2);
  return Triangle(c1, c2, c3);
}

double pedal_area_ratio(const Triangle& host, Point m) {
  const Circle circ = host.circumcircle();
  const double r2 = circ.radius() * circ.radius();
  const Point om = m - circ.center();
  return std::abs(r2 - dot(om, om)) / (4.0 * r2);
}

}  // namespace hexacycle
