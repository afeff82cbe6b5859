#include "hexacycle/extremal.hpp"

#include <algorithm>
#include <numeric>

namespace hexacycle {

namespace {

// Distance between two angles modulo pi.
double mod_pi_distance(double x, double y) {
  double d = std::fmod(x - y, kPi);
  if (d < 0) d += kPi;
  return std::min(d, kPi - d);
}

constexpr std::array<std::array<Side, 3>, 6> kAssignmentTable{{
    // alpha, beta, gamma
    {Side::AB, Side::BC, Side::CA},
    {Side::AB, Side::CA, Side::BC},
    {Side::BC, Side::AB, Side::CA},
    {Side::CA, Side::AB, Side::BC},
    {Side::BC, Side::CA, Side::AB},
    {Side::CA, Side::BC, Side::AB},
}};

}  // namespace

AngleTriple::AngleTriple(double alpha, double beta, double gamma) : v_{alpha, beta, gamma} {
  for (double a : v_) {
    if (!(a > 0.0) || !(a < kPi)) {
      throw GeometryError(ErrorKind::InvalidInput, "angles must lie in (0, pi)");
    }
  }
  if (std::abs(alpha + beta + gamma - kPi) > 1e-12) {
    throw GeometryError(ErrorKind::InvalidInput, "angles must sum to pi");
  }
}

AngleTriple AngleTriple::from_degrees(double alpha, double beta, double gamma, double sum_tol) {
  const double sum = alpha + beta + gamma;
  if (!(alpha > 0.0 && beta > 0.0 && gamma > 0.0) || !std::isfinite(sum)) {
    throw GeometryError(ErrorKind::InvalidInput, "angles must be positive");
  }
  if (std::abs(sum - 180.0) > sum_tol) {
    throw GeometryError(ErrorKind::InvalidInput, "angles must sum to 180 degrees");
  }
  const double a = alpha / sum * kPi;
  const double b = beta / sum * kPi;
  return AngleTriple(a, b, gamma / sum * kPi);
}

double AngleTriple::max() const { return *std::max_element(v_.begin(), v_.end()); }
double AngleTriple::min() const { return *std::min_element(v_.begin(), v_.end()); }

SideAssignment SideAssignment::from_index(int index) {
  if (index < 1 || index > 6) throw GeometryError(ErrorKind::InvalidInput, "assignment index must be 1..6");
  return SideAssignment(index, kAssignmentTable[static_cast<std::size_t>(index - 1)]);
}

SideAssignment SideAssignment::from_sides(Side alpha_side, Side beta_side, Side gamma_side) {
  const std::array<Side, 3> sides{alpha_side, beta_side, gamma_side};
  for (std::size_t i = 0; i < kAssignmentTable.size(); ++i) {
    if (kAssignmentTable[i] == sides) return SideAssignment(static_cast<int>(i) + 1, sides);
  }
  throw GeometryError(ErrorKind::InvalidInput, "side assignment is not a bijection");
}

std::array<SideAssignment, 6> SideAssignment::all() {
  return {from_index(1), from_index(2), from_index(3), from_index(4), from_index(5), from_index(6)};
}

AngleName SideAssignment::angle_on(Side s) const {
  for (int i = 0; i < 3; ++i) {
    if (side_of_[static_cast<std::size_t>(i)] == s) return static_cast<AngleName>(i);
  }
  throw GeometryError(ErrorKind::InvalidInput, "side not assigned");
}

std::string SideAssignment::describe() const {
  std::string out;
  constexpr std::array<const char*, 3> names{"alpha", "beta", "gamma"};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!out.empty()) out += ' ';
    out += names[i];
    out += ':';
    out += side_name(side_of_[i]);
  }
  return out;
}

const Circle& ArcCircles::over(Side s) const {
  switch (s) {
    case Side::BC: return over_bc;
    case Side::CA: return over_ca;
    case Side::AB: return over_ab;
  }
  return over_ab;
}

ArcCircles arc_circles(const Triangle& ref, const AngleTriple& angles, const SideAssignment& asg) {
  // The circumscribed vertex seeing side s subtends the angle assigned to s
  // and lies across s from the opposite reference vertex.
  auto circle_over = [&](Side s) {
    const auto [p, q] = ref.side_endpoints(s);
    const Point witness = reflect_across(ref.side_line(s), ref.opposite(s));
    return inscribed_angle_circle(p, q, asg.angle_on(s, angles), witness);
  };
  const Circle ab = circle_over(Side::AB);
  const Circle bc = circle_over(Side::BC);
  const Circle ca = circle_over(Side::CA);

  const double scale = ref.scale();
  // (AB) and (BC) share B; their other common point is the reflection of B
  // in the line of centers, which stays accurate when the circles are
  // nearly tangent at B.
  if (distance(ab.center(), bc.center()) <= 1e-12 * scale) throw GeometryError(ErrorKind::Infeasible, "no common point");
  const Point l = reflect_across(Line::through(ab.center(), bc.center()), ref.b());
  if (distance(l, ref.b()) <= 1e-8 * scale) throw GeometryError(ErrorKind::Infeasible, "no common point");
  const double residual = ca.residual(l);
  if (residual > 1e-8 * scale) throw GeometryError(ErrorKind::Infeasible, "no common point");
  for (const Point& v : ref.vertices()) {
    if (distance(l, v) <= 1e-8 * scale) throw GeometryError(ErrorKind::Infeasible, "no common point");
  }
  if (!ref.circumcircle().contains_strictly(l, kRelEps * scale)) {
    throw GeometryError(ErrorKind::Infeasible, "common point outside circumcircle");
  }
  return ArcCircles{ab, bc, ca, l, residual};
}

Triangle max_circumscribed(const ArcCircles& arcs) {
  // The far end of the chord from L through each center.
  const Point l = arcs.common_point;
  return Triangle(2.0 * arcs.over_bc.center() - l, 2.0 * arcs.over_ca.center() - l,
                  2.0 * arcs.over_ab.center() - l);
}

Triangle max_circumscribed(const Triangle& ref, const AngleTriple& angles, const SideAssignment& asg) {
  return max_circumscribed(arc_circles(ref, angles, asg));
}

Triangle circumscribed_by_parallels(const Triangle& ref, const Triangle& inscribed) {
  // Host vertex i lies on the side of the result opposite result vertex i,
  // parallel to the inscribed side opposite inscribed vertex i.
  std::array<Line, 3> lines{
      Line::with_direction(inscribed.c() - inscribed.b(), ref.a()),
      Line::with_direction(inscribed.a() - inscribed.c(), ref.b()),
      Line::with_direction(inscribed.b() - inscribed.a(), ref.c()),
  };
  return Triangle(intersect_lines(lines[1], lines[2]), intersect_lines(lines[2], lines[0]),
                  intersect_lines(lines[0], lines[1]));
}

double collinearity_residual(Point p, Point q, Point r, double scale) {
  const double span = geometry_scale({p, q, r});
  if (span == 0.0) return 0.0;
  return std::abs(cross(q - p, r - p)) / (span * scale);
}

ExtremalConfig min_inscribed(const Triangle& ref, const AngleTriple& angles, const SideAssignment& asg) {
  const ArcCircles arcs = arc_circles(ref, angles, asg);
  const Point l = arcs.common_point;
  const Point k = isogonal_conjugate(ref, l);
  const PedalResult pedal = pedal_triangle(ref, k);
  if (pedal.degenerate()) throw GeometryError(ErrorKind::Degenerate, "minimizer degenerate");
  const Triangle min_tri = pedal.triangle();
  const Triangle max_tri = max_circumscribed(arcs);

  // Orthology point: perpendiculars from Q, R, S to BC, CA, AB.
  auto perpendicular_from = [&](int i) {
    const auto [p, q] = ref.side_endpoints(kSides[static_cast<std::size_t>(i)]);
    return Line::with_normal(q - p, max_tri.vertex(i));
  };
  const Line tq = perpendicular_from(0);
  const Line tr = perpendicular_from(1);
  const Line ts = perpendicular_from(2);
  const Point t = intersect_lines(tq, tr);
  const Homothety h = homothety_between(min_tri, max_tri);
  if (h.at_infinity()) throw GeometryError(ErrorKind::Degenerate, "homothety center at infinity");

  const double scale = ref.scale();
  ExtremalChecks c;
  c.common_point = arcs.residual;
  for (Side s : kSides) {
    const int i = index_of(s);
    c.min_on_sides = std::max(c.min_on_sides, ref.side_line(s).distance(min_tri.vertex(i)));
    const Line max_side = Line::through(max_tri.vertex((i + 1) % 3), max_tri.vertex((i + 2) % 3));
    c.max_circumscribes = std::max(c.max_circumscribes, max_side.distance(ref.vertex(i)));
    const double want = asg.angle_on(s, angles);
    c.min_angle_error = std::max(c.min_angle_error, std::abs(min_tri.angle(i) - want));
    c.max_angle_error = std::max(c.max_angle_error, std::abs(max_tri.angle(i) - want));
  }
  c.geometric_mean_rel = std::abs(min_tri.area() * max_tri.area() / (ref.area() * ref.area()) - 1.0);
  c.lk_isogonal = isogonal_pair_residual(ref, l, k);
  c.tl_isogonal = isogonal_pair_residual(max_tri, t, l);
  c.orthology = ts.distance(t);
  c.okt_collinear = collinearity_residual(*h.center, k, t, scale);
  {
    const Point sq = max_tri.vertex(0) - max_tri.vertex(2);
    const Point o1o2 = arcs.over_bc.center() - arcs.over_ab.center();
    c.sq_parallel = std::asin(std::min(1.0, std::abs(cross(sq, o1o2)) / (norm(sq) * norm(o1o2))));
  }

  return ExtremalConfig{ref, angles, asg, min_tri, max_tri, k, l, t, *h.center, h.ratio, arcs, c};
}

InversePedalPair inverse_pedal_pair(const Triangle& ref, Point m) {
  const Circle circ = ref.circumcircle();
  const double r = circ.radius();
  const double om = distance(m, circ.center());
  if (om <= kRelEps * r) throw GeometryError(ErrorKind::Degenerate, "inverse at infinity");
  if (std::abs(om - r) <= kRelEps * r) throw GeometryError(ErrorKind::Degenerate, "fixed point, pedals degenerate");
  if (om > r) throw GeometryError(ErrorKind::InvalidInput, "point must lie inside the circumcircle");

  InversePedalPair out;
  out.m = m;
  out.n = invert_point(Inversion(circ.center(), r * r), m);
  out.pedal_m = pedal_triangle(ref, m);
  out.pedal_n = pedal_triangle(ref, out.n);
  if (out.pedal_m.degenerate() || out.pedal_n.degenerate()) {
    throw GeometryError(ErrorKind::Degenerate, "degenerate pedal triangle");
  }
  const double on = distance(out.n, circ.center());
  out.area_ratio = out.pedal_m.area / out.pedal_n.area;
  out.predicted_ratio = (r * r - om * om) / (on * on - r * r);
  out.power_error = std::abs(om * on - r * r) / (r * r);
  out.angle_error = pedal_shape_mismatch(ref, m, out.n);
  return out;
}

double pedal_shape_mismatch(const Triangle& ref, Point p, Point q) {
  const PedalResult pp = pedal_triangle(ref, p);
  const PedalResult pq = pedal_triangle(ref, q);
  if (pp.degenerate() || pq.degenerate()) throw GeometryError(ErrorKind::Degenerate, "degenerate pedal triangle");
  double worst = 0.0;
  for (Side s : kSides) worst = std::max(worst, std::abs(*pp.angle(s) - *pq.angle(s)));
  return worst;
}

std::array<double, 3> verify_angle_relations(const Triangle& ref, Point m) {
  const PedalResult pedal = pedal_triangle(ref, m);
  if (pedal.degenerate()) throw GeometryError(ErrorKind::Degenerate, "degenerate pedal triangle");
  std::array<double, 3> residual{};
  for (Side s : kSides) {
    // Side s runs from vertex j to vertex k; w is the opposite vertex.
    const int i = index_of(s);
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    const Point w = ref.vertex(i);
    const Point vj = ref.vertex(j);
    const Point vk = ref.vertex(k);
    const Point foot = pedal.feet[static_cast<std::size_t>(i)];
    const double at_foot = signed_angle(pedal.feet[static_cast<std::size_t>(k)] - foot,
                                        pedal.feet[static_cast<std::size_t>(j)] - foot);
    const double predicted = signed_angle(vj - w, vk - w) - signed_angle(vj - m, vk - m);
    residual[static_cast<std::size_t>(i)] = mod_pi_distance(at_foot, predicted);
  }
  return residual;
}

}  // namespace hexacycle
