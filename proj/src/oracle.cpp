#include "hexacycle/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace hexacycle::oracle {

namespace {

constexpr double kInvPhi = 0.6180339887498948482;  // 1 / golden ratio

struct Refined {
  double x;
  double value;
  int iterations;
};

// Minimizes f on [lo, hi] by golden-section search down to width `tol`.
Refined golden_section_min(const std::function<double(double)>& f, double lo, double hi, double tol) {
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  int it = 0;
  while (hi - lo > tol && it < 400) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    }
    ++it;
  }
  return f1 <= f2 ? Refined{x1, f1, it} : Refined{x2, f2, it};
}

bool angles_match(const Triangle& t, const AngleTriple& angles, const SideAssignment& asg, double tol) {
  for (Side s : kSides) {
    if (std::abs(t.angle(index_of(s)) - asg.angle_on(s, angles)) > tol) return false;
  }
  return true;
}

std::optional<Triangle> make_triangle(Point a, Point b, Point c) {
  if (!a.finite() || !b.finite() || !c.finite()) return std::nullopt;
  try {
    return Triangle(a, b, c);
  } catch (const GeometryError&) {
    return std::nullopt;
  }
}

// Shared driver: grid, pick the best cell, golden-section refine around it.
// `value` returns +inf where the family has no member.
template <typename Member>
SweepResult sweep(Member member, double lo, double span, int grid, bool maximize, bool periodic) {
  if (grid < 360) throw GeometryError(ErrorKind::InvalidInput, "grid must be at least 360");
  SweepResult out;
  out.samples.reserve(static_cast<std::size_t>(grid));
  const double step = span / (periodic ? grid : grid + 1);
  auto objective = [&](double theta) {
    const auto t = member(theta);
    if (!t) return std::numeric_limits<double>::infinity();
    return maximize ? -t->area() : t->area();
  };

  std::optional<std::size_t> best;
  for (int i = 0; i < grid; ++i) {
    const double theta = lo + step * (periodic ? i : i + 1);
    FamilySample s;
    s.theta = theta;
    s.triangle = member(theta);
    s.area = s.triangle ? s.triangle->area() : std::numeric_limits<double>::quiet_NaN();
    out.samples.push_back(s);
    if (!s.triangle) continue;
    const double v = maximize ? -s.area : s.area;
    if (!best || v < (maximize ? -out.samples[*best].area : out.samples[*best].area)) best = out.samples.size() - 1;
  }
  if (!best) throw GeometryError(ErrorKind::Infeasible, "empty family");

  const double center = out.samples[*best].theta;
  double a = center - step;
  double b = center + step;
  if (!periodic) {
    a = std::max(a, lo);
    b = std::min(b, lo + span);
  }
  const Refined r = golden_section_min(objective, a, b, 1e-12 * kPi);
  out.refinement_iterations = r.iterations;

  const double grid_value = maximize ? -out.samples[*best].area : out.samples[*best].area;
  double theta = center;
  if (std::isfinite(r.value) && r.value <= grid_value) theta = r.x;
  if (periodic) {
    theta = std::fmod(theta - lo, span);
    if (theta < 0) theta += span;
    theta += lo;
  }
  out.extremum_theta = theta;
  out.extremum_triangle = member(theta);
  if (!out.extremum_triangle) {
    out.extremum_theta = center;
    out.extremum_triangle = out.samples[*best].triangle;
  }
  out.extremum_area = out.extremum_triangle->area();
  return out;
}

}  // namespace

std::optional<Triangle> inscribed_member(const Triangle& ref, const AngleTriple& angles, const SideAssignment& asg,
                                         double theta) {
  // X on BC, Y on CA, Z on AB. X = B + t (C - B); the directions of XZ and XY
  // are fixed by theta, so Y and Z are affine in t and the shape condition
  // |XZ| sin(Z) = |XY| sin(Y) pins t.
  const double ax = asg.angle_on(Side::BC, angles);
  const double ay = asg.angle_on(Side::CA, angles);
  const double az = asg.angle_on(Side::AB, angles);
  const Point u{std::cos(theta), std::sin(theta)};
  const Point w = rotate(u, -ref.orientation() * ax);

  const Point p0 = ref.b();
  const Point d = ref.c() - ref.b();
  const Line line_ca = ref.side_line(Side::CA);
  const Line line_ab = ref.side_line(Side::AB);

  const double nu = dot(line_ab.normal(), u);
  const double nw = dot(line_ca.normal(), w);
  constexpr double kSingular = 1e-14;
  if (std::abs(nu) < kSingular || std::abs(nw) < kSingular) return std::nullopt;
  // Z = X + lambda u, Y = X + mu w.
  const double lambda0 = -line_ab.signed_distance(p0) / nu;
  const double lambda1 = -dot(line_ab.normal(), d) / nu;
  const double mu0 = -line_ca.signed_distance(p0) / nw;
  const double mu1 = -dot(line_ca.normal(), d) / nw;
  const double sy = std::sin(ay);
  const double sz = std::sin(az);
  const double denom = lambda1 * sz - mu1 * sy;
  if (std::abs(denom) < kSingular * (std::abs(lambda1) + std::abs(mu1))) return std::nullopt;
  const double t = (mu0 * sy - lambda0 * sz) / denom;

  const Point x = p0 + t * d;
  const Point z = x + (lambda0 + lambda1 * t) * u;
  const Point y = x + (mu0 + mu1 * t) * w;
  return make_triangle(x, y, z);
}

SweepResult inscribed_family_min(const Triangle& ref, const AngleTriple& angles, const SideAssignment& asg,
                                 int grid) {
  auto member = [&](double theta) { return inscribed_member(ref, angles, asg, theta); };
  return sweep(member, 0.0, kPi, grid, /*maximize=*/false, /*periodic=*/true);
}

SweepResult circumscribed_family_max(const Triangle& ref, const AngleTriple& angles, const SideAssignment& asg,
                                     int grid) {
  const Point a = ref.a();
  const Point b = ref.b();
  const Point c = ref.c();
  auto far_side = [&](Side s) { return reflect_across(ref.side_line(s), ref.opposite(s)); };
  const Circle over_ab = inscribed_angle_circle(a, b, asg.angle_on(Side::AB, angles), far_side(Side::AB));
  const Circle over_bc = inscribed_angle_circle(b, c, asg.angle_on(Side::BC, angles), far_side(Side::BC));
  const Circle over_ca = inscribed_angle_circle(c, a, asg.angle_on(Side::CA, angles), far_side(Side::CA));

  const Point o1 = over_ab.center();
  const double scale = ref.scale();

  // Second intersection of the line through `on` (a point of `circle`) with
  // direction `dir`.
  auto second_hit = [](const Circle& circle, Point on, Point dir) {
    const double s = -2.0 * dot(dir, on - circle.center()) / dot(dir, dir);
    return on + s * dir;
  };
  auto member = [&](double psi) -> std::optional<Triangle> {
    const Point s = o1 + over_ab.radius() * Point{std::cos(psi), std::sin(psi)};
    if (distance(s, a) <= kRelEps * scale || distance(s, b) <= kRelEps * scale) return std::nullopt;
    const Point q = second_hit(over_bc, b, b - s);
    const Point r = second_hit(over_ca, a, a - s);
    if (distance(q, r) <= kRelEps * scale) return std::nullopt;
    if (Line::through(q, r).distance(c) > 1e-8 * scale) return std::nullopt;
    auto t = make_triangle(q, r, s);
    if (!t || !angles_match(*t, angles, asg, 1e-9)) return std::nullopt;
    return t;
  };
  // S ranges over the whole circle: with an obtuse reference the maximizer's
  // S can sit on the arc on C's side of AB. The filter in `member` keeps only
  // genuine members.
  return sweep(member, 0.0, 2.0 * kPi, grid, /*maximize=*/true, /*periodic=*/true);
}

std::pair<Circle, double> reference_circle_fit(std::span<const Point> points) {
  if (points.size() < 3) throw GeometryError(ErrorKind::InvalidInput, "reference fit needs at least 3 points");
  const double n = static_cast<double>(points.size());
  double mx = 0.0;
  double my = 0.0;
  for (const Point& p : points) {
    mx += p.x;
    my += p.y;
  }
  mx /= n;
  my /= n;
  double suu = 0, suv = 0, svv = 0, suuu = 0, svvv = 0, suvv = 0, svuu = 0;
  for (const Point& p : points) {
    const double u = p.x - mx;
    const double v = p.y - my;
    suu += u * u;
    suv += u * v;
    svv += v * v;
    suuu += u * u * u;
    svvv += v * v * v;
    suvv += u * v * v;
    svuu += v * u * u;
  }
  const double det = suu * svv - suv * suv;
  if (!(std::abs(det) > 1e-12 * (suu + svv) * (suu + svv))) {
    throw GeometryError(ErrorKind::Degenerate, "collinear points");
  }
  const double bu = 0.5 * (suuu + suvv);
  const double bv = 0.5 * (svvv + svuu);
  const double uc = (bu * svv - bv * suv) / det;
  const double vc = (suu * bv - suv * bu) / det;
  const Circle circle({mx + uc, my + vc}, std::sqrt(uc * uc + vc * vc + (suu + svv) / n));
  double worst = 0.0;
  for (const Point& p : points) worst = std::max(worst, circle.residual(p));
  return {circle, worst};
}

}  // namespace hexacycle::oracle
