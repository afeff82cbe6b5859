#include "hexacycle/six_circle.hpp"

#include <Eigen/Dense>
#include <algorithm>

namespace hexacycle {

std::string_view fit_status_name(FitStatus s) {
  switch (s) {
    case FitStatus::Ok: return "ok";
    case FitStatus::Coincident: return "degenerate: coincident";
    case FitStatus::Collinear: return "degenerate: collinear";
    case FitStatus::Insufficient: return "degenerate: fewer than three points";
  }
  return "?";
}

namespace {

std::optional<Circle> best_triple_circle(std::span<const Point> pts) {
  double best = 0.0;
  std::optional<Circle> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        const double s = geometry_scale({pts[i], pts[j], pts[k]});
        const double q = std::abs(signed_area(pts[i], pts[j], pts[k])) / (s * s);
        if (q > best) {
          try {
            out = circle_through(pts[i], pts[j], pts[k]);
            best = q;
          } catch (const GeometryError&) {
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

CircleFit fit_circle(std::span<const Point> points, double scale, double coincident_tol) {
  if (points.size() < 3) throw GeometryError(ErrorKind::InvalidInput, "circle fit needs at least 3 points");
  CircleFit fit;
  const double diam = geometry_scale(points);
  if (diam <= coincident_tol * scale) {
    fit.status = FitStatus::Coincident;
    return fit;
  }

  // Work in coordinates centered on the centroid and scaled by the diameter.
  Point centroid{0.0, 0.0};
  for (const Point& p : points) centroid = centroid + p;
  centroid = centroid / static_cast<double>(points.size());
  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd a(n, 3);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Point u = (points[static_cast<std::size_t>(i)] - centroid) / diam;
    a(i, 0) = u.x;
    a(i, 1) = u.y;
    a(i, 2) = 1.0;
    rhs(i) = -(u.x * u.x + u.y * u.y);
  }
  // Exactly collinear points make the design matrix rank 2.
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  qr.setThreshold(1e-12);
  if (qr.rank() < 3) {
    fit.status = FitStatus::Collinear;
    return fit;
  }
  const Eigen::Vector3d def = qr.solve(rhs);
  double cx = -0.5 * def(0);
  double cy = -0.5 * def(1);
  const double r2 = cx * cx + cy * cy - def(2);
  if (!(r2 > 0.0) || !std::isfinite(r2) || std::sqrt(r2) * diam > 1e6 * scale) {
    fit.status = FitStatus::Collinear;
    return fit;
  }
  double r = std::sqrt(r2);

  // One Gauss-Newton step on the geometric distances.
  Eigen::MatrixXd jac(n, 3);
  Eigen::VectorXd res(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Point u = (points[static_cast<std::size_t>(i)] - centroid) / diam;
    const double dx = u.x - cx;
    const double dy = u.y - cy;
    const double d = std::hypot(dx, dy);
    res(i) = d - r;
    jac(i, 0) = d > 0 ? -dx / d : 0.0;
    jac(i, 1) = d > 0 ? -dy / d : 0.0;
    jac(i, 2) = -1.0;
  }
  const Eigen::Vector3d step = jac.colPivHouseholderQr().solve(-res);
  cx += step(0);
  cy += step(1);
  r += step(2);
  if (!(r > 0.0) || r * diam > 1e6 * scale) {
    fit.status = FitStatus::Collinear;
    return fit;
  }

  const Circle circle(centroid + diam * Point{cx, cy}, r * diam);
  fit.status = FitStatus::Ok;
  fit.circle = circle;
  for (const Point& p : points) fit.max_residual = std::max(fit.max_residual, circle.residual(p));
  fit.triple_circle = best_triple_circle(points);
  return fit;
}

PedalPointConstruction pedal_point_for(const Triangle& ref, const AngleTriple& angles, const SideAssignment& asg) {
  const double angle_ab = ref.angle(2) + asg.angle_on(Side::AB, angles);
  const double angle_ca = ref.angle(1) + asg.angle_on(Side::CA, angles);
  const double angle_bc = ref.angle(0) + asg.angle_on(Side::BC, angles);
  if (angle_ab >= kPi || angle_ca >= kPi || angle_bc >= kPi) {
    throw GeometryError(ErrorKind::Infeasible, "assignment infeasible (angle sum)");
  }
  const Point a = ref.a();
  const Point b = ref.b();
  const Point c = ref.c();
  const Circle circle_ab = inscribed_angle_circle(a, b, angle_ab, c);
  const Circle circle_ca = inscribed_angle_circle(a, c, angle_ca, b);
  const Circle circle_bc = inscribed_angle_circle(b, c, angle_bc, a);

  const double scale = ref.scale();
  const auto meets = intersect_circles(circle_ab, circle_ca);
  if (meets.empty()) throw GeometryError(ErrorKind::Infeasible, "no interior pedal point");
  const Point m = *std::max_element(meets.begin(), meets.end(),
                                    [&](Point x, Point y) { return distance(x, a) < distance(y, a); });
  if (distance(m, a) <= 1e-8 * scale || !ref.circumcircle().contains_strictly(m, kRelEps * scale)) {
    throw GeometryError(ErrorKind::Infeasible, "no interior pedal point");
  }
  return PedalPointConstruction{asg, m, circle_ab, circle_ca, circle_bc, circle_bc.residual(m)};
}

std::array<PedalPointConstruction, 6> six_pedal_points(const Triangle& ref, const AngleTriple& angles) {
  const auto asgs = SideAssignment::all();
  return {pedal_point_for(ref, angles, asgs[0]), pedal_point_for(ref, angles, asgs[1]),
          pedal_point_for(ref, angles, asgs[2]), pedal_point_for(ref, angles, asgs[3]),
          pedal_point_for(ref, angles, asgs[4]), pedal_point_for(ref, angles, asgs[5])};
}

bool all_assignments_feasible(const Triangle& ref, const AngleTriple& angles) {
  const double worst_ref = std::max({ref.angle(0), ref.angle(1), ref.angle(2)});
  return worst_ref + angles.max() < kPi;
}

namespace {

SixPointEntry build_entry(const Triangle& ref, const AngleTriple& angles, const SideAssignment& asg) {
  SixPointEntry e{asg, std::nullopt, {}, std::nullopt, {}, 0.0, 0.0, std::nullopt, std::nullopt, {}};
  try {
    e.construction = pedal_point_for(ref, angles, asg);
  } catch (const GeometryError& err) {
    e.error = err.what();
    return e;
  }
  const Point m = e.construction->point;
  e.angle_sum_error =
      std::abs(angle_at(m, ref.a(), ref.b()) + angle_at(m, ref.b(), ref.c()) + angle_at(m, ref.c(), ref.a()) -
               2.0 * kPi);
  try {
    e.extremal_point = min_inscribed(ref, angles, asg).pedal_point;
    e.route_disagreement = distance(*e.extremal_point, m);
  } catch (const GeometryError& err) {
    e.extremal_error = err.what();
  }
  try {
    const Triangle anti = antipedal_triangle(ref, m);
    e.antipedal_angles = std::array<double, 3>{anti.angle(0), anti.angle(1), anti.angle(2)};
  } catch (const GeometryError&) {
  }
  return e;
}

}  // namespace

SixPointReport six_point_theorem_check(const Triangle& ref, const AngleTriple& angles, const SixPointOptions& options) {
  const auto asgs = SideAssignment::all();
  SixPointReport report{ref,
                        angles,
                        {build_entry(ref, angles, asgs[0]), build_entry(ref, angles, asgs[1]),
                         build_entry(ref, angles, asgs[2]), build_entry(ref, angles, asgs[3]),
                         build_entry(ref, angles, asgs[4]), build_entry(ref, angles, asgs[5])},
                        {},
                        {},
                        0,
                        std::nullopt,
                        {},
                        false,
                        false};

  for (int i = 0; i < 3; ++i) {
    const double x = angles[static_cast<AngleName>(i)];
    const auto slot = static_cast<std::size_t>(i);
    if (ref.angle(2) + x < kPi) report.defining_circles[slot] = inscribed_angle_circle(ref.a(), ref.b(), ref.angle(2) + x, ref.c());
    if (ref.angle(1) + x < kPi) report.defining_circles[slot + 3] = inscribed_angle_circle(ref.a(), ref.c(), ref.angle(1) + x, ref.b());
  }

  const double scale = ref.scale();
  std::vector<Point> interior;
  for (const auto& e : report.entries) {
    if (e.construction) interior.push_back(e.construction->point);
  }
  report.interior_count = interior.size();
  if (interior.size() < 3) {
    report.interior_fit.status = FitStatus::Insufficient;
    report.exterior_skip_reason = "fewer than three interior points";
    return report;
  }
  report.interior_fit = fit_circle(interior, scale, options.coincident_tol);
  report.interior_pass =
      report.interior_fit.status == FitStatus::Coincident ||
      (report.interior_fit.status == FitStatus::Ok &&
       report.interior_fit.max_residual <= options.concyclic_tol * report.interior_fit.circle->radius());

  const Circle circ = ref.circumcircle();
  const Inversion inversion(circ.center(), circ.radius() * circ.radius());
  std::vector<Point> exterior;
  for (auto& e : report.entries) {
    if (!e.construction) continue;
    if (distance(e.construction->point, circ.center()) <= options.coincident_tol * circ.radius()) {
      e.exterior_error = "undefined (center)";
      report.exterior_skip_reason = "undefined (center)";
      continue;
    }
    e.exterior = invert_point(inversion, e.construction->point);
    exterior.push_back(*e.exterior);
  }
  if (!report.exterior_skip_reason.empty()) {
    report.exterior_pass = true;
    return report;
  }
  const double exterior_scale = std::max(scale, geometry_scale(exterior));
  report.exterior_fit = fit_circle(exterior, exterior_scale, options.coincident_tol);
  report.exterior_pass =
      report.exterior_fit->status == FitStatus::Coincident ||
      (report.exterior_fit->status == FitStatus::Ok &&
       report.exterior_fit->max_residual <= options.exterior_tol * report.exterior_fit->circle->radius());
  return report;
}

}  // namespace hexacycle
