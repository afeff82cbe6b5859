#include "instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace hexacycle::app {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Fixed tolerances of the identities; the CLI tolerances cover concyclicity
// and incidence only.
constexpr double kAngleTol = 1e-9;
constexpr double kAreaIdentityTol = 1e-9;
constexpr double kPedalAreaTol = 1e-10;
constexpr double kRouteTol = 1e-7;
constexpr double kOracleAgreeTol = 1e-6;
constexpr double kOracleSlackTol = 1e-9;

class CheckSet {
 public:
  void add(const std::string& name, double value, double tolerance) {
    // NaN is a failure, never a pass.
    if (std::isnan(value)) value = kInf;
    for (Check& c : checks_) {
      if (c.name == name) {
        c.value = std::max(c.value, value);
        return;
      }
    }
    checks_.push_back(Check{name, value, tolerance});
  }
  const std::vector<Check>& checks() const { return checks_; }

 private:
  std::vector<Check> checks_;
};

TheoremResult make_theorem(std::string name, const CheckSet& checks, bool failed_construction, bool infeasible,
                           bool any_data, std::vector<std::string> notes = {}) {
  TheoremResult t;
  t.name = std::move(name);
  t.checks = checks.checks();
  t.verdict = combine(t.checks, failed_construction, infeasible, any_data);
  t.notes = std::move(notes);
  return t;
}

double relative_gap(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Infeasible: return "INFEASIBLE";
    case Verdict::Skipped: return "SKIPPED";
  }
  return "?";
}

Verdict combine(const std::vector<Check>& checks, bool any_failed_construction, bool any_infeasible, bool any_data) {
  if (any_failed_construction) return Verdict::Fail;
  for (const Check& c : checks) {
    if (!c.pass()) return Verdict::Fail;
  }
  if (any_infeasible) return Verdict::Infeasible;
  return any_data ? Verdict::Pass : Verdict::Skipped;
}

bool InstanceResult::failed() const {
  return std::any_of(theorems.begin(), theorems.end(), [](const TheoremResult& t) { return t.verdict == Verdict::Fail; });
}

bool InstanceResult::infeasible() const {
  return std::any_of(theorems.begin(), theorems.end(),
                     [](const TheoremResult& t) { return t.verdict == Verdict::Infeasible; });
}

int InstanceResult::exit_code() const {
  if (infeasible()) return kExitInfeasible;
  if (failed()) return kExitFail;
  return kExitPass;
}

InstanceResult evaluate_instance(const Triangle& ref, const AngleTriple& angles, const Tolerances& tol, int grid) {
  SixPointOptions options;
  options.concyclic_tol = tol.concyclic;
  options.exterior_tol = tol.exterior;
  InstanceResult r{ref, angles, six_point_theorem_check(ref, angles, options), {}, {}};
  const double scale = ref.scale();
  const double ref_area = ref.area();

  for (const SideAssignment& asg : SideAssignment::all()) {
    AssignmentResult a{asg, std::nullopt, {}, false, std::nullopt, {}, std::nullopt, std::nullopt};
    try {
      a.extremal = min_inscribed(ref, angles, asg);
    } catch (const GeometryError& e) {
      a.extremal_error = e.what();
      a.extremal_infeasible = e.kind() == ErrorKind::Infeasible;
    }
    if (a.extremal) {
      try {
        a.inverse = inverse_pedal_pair(ref, a.extremal->pedal_point);
      } catch (const GeometryError& e) {
        a.inverse_error = e.what();
      }
      if (grid > 0) {
        try {
          a.oracle_min = oracle::inscribed_family_min(ref, angles, asg, grid);
        } catch (const GeometryError&) {
        }
        try {
          a.oracle_max = oracle::circumscribed_family_max(ref, angles, asg, grid);
        } catch (const GeometryError&) {
        }
      }
    }
    r.assignments.push_back(std::move(a));
  }

  const bool six_infeasible =
      std::any_of(r.six.entries.begin(), r.six.entries.end(), [](const SixPointEntry& e) { return !e.construction; });
  const bool extremal_infeasible = std::any_of(r.assignments.begin(), r.assignments.end(),
                                               [](const AssignmentResult& a) { return a.extremal_infeasible; });
  const bool extremal_broken = std::any_of(r.assignments.begin(), r.assignments.end(), [](const AssignmentResult& a) {
    return !a.extremal && !a.extremal_infeasible;
  });
  const bool any_extremal =
      std::any_of(r.assignments.begin(), r.assignments.end(), [](const AssignmentResult& a) { return a.extremal.has_value(); });

  // Six points on a circle.
  {
    CheckSet cs;
    std::vector<std::string> notes{std::string("interior fit: ") + std::string(fit_status_name(r.six.interior_fit.status))};
    if (r.six.interior_count >= 3) {
      double value = 0.0;
      if (r.six.interior_fit.status == FitStatus::Ok) {
        value = r.six.interior_fit.relative_residual();
      } else if (r.six.interior_fit.status != FitStatus::Coincident) {
        value = kInf;
      }
      cs.add("relative_residual", value, tol.concyclic);
    }
    for (const SixPointEntry& e : r.six.entries) {
      if (!e.construction) continue;
      cs.add("angle_sum", e.angle_sum_error, kAngleTol);
      cs.add("third_circle", e.construction->third_circle_residual / scale, tol.construct);
    }
    r.theorems.push_back(make_theorem("six_point_circle", cs, false, six_infeasible, r.six.interior_count >= 3,
                                      std::move(notes)));
  }

  // Their inverses on a circle.
  {
    CheckSet cs;
    std::vector<std::string> notes;
    bool data = false;
    if (r.six.exterior_fit) {
      data = true;
      notes.push_back(std::string("exterior fit: ") + std::string(fit_status_name(r.six.exterior_fit->status)));
      double value = 0.0;
      if (r.six.exterior_fit->status == FitStatus::Ok) {
        value = r.six.exterior_fit->relative_residual();
      } else if (r.six.exterior_fit->status != FitStatus::Coincident) {
        value = kInf;
      }
      cs.add("relative_residual", value, tol.exterior);
    } else if (!r.six.exterior_skip_reason.empty()) {
      notes.push_back("exterior fit skipped: " + r.six.exterior_skip_reason);
    }
    r.theorems.push_back(make_theorem("exterior_circle", cs, false, six_infeasible, data, std::move(notes)));
  }

  // |min| |max| = |ref|^2.
  {
    CheckSet cs;
    for (const AssignmentResult& a : r.assignments) {
      if (a.extremal) cs.add("relative_error", a.extremal->checks.geometric_mean_rel, kAreaIdentityTol);
    }
    r.theorems.push_back(make_theorem("geometric_mean", cs, extremal_broken, extremal_infeasible, any_extremal));
  }

  // Incidences, angles, isogonal pairs, orthology and collinearity.
  {
    CheckSet cs;
    std::vector<std::string> notes;
    for (const AssignmentResult& a : r.assignments) {
      if (!a.extremal) {
        if (!a.extremal_error.empty()) notes.push_back(fmt::format("assignment {}: {}", a.assignment.index(), a.extremal_error));
        continue;
      }
      const ExtremalChecks& c = a.extremal->checks;
      const double max_scale = a.extremal->max_triangle.scale();
      cs.add("min_on_sides", c.min_on_sides / scale, tol.construct);
      cs.add("max_circumscribes", c.max_circumscribes / scale, tol.construct);
      cs.add("min_angles", c.min_angle_error, kAngleTol);
      cs.add("max_angles", c.max_angle_error, kAngleTol);
      cs.add("common_point", c.common_point / scale, tol.construct);
      cs.add("lk_isogonal", c.lk_isogonal / scale, tol.construct);
      cs.add("tl_isogonal", c.tl_isogonal / max_scale, tol.construct);
      cs.add("orthology", c.orthology / max_scale, tol.construct);
      cs.add("okt_collinear", c.okt_collinear, tol.construct);
      cs.add("sq_parallel", c.sq_parallel, tol.construct);
      const Triangle dual = circumscribed_by_parallels(ref, a.extremal->min_triangle);
      double dual_gap = 0.0;
      for (int i = 0; i < 3; ++i) dual_gap = std::max(dual_gap, distance(dual.vertex(i), a.extremal->max_triangle.vertex(i)));
      cs.add("duality", dual_gap / max_scale, tol.construct);
    }
    r.theorems.push_back(
        make_theorem("extremal_structure", cs, extremal_broken, extremal_infeasible, any_extremal, std::move(notes)));
  }

  // The pedal point of each of the six constructions is the minimizer's K.
  {
    CheckSet cs;
    for (const SixPointEntry& e : r.six.entries) {
      if (e.construction && e.extremal_point) cs.add("route_disagreement", e.route_disagreement / scale, kRouteTol);
    }
    r.theorems.push_back(make_theorem("pedal_minimizer", cs, extremal_broken, six_infeasible || extremal_infeasible,
                                      any_extremal && !six_infeasible));
  }

  // Pedal area at K and at its inverse.
  {
    CheckSet cs;
    for (const AssignmentResult& a : r.assignments) {
      if (!a.extremal) continue;
      const Point k = a.extremal->pedal_point;
      cs.add("relative_error", relative_gap(pedal_triangle(ref, k).area / ref_area, pedal_area_ratio(ref, k)),
             kPedalAreaTol);
      if (a.inverse) {
        const Point n = a.inverse->n;
        cs.add("relative_error_exterior",
               relative_gap(pedal_triangle(ref, n).area / ref_area, pedal_area_ratio(ref, n)), kPedalAreaTol);
      }
    }
    r.theorems.push_back(make_theorem("pedal_area_ratio", cs, extremal_broken, extremal_infeasible, any_extremal));
  }

  // Pedal triangles of K and its inverse N are similar.
  {
    CheckSet cs;
    std::vector<std::string> notes;
    bool data = false;
    bool broken = extremal_broken;
    for (const AssignmentResult& a : r.assignments) {
      if (!a.extremal) continue;
      if (!a.inverse) {
        notes.push_back(fmt::format("assignment {}: {}", a.assignment.index(), a.inverse_error));
        // K at the circumcenter has no finite inverse; anything else is a defect.
        if (a.inverse_error != "inverse at infinity") broken = true;
        continue;
      }
      data = true;
      const InversePedalPair& p = *a.inverse;
      cs.add("angle_error", p.angle_error, kAngleTol);
      cs.add("ratio_relative_error", relative_gap(p.area_ratio, p.predicted_ratio), kAreaIdentityTol);
      cs.add("ratio_above_one", std::max(0.0, p.area_ratio - 1.0), 1e-12);
      cs.add("power_error", p.power_error, kAreaIdentityTol);
      for (Point x : {p.m, p.n}) {
        const auto rel = verify_angle_relations(ref, x);
        cs.add("angle_relations", *std::max_element(rel.begin(), rel.end()), kAngleTol);
      }
    }
    r.theorems.push_back(
        make_theorem("inverse_pedal_similarity", cs, broken, extremal_infeasible, data, std::move(notes)));
  }

  // Brute-force sweeps of both families.
  if (grid > 0) {
    CheckSet cs;
    bool data = false;
    bool broken = extremal_broken;
    std::vector<std::string> notes;
    for (const AssignmentResult& a : r.assignments) {
      if (!a.extremal) continue;
      if (!a.oracle_min || !a.oracle_max) {
        broken = true;
        notes.push_back(fmt::format("assignment {}: oracle family empty", a.assignment.index()));
        continue;
      }
      data = true;
      const double min_area = a.extremal->min_triangle.area();
      const double max_area = a.extremal->max_triangle.area();
      cs.add("min_agreement", relative_gap(a.oracle_min->extremum_area, min_area), kOracleAgreeTol);
      cs.add("max_agreement", relative_gap(a.oracle_max->extremum_area, max_area), kOracleAgreeTol);
      double min_beaten = std::max(0.0, min_area - a.oracle_min->extremum_area);
      for (const auto& s : a.oracle_min->samples) {
        if (s.triangle) min_beaten = std::max(min_beaten, min_area - s.area);
      }
      double max_beaten = std::max(0.0, a.oracle_max->extremum_area - max_area);
      for (const auto& s : a.oracle_max->samples) {
        if (s.triangle) max_beaten = std::max(max_beaten, s.area - max_area);
      }
      cs.add("min_beaten_by", min_beaten / ref_area, kOracleSlackTol);
      cs.add("max_beaten_by", max_beaten / ref_area, kOracleSlackTol);
    }
    r.theorems.push_back(make_theorem("extremality_oracle", cs, broken, extremal_infeasible, data, std::move(notes)));
  }
  return r;
}

nlohmann::ordered_json point_json(Point p) { return nlohmann::ordered_json::array({p.x, p.y}); }

nlohmann::ordered_json triangle_json(const Triangle& t) {
  return nlohmann::ordered_json::array({point_json(t.a()), point_json(t.b()), point_json(t.c())});
}

nlohmann::ordered_json circle_json(const Circle& c) {
  nlohmann::ordered_json j;
  j["center"] = point_json(c.center());
  j["radius"] = c.radius();
  return j;
}

nlohmann::ordered_json theorem_json(const TheoremResult& t) {
  nlohmann::ordered_json j;
  j["status"] = std::string(verdict_name(t.verdict));
  nlohmann::ordered_json checks = nlohmann::ordered_json::object();
  for (const Check& c : t.checks) {
    nlohmann::ordered_json cj;
    cj["value"] = c.value;
    cj["tolerance"] = c.tolerance;
    cj["pass"] = c.pass();
    checks[c.name] = cj;
  }
  j["checks"] = checks;
  if (!t.notes.empty()) j["notes"] = t.notes;
  return j;
}

namespace {

nlohmann::ordered_json fit_json(const CircleFit& fit) {
  nlohmann::ordered_json j;
  j["status"] = std::string(fit_status_name(fit.status));
  if (fit.circle) {
    j["center"] = point_json(fit.circle->center());
    j["radius"] = fit.circle->radius();
    j["max_residual"] = fit.max_residual;
    j["relative_residual"] = fit.relative_residual();
  }
  if (fit.triple_circle) j["triple_circle"] = circle_json(*fit.triple_circle);
  return j;
}

nlohmann::ordered_json sweep_json(const oracle::SweepResult& s) {
  nlohmann::ordered_json j;
  j["grid"] = s.samples.size();
  j["extremum_theta"] = s.extremum_theta;
  j["extremum_area"] = s.extremum_area;
  j["refinement_iterations"] = s.refinement_iterations;
  return j;
}

}  // namespace

nlohmann::ordered_json instance_json(const InstanceResult& r, const Tolerances& tol) {
  constexpr double kDeg = 180.0 / kPi;
  nlohmann::ordered_json doc;
  doc["schema"] = std::string(kSchema);

  nlohmann::ordered_json input;
  input["triangle"] = triangle_json(r.reference);
  input["angles_degrees"] = {r.angles.alpha() * kDeg, r.angles.beta() * kDeg, r.angles.gamma() * kDeg};
  input["angles_radians"] = {r.angles.alpha(), r.angles.beta(), r.angles.gamma()};
  input["tolerances"] = {{"concyclic", tol.concyclic}, {"exterior", tol.exterior}, {"construct", tol.construct}};
  doc["input"] = input;

  const Circle circ = r.reference.circumcircle();
  nlohmann::ordered_json reference;
  reference["area"] = r.reference.area();
  reference["angles_degrees"] = {r.reference.angle(0) * kDeg, r.reference.angle(1) * kDeg, r.reference.angle(2) * kDeg};
  reference["O"] = point_json(circ.center());
  reference["R"] = circ.radius();
  reference["all_assignments_feasible"] = all_assignments_feasible(r.reference, r.angles);
  doc["reference"] = reference;

  nlohmann::ordered_json six;
  nlohmann::ordered_json points = nlohmann::ordered_json::object();
  nlohmann::ordered_json exterior = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < r.six.entries.size(); ++i) {
    const SixPointEntry& e = r.six.entries[i];
    nlohmann::ordered_json p;
    p["assignment"] = e.assignment.index();
    p["sides"] = e.assignment.describe();
    if (e.construction) {
      p["point"] = point_json(e.construction->point);
      p["third_circle_residual"] = e.construction->third_circle_residual;
      p["angle_sum_error"] = e.angle_sum_error;
      if (e.extremal_point) p["route_disagreement"] = e.route_disagreement;
      if (!e.extremal_error.empty()) p["extremal_error"] = e.extremal_error;
    } else {
      p["error"] = e.error;
    }
    points[fmt::format("M{}", i + 1)] = p;
    if (e.exterior) {
      exterior[fmt::format("N{}", i + 1)] = point_json(*e.exterior);
    } else if (!e.exterior_error.empty()) {
      exterior[fmt::format("N{}", i + 1)] = e.exterior_error;
    }
  }
  six["points"] = points;
  six["interior_fit"] = fit_json(r.six.interior_fit);
  six["exterior_points"] = exterior;
  if (r.six.exterior_fit) {
    six["exterior_fit"] = fit_json(*r.six.exterior_fit);
  } else {
    six["exterior_fit"] = {{"status", "skipped: " + r.six.exterior_skip_reason}};
  }
  nlohmann::ordered_json defining = nlohmann::ordered_json::object();
  constexpr std::array<const char*, 6> kDefiningNames{"O_D", "O_E", "O_F", "O'_D", "O'_E", "O'_F"};
  for (std::size_t i = 0; i < 6; ++i) {
    if (r.six.defining_circles[i]) defining[kDefiningNames[i]] = circle_json(*r.six.defining_circles[i]);
  }
  six["defining_circles"] = defining;
  doc["six_point"] = six;

  nlohmann::ordered_json assignments = nlohmann::ordered_json::array();
  for (const AssignmentResult& a : r.assignments) {
    nlohmann::ordered_json j;
    j["index"] = a.assignment.index();
    j["sides"] = a.assignment.describe();
    if (!a.extremal) {
      j["status"] = a.extremal_infeasible ? "infeasible" : "error";
      j["error"] = a.extremal_error;
      assignments.push_back(j);
      continue;
    }
    const ExtremalConfig& x = *a.extremal;
    j["status"] = "ok";
    j["K"] = point_json(x.pedal_point);
    j["L"] = point_json(x.antipedal_point);
    j["T"] = point_json(x.orthology_point);
    j["O_h"] = point_json(x.homothety_center);
    j["homothety_ratio"] = x.homothety_ratio;
    j["min_triangle"] = triangle_json(x.min_triangle);
    j["min_area"] = x.min_triangle.area();
    j["max_triangle"] = triangle_json(x.max_triangle);
    j["max_area"] = x.max_triangle.area();
    j["arc_circles"] = {{"O1", circle_json(x.arcs.over_ab)},
                        {"O2", circle_json(x.arcs.over_bc)},
                        {"O3", circle_json(x.arcs.over_ca)}};
    const ExtremalChecks& c = x.checks;
    j["residuals"] = {{"min_on_sides", c.min_on_sides},
                      {"max_circumscribes", c.max_circumscribes},
                      {"min_angle_error", c.min_angle_error},
                      {"max_angle_error", c.max_angle_error},
                      {"geometric_mean_rel", c.geometric_mean_rel},
                      {"lk_isogonal", c.lk_isogonal},
                      {"tl_isogonal", c.tl_isogonal},
                      {"orthology", c.orthology},
                      {"okt_collinear", c.okt_collinear},
                      {"sq_parallel", c.sq_parallel},
                      {"common_point", c.common_point}};
    if (a.inverse) {
      j["inverse_pair"] = {{"N", point_json(a.inverse->n)},
                           {"pedal_area_M", a.inverse->pedal_m.area},
                           {"pedal_area_N", a.inverse->pedal_n.area},
                           {"area_ratio", a.inverse->area_ratio},
                           {"predicted_ratio", a.inverse->predicted_ratio},
                           {"angle_error", a.inverse->angle_error},
                           {"power_error", a.inverse->power_error}};
    } else {
      j["inverse_pair"] = {{"error", a.inverse_error}};
    }
    if (a.oracle_min) j["oracle_min"] = sweep_json(*a.oracle_min);
    if (a.oracle_max) j["oracle_max"] = sweep_json(*a.oracle_max);
    assignments.push_back(j);
  }
  doc["assignments"] = assignments;

  nlohmann::ordered_json theorems;
  for (const TheoremResult& t : r.theorems) theorems[t.name] = theorem_json(t);
  doc["theorems"] = theorems;
  const int code = r.exit_code();
  doc["result"] = code == kExitPass ? "PASS" : code == kExitFail ? "FAIL" : "INFEASIBLE";
  doc["exit_code"] = code;
  return doc;
}

}  // namespace hexacycle::app

namespace hexacycle::app {

std::vector<TheoremResult> random_property_suites(const Triangle& ref, std::uint64_t seed) {
  Stream stream(splitmix64(seed ^ 0x5bd1e995u));
  const Circle circ = ref.circumcircle();
  const Point o = circ.center();
  const double big_r = circ.radius();
  auto polar = [&](double rho) {
    const double phi = stream.uniform(-kPi, kPi);
    return o + rho * big_r * Point{std::cos(phi), std::sin(phi)};
  };
  std::vector<TheoremResult> out;

  // Pedal area formula at a point anywhere in a disc of radius 3R, away from
  // the circumcircle where both sides vanish.
  {
    CheckSet cs;
    double rho = 1.0;
    while (std::abs(rho - 1.0) < 1e-3) rho = 3.0 * std::sqrt(stream.uniform(0, 1));
    const Point m = polar(rho);
    cs.add("relative_error", relative_gap(pedal_triangle(ref, m).area / ref.area(), pedal_area_ratio(ref, m)),
           kPedalAreaTol);
    out.push_back(make_theorem("random_pedal_area", cs, false, false, true));
  }

  // Inverse pair at a point with 0.001 R <= OM <= 0.9 R, and the converse on
  // the same ray.
  {
    CheckSet cs;
    const double rho = std::sqrt(stream.uniform(1e-6, 0.81));
    const Point m = polar(rho);
    bool broken = false;
    std::vector<std::string> notes;
    try {
      const InversePedalPair p = inverse_pedal_pair(ref, m);
      cs.add("angle_error", p.angle_error, kAngleTol);
      cs.add("ratio_relative_error", relative_gap(p.area_ratio, p.predicted_ratio), kAreaIdentityTol);
      cs.add("ratio_above_one", std::max(0.0, p.area_ratio - 1.0), 1e-12);
      // Off-inverse points on the ray: ON' = f ON with f away from 1. M itself
      // lies on the ray and is excluded along with the circumcircle.
      const double f = stream.uniform(0, 1) < 0.5 ? stream.uniform(0.5, 0.8) : stream.uniform(1.25, 2.0);
      const Point n_off = o + f * (p.n - o);
      if (std::abs(distance(n_off, o) - big_r) > 1e-3 * big_r && distance(n_off, m) > 0.1 * big_r) {
        cs.add("converse_mismatch_floor", 1e-3 / pedal_shape_mismatch(ref, m, n_off), 1.0);
      }
    } catch (const GeometryError& e) {
      broken = true;
      notes.push_back(e.what());
    }
    out.push_back(make_theorem("random_inverse_pair", cs, broken, false, true, std::move(notes)));
  }

  // Homothetic inscription: area of the division triangle is the geometric
  // mean of the outer and inscribed areas.
  {
    CheckSet cs;
    const Point a1 = ref.a();
    const Point a2 = ref.b();
    const Point a3 = ref.c();
    const Point b1 = a2 + stream.uniform(0.05, 0.95) * (a3 - a2);
    const Point b2 = a3 + stream.uniform(0.05, 0.95) * (a1 - a3);
    const Point b3 = a1 + stream.uniform(0.05, 0.95) * (a2 - a1);
    bool broken = false;
    std::vector<std::string> notes;
    try {
      const Triangle inner = inscribe_homothetic(ref, b1, b2, b3);
      const double mid = std::abs(signed_area(b1, b2, b3));
      cs.add("relative_error", relative_gap(ref.area() * inner.area(), mid * mid), kAreaIdentityTol);
      homothety_between(ref, inner);
    } catch (const GeometryError& e) {
      broken = true;
      notes.push_back(e.what());
    }
    out.push_back(make_theorem("homothetic_inscription", cs, broken, false, true, std::move(notes)));
  }
  return out;
}

}  // namespace hexacycle::app
