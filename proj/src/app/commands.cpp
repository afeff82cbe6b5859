#include <map>

#include <fmt/format.h>

#include "instance.hpp"

namespace hexacycle::app {

namespace {

constexpr std::size_t kMaxListedFailures = 20;

void check_tolerances(const RunConfig& config) {
  for (double t : {config.tol.concyclic, config.tol.exterior, config.tol.construct}) {
    if (!(t > 0.0) || !std::isfinite(t)) throw UsageError("tolerances must be positive");
  }
  if (config.grid < 360) throw UsageError("grid must be at least 360");
}

CommandResult usage_failure(const std::exception& e) {
  return CommandResult{kExitUsage, {}, fmt::format("error: {}\n", e.what())};
}

std::string summary_lines(const InstanceResult& r) {
  std::string out;
  for (const TheoremResult& t : r.theorems) out += fmt::format("{:<26} {}\n", t.name, verdict_name(t.verdict));
  return out;
}

struct Worst {
  double value = -1.0;
  double tolerance = 0.0;
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
};

}  // namespace

CommandResult run_verify(const RunConfig& config) {
  try {
    check_tolerances(config);
    const Triangle ref = checked_triangle(config);
    const AngleTriple angles = checked_angles(config);
    const InstanceResult r = evaluate_instance(ref, angles, config.tol, config.grid);
    nlohmann::ordered_json doc = instance_json(r, config.tol);
    return CommandResult{r.exit_code(), dump_json(doc), summary_lines(r)};
  } catch (const UsageError& e) {
    return usage_failure(e);
  }
}

CommandResult run_fuzz(const RunConfig& config) {
  try {
    check_tolerances(config);
    if (config.trials < 1) throw UsageError("trials must be at least 1");
  } catch (const UsageError& e) {
    return usage_failure(e);
  }

  std::size_t pass = 0, fail = 0, infeasible = 0;
  std::size_t predicate_feasible = 0, six_infeasible = 0, extremal_only_infeasible = 0, predicate_mismatch = 0;
  std::map<std::string, std::size_t> reasons;
  std::map<std::string, std::array<std::size_t, 4>> per_theorem;  // pass, fail, infeasible, skipped
  std::map<std::string, Worst> worst;
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  std::vector<std::string> theorem_order;

  for (int i = 0; i < config.trials; ++i) {
    const auto index = static_cast<std::uint64_t>(i);
    const Trial trial = make_trial(config.seed, index);
    InstanceResult r = evaluate_instance(trial.reference, trial.angles, config.tol, config.grid);
    for (TheoremResult& t : random_property_suites(trial.reference, trial.seed)) r.theorems.push_back(std::move(t));

    const bool predicate = all_assignments_feasible(trial.reference, trial.angles);
    const bool six_ok = std::all_of(r.six.entries.begin(), r.six.entries.end(),
                                    [](const SixPointEntry& e) { return e.construction.has_value(); });
    const bool extremal_ok = std::all_of(r.assignments.begin(), r.assignments.end(),
                                         [](const AssignmentResult& a) { return a.extremal.has_value(); });
    predicate_feasible += predicate;
    six_infeasible += !six_ok;
    extremal_only_infeasible += six_ok && !extremal_ok;
    predicate_mismatch += predicate != six_ok;
    for (const SixPointEntry& e : r.six.entries) {
      if (!e.construction) ++reasons["six_point: " + e.error];
    }
    for (const AssignmentResult& a : r.assignments) {
      if (!a.extremal) ++reasons["extremal: " + a.extremal_error];
    }

    for (const TheoremResult& t : r.theorems) {
      if (!per_theorem.count(t.name)) theorem_order.push_back(t.name);
      ++per_theorem[t.name][static_cast<std::size_t>(t.verdict)];
      for (const Check& c : t.checks) {
        Worst& w = worst[t.name + "." + c.name];
        if (c.value > w.value) w = Worst{c.value, c.tolerance, index, trial.seed};
      }
    }

    if (r.failed()) {
      ++fail;
      if (failures.size() < kMaxListedFailures) {
        nlohmann::ordered_json f;
        f["trial"] = index;
        f["seed"] = trial.seed;
        std::vector<std::string> names;
        for (const TheoremResult& t : r.theorems) {
          if (t.verdict == Verdict::Fail) names.push_back(t.name);
        }
        f["failed"] = names;
        f["reproducer"] = reproducer(trial);
        failures.push_back(f);
      }
    } else if (r.infeasible()) {
      ++infeasible;
    } else {
      ++pass;
    }
  }

  nlohmann::ordered_json doc;
  doc["schema"] = std::string(kSchema);
  doc["command"] = "fuzz";
  doc["seed"] = config.seed;
  doc["trials"] = config.trials;
  doc["grid"] = config.grid;
  doc["tolerances"] = {{"concyclic", config.tol.concyclic},
                       {"exterior", config.tol.exterior},
                       {"construct", config.tol.construct}};
  doc["counts"] = {{"pass", pass}, {"fail", fail}, {"infeasible", infeasible}};
  doc["feasibility"] = {{"predicate_feasible", predicate_feasible},
                        {"six_point_infeasible", six_infeasible},
                        {"extremal_only_infeasible", extremal_only_infeasible},
                        {"predicate_mismatch", predicate_mismatch}};
  nlohmann::ordered_json reason_json = nlohmann::ordered_json::object();
  for (const auto& [k, v] : reasons) reason_json[k] = v;
  doc["infeasible_reasons"] = reason_json;

  nlohmann::ordered_json theorems = nlohmann::ordered_json::object();
  for (const std::string& name : theorem_order) {
    const auto& c = per_theorem[name];
    theorems[name] = {{"pass", c[0]}, {"fail", c[1]}, {"infeasible", c[2]}, {"skipped", c[3]}};
  }
  doc["theorems"] = theorems;

  nlohmann::ordered_json worst_json = nlohmann::ordered_json::object();
  for (const auto& [name, w] : worst) {
    worst_json[name] = {{"value", w.value},
                        {"tolerance", w.tolerance},
                        {"trial", w.trial},
                        {"seed", w.seed},
                        {"reproducer", reproducer(make_trial(config.seed, w.trial))}};
  }
  doc["worst"] = worst_json;
  doc["failures"] = failures;
  const int code = fail == 0 ? kExitPass : kExitFail;
  doc["result"] = code == kExitPass ? "PASS" : "FAIL";
  doc["exit_code"] = code;

  std::string diag = fmt::format("trials {}: pass {}, fail {}, infeasible {}\n", config.trials, pass, fail, infeasible);
  for (const auto& f : failures) diag += fmt::format("  trial {}: {}\n", f["trial"].get<std::uint64_t>(), f["reproducer"].get<std::string>());
  return CommandResult{code, dump_json(doc), diag};
}

}  // namespace hexacycle::app
