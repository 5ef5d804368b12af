#include "gmext/serialize.hpp"

#include <cmath>
#include <map>

namespace gmext {

using nlohmann::json;

json to_json(const ExtendedReal& v) { return v.is_finite() ? json(v.value()) : json("inf"); }

ExtendedReal extended_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtendedReal::pos_infinity();
  if (j.is_number()) return ExtendedReal::finite(j.get<double>());
  throw DomainError("extended real must be a number or \"inf\"");
}

json to_json(const ExtremumProblem& p) { return {{"alpha", p.alpha()}, {"n", p.n()}, {"lambda", p.lambda()}}; }

json to_json(const ExtremumResult& r) {
  json j;
  j["direction"] = std::string(to_string(r.direction));
  j["value"] = to_json(r.value);
  j["attained"] = r.attained;
  j["regime"] = std::string(to_string(r.regime));
  j["method"] = std::string(to_string(r.method));
  j["witness"] = r.witness ? json(std::vector<double>(r.witness->coords().begin(), r.witness->coords().end()))
                           : json(nullptr);
  j["boundary"] = r.boundary ? json{{"to_zero", r.boundary->to_zero}, {"to_infinity", r.boundary->to_infinity}}
                             : json(nullptr);
  j["bound"] = r.bound ? to_json(*r.bound) : json(nullptr);
  return j;
}

json to_json(const CriticalPoint& cp) {
  return {{"k", cp.k},
          {"x", cp.x},
          {"y", cp.y},
          {"value", cp.value},
          {"multiplier", cp.multiplier},
          {"kind", cp.kind == CriticalKind::symmetric ? "symmetric" : "asymmetric"}};
}

json to_json(const CriticalPointSet& set) {
  json pts = json::array();
  for (const auto& cp : set.points) pts.push_back(to_json(cp));
  return {{"points", pts}, {"count", set.points.size()}, {"escaped_k", set.escaped_k}};
}

json to_json(const OracleEstimate& e) {
  return {{"direction", std::string(to_string(e.direction))},
          {"value", e.value},
          {"best_point", std::vector<double>(e.best_point.coords().begin(), e.best_point.coords().end())},
          {"best_log_offsets", e.best_log_offsets},
          {"best_start", e.best_start},
          {"converged_starts", e.converged_starts},
          {"total_starts", e.total_starts},
          {"boundary_suspect", e.boundary_suspect},
          {"box_radius", e.box_radius}};
}

json to_json(const CrosscheckReport& r) {
  return {{"direction", std::string(to_string(r.direction))},
          {"regime", std::string(to_string(r.regime))},
          {"closed_value", r.closed_value},
          {"attained", r.attained},
          {"oracle", to_json(r.oracle)},
          {"abs_gap", r.abs_gap},
          {"rel_gap", r.rel_gap},
          {"pass", r.pass},
          {"reason", r.reason}};
}

json to_json(const CertificationReport& r) {
  return {{"mode", "certify"},
          {"lambda", r.lambda},
          {"trials", r.trials},
          {"seed", r.seed},
          {"bound", r.bound},
          {"min_value", r.min_value},
          {"argmin", r.argmin},
          {"violations", r.violations},
          {"first_violation", r.first_violation ? json(*r.first_violation) : json(nullptr)},
          {"near_tight", r.near_tight},
          {"near_tight_symmetric", r.near_tight_symmetric},
          {"pass", r.pass}};
}

json to_json(const BelowThresholdReport& r) {
  return {{"mode", "below_threshold"},
          {"lambda", r.lambda},
          {"trials", r.trials},
          {"bound", r.bound},
          {"bound_violations", r.bound_violations},
          {"min_value", r.min_value},
          {"family_t", r.family_t},
          {"family_values", r.family_values},
          {"family_decreasing", r.family_decreasing},
          {"pass", r.pass}};
}

json scan_summary(const std::vector<ScanRow>& rows) {
  struct Acc {
    double alpha;
    int n;
    std::string direction;
    int rows = 0, failed = 0, validation = 0, validation_pass = 0, open = 0;
    int invariant_violations = 0;
    int formula_matches = 0, critical_matches = 0, boundary_matches = 0;
    double min_est = INFINITY, max_est = -INFINITY, lambda_min = 0, lambda_max = 0;
  };
  std::vector<Acc> groups;
  std::map<std::pair<double, int>, std::size_t> index;
  for (const auto& r : rows) {
    auto [it, fresh] = index.try_emplace({r.alpha, r.n}, groups.size());
    if (fresh) groups.push_back({r.alpha, r.n, std::string(to_string(r.direction))});
    Acc& a = groups[it->second];
    ++a.rows;
    if (r.failed) {
      ++a.failed;
      continue;
    }
    if (r.validation) {
      ++a.validation;
      if (r.crosscheck_pass.value_or(true)) ++a.validation_pass;
    } else {
      ++a.open;
    }
    if (!r.formula_bound_ok || !r.candidate_bound_ok) ++a.invariant_violations;
    if (std::abs(r.gap_formula) <= 1e-6) ++a.formula_matches;
    if (r.best_critical && std::abs(r.estimate - *r.best_critical) <= 1e-6) ++a.critical_matches;
    for (const auto& b : r.boundary) {
      if (b.is_finite() && std::abs(r.estimate - b.value()) <= 1e-6) {
        ++a.boundary_matches;
        break;
      }
    }
    if (r.estimate < a.min_est) {
      a.min_est = r.estimate;
      a.lambda_min = r.lambda;
    }
    if (r.estimate > a.max_est) {
      a.max_est = r.estimate;
      a.lambda_max = r.lambda;
    }
  }
  json out = json::array();
  for (const auto& a : groups) {
    const bool any = a.rows > a.failed;
    out.push_back({{"alpha", a.alpha},
                   {"n", a.n},
                   {"direction", a.direction},
                   {"rows", a.rows},
                   {"failed", a.failed},
                   {"open_rows", a.open},
                   {"validation_rows", a.validation},
                   {"validation_pass", a.validation_pass},
                   {"invariant_violations", a.invariant_violations},
                   {"min_estimate", any ? json(a.min_est) : json(nullptr)},
                   {"lambda_at_min", any ? json(a.lambda_min) : json(nullptr)},
                   {"max_estimate", any ? json(a.max_est) : json(nullptr)},
                   {"lambda_at_max", any ? json(a.lambda_max) : json(nullptr)},
                   {"formula_matches", a.formula_matches},
                   {"critical_point_matches", a.critical_matches},
                   {"boundary_matches", a.boundary_matches}});
  }
  return {{"groups", out}};
}

}  // namespace gmext
