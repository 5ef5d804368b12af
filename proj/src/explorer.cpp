#include "gmext/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "gmext/closed_form.hpp"
#include "gmext/stationarity.hpp"

namespace gmext {

namespace {

ScanRow run_row(const AlphaN& pair, double lambda, Direction d, const OracleConfig& config) {
  ScanRow row;
  row.alpha = pair.alpha;
  row.n = pair.n;
  row.lambda = lambda;
  row.direction = d;
  try {
    const ExtremumProblem p(pair.alpha, pair.n, lambda);
    row.regime = classify(p, d);
    row.validation = !is_open(row.regime);
    row.formula = d == Direction::inf ? min_formula(p) : max_formula(p);
    row.boundary = boundary_candidates(p);

    const auto cps = enumerate_critical_points_detailed(p, Execution::serial);
    for (const auto& cp : cps.points) row.critical_values.push_back(cp.value);
    row.escaped_k = cps.escaped_k;
    const auto [lo, hi] = std::minmax_element(row.critical_values.begin(), row.critical_values.end());
    row.best_critical = d == Direction::inf ? *lo : *hi;

    const OracleEstimate est = estimate(p, d, config, Execution::serial);
    row.estimate = est.value;
    row.boundary_suspect = est.boundary_suspect;
    row.converged_starts = est.converged_starts;
    row.gap_formula = row.estimate - row.formula;

    const ExtremumResult closed = extremum(p, d);
    if (closed.method == Method::closed_form && closed.value.is_finite()) {
      row.closed_form = closed.value.value();
      row.gap_closed_form = row.estimate - *row.closed_form;
      const CrosscheckReport rep = judge(p, d, est);
      row.crosscheck_pass = rep.pass;
      if (!rep.pass) row.message = "crosscheck: " + rep.reason;
    }

    // The oracle may not beat a value realized by a feasible point or limit.
    const double sgn = d == Direction::inf ? 1.0 : -1.0;
    auto no_worse_than = [&](double v) { return sgn * (row.estimate - v) <= kScanSlack; };
    if (!row.validation) row.formula_bound_ok = no_worse_than(row.formula);
    row.candidate_bound_ok = std::all_of(row.critical_values.begin(), row.critical_values.end(), no_worse_than) &&
                             std::all_of(row.boundary.begin(), row.boundary.end(), [&](const ExtendedReal& b) {
                               return !b.is_finite() || no_worse_than(b.value());
                             });
  } catch (const std::exception& e) {
    row.failed = true;
    row.message = e.what();
  }
  return row;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

template <class T, class F>
std::string join(const std::vector<T>& xs, F&& f) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ';';
    out += f(xs[i]);
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<ScanRow> scan_pairs(const std::vector<AlphaN>& pairs, const std::vector<double>& lambda_grid,
                                Direction direction, const OracleConfig& config, Execution exec) {
  config.validate();
  const std::size_t nl = lambda_grid.size();
  const std::size_t total = pairs.size() * nl;
  std::vector<ScanRow> rows(total);
  const auto count = static_cast<long long>(total);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      rows[idx] = run_row(pairs[idx / nl], lambda_grid[idx % nl], direction, config);
    }
  } else {
    for (std::size_t idx = 0; idx < total; ++idx) {
      rows[idx] = run_row(pairs[idx / nl], lambda_grid[idx % nl], direction, config);
    }
  }
  return rows;
}

std::vector<ScanRow> scan(const std::vector<double>& alpha_grid, const std::vector<int>& n_list,
                          const std::vector<double>& lambda_grid, Direction direction, const OracleConfig& config,
                          Execution exec) {
  std::vector<AlphaN> pairs;
  for (double a : alpha_grid)
    for (int n : n_list) pairs.push_back({a, n});
  return scan_pairs(pairs, lambda_grid, direction, config, exec);
}

std::vector<double> log_grid(double lo, double hi, int count) {
  if (!(lo > 0.0 && hi >= lo) || count < 1) throw DomainError("log_grid: need 0 < lo <= hi and count >= 1");
  if (count == 1) return {lo};
  std::vector<double> out(static_cast<std::size_t>(count));
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = std::pow(10.0, a + (b - a) * i / (count - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

ScanGrid default_grid(Direction direction) {
  ScanGrid g;
  g.lambdas = log_grid(1e-3, 1e3, 33);
  if (direction == Direction::inf) {
    for (double a : {1.25, 1.5, 2.5, 3.0, 4.0})
      for (int n = 2; n <= static_cast<int>(std::ceil(a)); ++n) g.pairs.push_back({a, n});
    g.pairs.push_back({2.0, 2});  // closed form known (alpha = 2, n = 2)
    g.pairs.push_back({2.0, 3});  // n >= alpha + 1
  } else {
    for (double a : {0.15, 0.25, 0.4, 0.45})
      for (int n = 2; n <= static_cast<int>(std::ceil(1.0 / a)); ++n) g.pairs.push_back({a, n});
    g.pairs.push_back({0.5, 2});  // closed form known (alpha = 1/2, n = 2)
    g.pairs.push_back({0.5, 3});  // n >= 1/alpha + 1
  }
  return g;
}

ScanGrid load_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open grid file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("grid file '" + path + "' is not valid JSON: " + e.what());
  }
  ScanGrid g;
  try {
    if (j.contains("pairs")) {
      for (const auto& p : j.at("pairs")) g.pairs.push_back({p.at(0).get<double>(), p.at(1).get<int>()});
    } else {
      for (double a : j.at("alpha").get<std::vector<double>>())
        for (int n : j.at("n").get<std::vector<int>>()) g.pairs.push_back({a, n});
    }
    const auto& l = j.at("lambda");
    if (l.is_object()) {
      g.lambdas = log_grid(l.at("min").get<double>(), l.at("max").get<double>(), l.at("count").get<int>());
    } else {
      g.lambdas = l.get<std::vector<double>>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("grid file '" + path + "': " + e.what());
  }
  if (g.pairs.empty() || g.lambdas.empty()) throw DomainError("grid file '" + path + "' defines an empty grid");
  return g;
}

std::string csv_header() {
  return "alpha,n,lambda,direction,regime,row_kind,status,estimate,boundary_suspect,converged_starts,formula,"
         "closed_form,gap_formula,gap_closed_form,crosscheck,critical_values,escaped_k,boundary_candidates,"
         "best_critical,formula_bound_ok,candidate_bound_ok,message";
}

void write_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
  os << csv_header() << '\n';
  auto opt = [](const std::optional<double>& v) { return v ? fmt(*v) : std::string(); };
  for (const auto& r : rows) {
    os << fmt(r.alpha) << ',' << r.n << ',' << fmt(r.lambda) << ',' << to_string(r.direction) << ','
       << to_string(r.regime) << ',' << (r.validation ? "validation" : "open") << ','
       << (r.failed ? "failed" : "ok") << ',';
    if (r.failed) {
      os << ",,,,,,,,,,,,,," << csv_escape(r.message) << '\n';
      continue;
    }
    os << fmt(r.estimate) << ',' << (r.boundary_suspect ? "true" : "false") << ',' << r.converged_starts << ','
       << fmt(r.formula) << ',' << opt(r.closed_form) << ',' << fmt(r.gap_formula) << ','
       << opt(r.gap_closed_form) << ',' << (r.crosscheck_pass ? (*r.crosscheck_pass ? "pass" : "fail") : "") << ','
       << join(r.critical_values, fmt) << ',' << join(r.escaped_k, [](int k) { return std::to_string(k); }) << ','
       << join(r.boundary, [](const ExtendedReal& b) { return b.str(); }) << ',' << opt(r.best_critical) << ','
       << (r.formula_bound_ok ? "true" : "false") << ',' << (r.candidate_bound_ok ? "true" : "false") << ','
       << csv_escape(r.message) << '\n';
  }
}

bool row_ok(const ScanRow& row) {
  if (row.failed) return false;
  if (row.crosscheck_pass && !*row.crosscheck_pass) return false;
  return row.formula_bound_ok && row.candidate_bound_ok;
}

}  // namespace gmext
