// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gmext/certifier.hpp"
#include "gmext/cli.hpp"
#include "gmext/closed_form.hpp"
#include "gmext/explorer.hpp"
#include "gmext/oracle.hpp"
#include "gmext/stationarity.hpp"

using namespace gmext;

namespace {

constexpr double kAbsTol = 1e-6;
constexpr double kBranchTol = 1e-12;
constexpr double kCertNearTight = 1e-9;
constexpr double kGradTol = 1e-5;
constexpr double kMarginFloor = -1e-15;
constexpr double kLimit1 = 60.0;
constexpr double kLimit7 = 30.0;
constexpr double kLimit10 = 600.0;

struct Outcome {
  bool pass = true;
  int checked = 0;
  std::string detail;

  void require(bool ok, const std::string& what) {
    ++checked;
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

using Clock = std::chrono::steady_clock;

bool report(int id, const char* name, const std::function<Outcome()>& body, double limit = 0.0) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit > 0.0 && secs >= limit) {
    o.pass = false;
    if (o.detail.empty()) o.detail = fmt("runtime %.1f s exceeds %.0f s", secs, limit);
  }
  std::printf("%s criterion %2d: %-40s checks=%-6d time=%7.2fs%s%s\n", o.pass ? "PASS" : "FAIL", id, name,
              o.checked, secs, o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

// Closed-form regime check shared by criteria 1, 2 and 5: the oracle must
// reproduce the value within kAbsTol, and flag a boundary limit exactly when
// the closed form says the extremum is not attained.
void check_formula_point(Outcome& o, const ExtremumProblem& p, Direction d, RegimeTag expected) {
  const ExtremumResult r = extremum(p, d);
  const std::string at = fmt("(a=%g, n=%g, l=%g)", p.alpha(), p.n(), p.lambda());
  o.require(r.regime == expected, "regime " + std::string(to_string(r.regime)) + " at " + at);
  const double formula = d == Direction::inf ? min_formula(p) : max_formula(p);
  o.require(r.value.value() == formula, "closed form differs from formula at " + at);
  const double s = p.symmetric_value();
  const bool attained_expected = d == Direction::inf ? s <= 1.0 : s >= p.n() - 1.0;
  o.require(r.attained == attained_expected, "attained flag vs symmetric value at " + at);
  const CrosscheckReport c = crosscheck(p, d);
  o.require(c.abs_gap <= kAbsTol, "gap " + fmt("%.3g", c.abs_gap) + " at " + at);
  o.require(c.pass, "crosscheck: " + c.reason + " at " + at);
  if (!r.attained) o.require(c.oracle.boundary_suspect, "boundary_suspect not set at " + at);
  else o.require(!c.oracle.boundary_suspect, "spurious boundary_suspect at " + at);
}

std::vector<double> lambda_points(int count) { return log_grid(1e-3, 1e3, count); }

Outcome criterion1() {
  Outcome o;
  for (double a : {0.2, 0.4, 0.6, 0.8, 1.0})
    for (int n : {2, 3, 5, 8})
      for (double l : lambda_points(5)) check_formula_point(o, ExtremumProblem(a, n, l), Direction::inf, RegimeTag::INF_P1);
  return o;
}

Outcome criterion2() {
  Outcome o;
  const std::vector<std::pair<double, std::vector<int>>> grid{{1.5, {3, 5}}, {2.0, {3, 6}}, {3.0, {4, 8}}};
  for (const auto& [a, ns] : grid)
    for (int n : ns)
      for (double l : lambda_points(10)) check_formula_point(o, ExtremumProblem(a, n, l), Direction::inf, RegimeTag::INF_P2);
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (double l : {0.05, 0.1, 0.25, 0.4, 0.5, 0.6, 1.0, 4.0}) {
    const ExtremumProblem p(2, 2, l);
    const double piecewise = l >= 0.5 ? 2 / ((1 + l) * (1 + l)) : (1 - 2 * l * l) / ((1 - l * l) * (1 - l * l));
    const auto r = infimum(p);
    o.require(std::abs(r.value.value() - piecewise) <= 1e-14, fmt("closed form at l=%g", l));
    const auto e = estimate(p, Direction::inf);
    o.require(std::abs(e.value - piecewise) <= kAbsTol, fmt("oracle %.12g vs %.12g at l=%g", e.value, piecewise, l));
  }
  const double s = ex1_symmetric_branch(0.5), a = ex1_asymmetric_branch(0.5);
  o.require(std::abs(s - a) <= kBranchTol * s, fmt("branches at 1/2: %.17g vs %.17g", s, a));
  for (double l : log_grid(1e-3, 4.0, 301)) {
    if (std::abs(l - 0.5) < 1e-9) continue;
    int asym = 0;
    for (const auto& cp : enumerate_critical_points(ExtremumProblem(2, 2, l))) asym += cp.kind == CriticalKind::asymmetric;
    o.require((asym > 0) == (l < 0.5), fmt("asymmetric existence at l=%.17g", l));
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  const std::vector<std::pair<int, double>> nl{{2, 1e-3}, {2, 1.0}, {3, 0.05}, {3, 20.0}, {4, 0.5},
                                               {5, 3.0},  {6, 1e2}, {8, 0.2},  {12, 7.0}, {16, 1e3}};
  for (double a : {-0.5, -1.0, -3.0}) {
    for (const auto& [n, l] : nl) {
      const ExtremumProblem p(a, n, l);
      const std::string at = fmt("(a=%g, n=%g, l=%g)", a, n, l);
      const auto r = infimum(p);
      const double want = n * std::pow(1 + l, -a);
      o.require(r.regime == RegimeTag::INF_P3 && r.attained, "regime/attained at " + at);
      o.require(std::abs(r.value.value() - want) <= 1e-14 * want, "closed form at " + at);
      const auto e = estimate(p, Direction::inf);
      o.require(std::abs(e.value - want) <= kAbsTol * want, fmt("oracle rel gap %.3g at ", std::abs(e.value - want) / want) + at);
      double spread = 0.0;
      for (double x : e.best_point.coords()) spread = std::max(spread, std::abs(std::log(x / l)));
      o.require(spread <= 1e-3, "oracle minimizer not symmetric at " + at);
      const auto pts = enumerate_critical_points(p);
      o.require(pts.size() == 1 && pts[0].kind == CriticalKind::symmetric, "enumeration not symmetric-only at " + at);
    }
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (double a : {1.0, 1.5, 2.0, 3.0, 5.0})
    for (int n : {2, 3, 5, 8})
      for (double l : lambda_points(5)) check_formula_point(o, ExtremumProblem(a, n, l), Direction::sup, RegimeTag::SUP_P4);
  const std::vector<std::pair<double, std::vector<int>>> grid{{0.25, {5, 8}}, {0.5, {3, 5}}, {0.75, {3, 5}}};
  for (const auto& [a, ns] : grid)
    for (int n : ns)
      for (double l : lambda_points(10)) check_formula_point(o, ExtremumProblem(a, n, l), Direction::sup, RegimeTag::SUP_P5);
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (double l : {0.5, 1.0, 2.0, 2.5, 3.0, 10.0}) {
    const ExtremumProblem p(0.5, 2, l);
    const double piecewise = l > 2 ? l / std::sqrt(l * l - 1) : 2 / std::sqrt(1 + l);
    const auto r = supremum(p);
    o.require(std::abs(r.value.value() - piecewise) <= 1e-14, fmt("closed form at l=%g", l));
    const auto e = estimate(p, Direction::sup);
    o.require(std::abs(e.value - piecewise) <= kAbsTol, fmt("oracle %.12g vs %.12g at l=%g", e.value, piecewise, l));
  }
  const double s = ex2_symmetric_branch(2.0), a = ex2_asymmetric_branch(2.0);
  o.require(std::abs(s - a) <= kBranchTol * s, fmt("branches at 2: %.17g vs %.17g", s, a));
  for (double l : log_grid(0.1, 500.0, 301)) {
    if (std::abs(l - 2.0) < 1e-9) continue;
    int asym = 0;
    for (const auto& cp : enumerate_critical_points(ExtremumProblem(0.5, 2, l))) asym += cp.kind == CriticalKind::asymmetric;
    o.require((asym > 0) == (l > 2.0), fmt("asymmetric existence at l=%.17g", l));
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto r8 = certify_eq1(8.0, 100000, 1);
  o.require(r8.bound == 1.0, "bound at 8");
  o.require(r8.violations == 0, fmt("%g violations at l=8", r8.violations));
  o.require(r8.min_value >= 1.0 - 1e-12, fmt("min %.17g at l=8", r8.min_value));
  o.require(r8.near_tight == r8.near_tight_symmetric, "near-tight triple that is not near-symmetric");
  o.require(r8.pass, "certification report failed at l=8");
  // The minimum is within kCertNearTight of 1 only if its triple is near-symmetric.
  if (r8.min_value - 1.0 <= kCertNearTight) {
    const auto& t = r8.argmin;
    const double hi = std::max({t[0], t[1], t[2]}), lo = std::min({t[0], t[1], t[2]});
    o.require(hi / lo <= 1 + kNearSymmetric, "tight minimum at an asymmetric triple");
  }
  const auto r9 = certify_eq1(9.0, 100000, 1);
  o.require(std::abs(r9.bound - 3 / std::sqrt(10.0)) <= 1e-16, "bound at 9");
  o.require(r9.pass && r9.violations == 0, "certification failed at l=9");
  o.require(std::abs(imo_value(1, 1, 1, 9) - r9.bound) <= 1e-15, "symmetric triple not tight at 9");
  const auto b4 = probe_below_threshold(4.0, 100000, 1);
  o.require(b4.family_decreasing, "family not decreasing at l=4");
  const double last = b4.family_values.back();
  o.require(b4.family_t.back() == 1e9 && last > 1.0 && last < 1.0 + 1e-3, fmt("family value %.17g at t=1e9", last));
  o.require(b4.pass, "below-threshold probe failed");
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (int i = 0; i < 200; ++i) {
    const double beta = 1.0 + 9.0 * i / 199.0;
    for (int j = 1; j <= 200; ++j) {
      const double u = j / 201.0;
      const auto c = check_eq5({beta, u});
      o.require(c.holds && c.margin >= kMarginFloor, fmt("Bernoulli chain margin %.3g at beta=%g u=%g", c.margin, beta, u));
    }
  }
  for (int i = 1; i <= 200; ++i) {
    const double beta = i / 201.0;
    for (int j = 1; j <= 200; ++j) {
      const double u = j / 201.0;
      const auto c = check_eq8(beta, u);
      o.require(c.holds && c.margin >= kMarginFloor, fmt("power chain margin %.3g at beta=%g u=%g", c.margin, beta, u));
    }
  }
  for (double beta : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const auto p = prop2_f_profile(beta, 1000);
    o.require(p.ok, fmt("f-profile at beta=%g: ", beta) + p.failure.value_or(""));
  }
  const auto half = prop2_f_profile(0.5, 1000);
  o.require(half.x0 == 0.5, fmt("x0 = %.17g at beta=1/2", half.x0));
  return o;
}

std::string cli_output(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"gmext"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ua(-3.0, 4.0), ul(-5.0, 5.0), uv(-4.0, 4.0);
  std::uniform_int_distribution<int> un(2, 10);
  for (int s = 0; s < 10; ++s) {
    const ExtremumProblem p(ua(rng), un(rng), std::exp(ul(rng)));
    for (int k = 0; k < 100; ++k) {
      std::vector<double> v(p.n() - 1);
      for (double& x : v) x = uv(rng);
      const auto ga = gradient_log(p, v);
      const auto gf = gradient_log_fd(p, v, 1e-6);
      double scale = 0.0;
      for (double x : ga) scale = std::max(scale, std::abs(x));
      double worst = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) worst = std::max(worst, std::abs(ga[i] - gf[i]));
      o.require(worst <= kGradTol * scale, fmt("gradient rel err %.3g at a=%g n=%g", worst / scale, p.alpha(), p.n()));
    }
  }
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"oracle", "--alpha", "3", "--n", "3", "--lambda", "0.1", "--direction", "inf", "--seed", "77"},
           {"oracle", "--alpha", "0.25", "--n", "3", "--lambda", "2", "--direction", "sup"},
           {"crosscheck", "--alpha", "2", "--n", "2", "--lambda", "0.25", "--direction", "inf"}}) {
    const std::string a = cli_output(args), b = cli_output(args);
    o.require(!a.empty() && a == b, "JSON differs between runs for " + args[0]);
  }
  for (Direction d : {Direction::inf, Direction::sup}) {
    const ExtremumProblem p(d == Direction::inf ? 3.0 : 0.25, 3, 0.7);
    const auto s = estimate(p, d, {}, Execution::serial);
    const auto q = estimate(p, d, {}, Execution::parallel);
    o.require(s.value == q.value && s.best_start == q.best_start, "serial and parallel best differ");
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  for (Direction d : {Direction::inf, Direction::sup}) {
    const ScanGrid grid = default_grid(d);
    const auto rows = scan_pairs(grid.pairs, grid.lambdas, d, {});
    int validation = 0, open = 0;
    for (const auto& r : rows) {
      const std::string at = fmt("(a=%g, n=%g, l=%g) ", r.alpha, r.n, r.lambda) + std::string(to_string(d));
      o.require(!r.failed, "row failed " + at + ": " + r.message);
      if (r.failed) continue;
      if (r.validation) {
        ++validation;
        o.require(r.crosscheck_pass.value_or(true), "validation crosscheck " + at + ": " + r.message);
      } else {
        ++open;
        o.require(r.formula_bound_ok, "formula bound " + at);
      }
      o.require(r.candidate_bound_ok, "candidate bound " + at);
    }
    o.require(validation > 0 && open > 0, "scan has no validation or no open rows");
  }
  return o;
}

}  // namespace

int main() {
  std::printf("acceptance: tolerances abs=%g branch=%g grad=%g margin=%g\n", kAbsTol, kBranchTol, kGradTol,
              kMarginFloor);
  int failed = 0;
  failed += !report(1, "inf, alpha in (0,1]", criterion1, kLimit1);
  failed += !report(2, "inf, alpha > 1 with n >= alpha+1", criterion2);
  failed += !report(3, "inf, alpha=2 n=2 piecewise value", criterion3);
  failed += !report(4, "inf, alpha < 0", criterion4);
  failed += !report(5, "sup, alpha >= 1 and (n-1) alpha >= 1", criterion5);
  failed += !report(6, "sup, alpha=1/2 n=2 piecewise value", criterion6);
  failed += !report(7, "three-variable inequality", criterion7, kLimit7);
  failed += !report(8, "lemma property suites", criterion8);
  failed += !report(9, "oracle integrity", criterion9);
  failed += !report(10, "explorer smoke", criterion10, kLimit10);
  std::printf("acceptance: %d of 10 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
