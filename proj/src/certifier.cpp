#include "gmext/certifier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace gmext {

namespace {

// (1 - u^(b+1))/(1 - u) - 1 = u (1 - u^b) / (1 - u)
double geometric_ratio_minus_one(double beta, double u) {
  const double w = 1.0 - u;
  if (w < 1e-8) {
    // Limit b at u = 1 with first-order correction.
    const double m = beta + 1.0;
    return beta - 0.5 * m * beta * w;
  }
  return -u * std::expm1(beta * std::log(u)) / w;
}

void require_open_unit(double u, const char* what) {
  if (!(u > 0.0 && u < 1.0)) throw DomainError(std::string(what) + ": u must lie in (0, 1)");
}

std::array<double, 3> sample_triple(std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::mt19937_64 rng(seq);
  std::array<double, 3> abc{};
  for (double& v : abc) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    v = std::pow(10.0, kSampleLogMin + (kSampleLogMax - kSampleLogMin) * u);
  }
  return abc;
}

std::vector<double> sample_values(double lambda, int trials, std::uint64_t seed, Execution exec) {
  std::vector<double> values(static_cast<std::size_t>(trials));
  auto one = [&](int i) {
    const auto [a, b, c] = sample_triple(seed, i);
    values[static_cast<std::size_t>(i)] = imo_value(a, b, c, lambda);
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < trials; ++i) one(i);
  } else {
    for (int i = 0; i < trials; ++i) one(i);
  }
  return values;
}

}  // namespace

double geometric_ratio(double beta, double u) { return 1.0 + geometric_ratio_minus_one(beta, u); }

ChainCheck check_eq5(const InequalityCase& c) {
  if (!(c.beta >= 1.0) || !std::isfinite(c.beta)) throw DomainError("check_eq5: beta must be >= 1");
  require_open_unit(c.u, "check_eq5");
  const double b = c.beta;
  const double u = c.u;
  // Each side minus 1, so the margins do not lose the leading digits.
  const double bern = std::expm1(b * std::log1p(u));  // (1+u)^b - 1
  const double lin = b * u;                          // 1 + b u - 1
  const double geo = geometric_ratio_minus_one(b, u);
  ChainCheck r;
  const double m1 = bern - lin;
  const double m2 = lin - geo;
  r.margin = std::min(m1, m2);
  r.holds = m1 >= kMarginTol && m2 >= kMarginTol;
  r.terms = {1.0 + bern, 1.0 + lin, 1.0 + geo};
  return r;
}

ChainCheck check_eq8(double beta, double u) {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("check_eq8: beta must lie in (0, 1)");
  require_open_unit(u, "check_eq8");
  const double lhs = std::expm1(beta * std::log1p(u / beta));
  const double rhs = geometric_ratio_minus_one(beta, u);
  ChainCheck r;
  r.margin = lhs - rhs;
  r.holds = r.margin >= kMarginTol;
  r.terms = {1.0 + lhs, 1.0 + rhs};
  return r;
}

double prop2_f(double beta, double x) {
  // (1-x)((1+x/b)^b - 1) - x + x^(b+1)
  return (1.0 - x) * std::expm1(beta * std::log1p(x / beta)) - x + std::pow(x, beta + 1.0);
}

double prop2_f_prime(double beta, double x) {
  // ((1+b) x / b) (b x^(b-1) - (1+x/b)^(b-1)), with x folded in to stay finite at 0.
  return (1.0 + beta) / beta * (beta * std::pow(x, beta) - x * std::pow(1.0 + x / beta, beta - 1.0));
}

FProfile prop2_f_profile(double beta, int grid) {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("prop2_f_profile: beta must lie in (0, 1)");
  if (grid < 3) throw DomainError("prop2_f_profile: grid must have at least 3 points");

  FProfile p;
  p.beta = beta;
  p.grid = grid;
  p.f_at_0 = prop2_f(beta, 0.0);
  p.f_at_1 = prop2_f(beta, 1.0);
  p.x0 = 1.0 / (std::pow(beta, 1.0 / (beta - 1.0)) - 1.0 / beta);
  p.fprime_at_x0 = prop2_f_prime(beta, p.x0);

  std::ostringstream fail;
  fail.precision(17);
  if (std::abs(p.f_at_0) > 1e-15) fail << "f(0) = " << p.f_at_0 << " is not 0; ";
  if (std::abs(p.f_at_1) > 1e-15) fail << "f(1) = " << p.f_at_1 << " is not 0; ";
  if (!(p.x0 > 0.0 && p.x0 < 1.0)) fail << "stationary point x0 = " << p.x0 << " is outside (0, 1); ";
  if (!(std::abs(p.fprime_at_x0) <= 1e-9)) fail << "|f'(x0)| = " << std::abs(p.fprime_at_x0) << " > 1e-9; ";

  constexpr double h = 1e-6;
  p.min_interior = std::numeric_limits<double>::infinity();
  for (int j = 1; j < grid - 1; ++j) {
    const double x = static_cast<double>(j) / (grid - 1);
    const double fx = prop2_f(beta, x);
    if (fx < p.min_interior) {
      p.min_interior = fx;
      p.argmin_interior = x;
    }
    if (!(fx > 0.0)) fail << "f(x) = " << fx << " <= 0 at grid point " << j << " (x = " << x << "); ";
    if (x >= 2.0 * h && x <= 1.0 - 2.0 * h) {
      const double fd = (prop2_f(beta, x + h) - prop2_f(beta, x - h)) / (2.0 * h);
      p.max_fd_mismatch = std::max(p.max_fd_mismatch, std::abs(fd - prop2_f_prime(beta, x)));
    }
  }
  // Central differences at h = 1e-6 carry O(h^2 f''' + eps/h) error; f''' grows
  // like x^(b-2) at the left end of the grid.
  if (!(p.max_fd_mismatch <= 1e-5)) fail << "closed-form f' disagrees with finite differences by " << p.max_fd_mismatch;

  p.ok = fail.str().empty();
  if (!p.ok) p.failure = fail.str();
  return p;
}

FeasiblePoint imo_map(double a, double b, double c, double lambda) {
  if (!(a > 0.0 && b > 0.0 && c > 0.0 && lambda > 0.0)) throw DomainError("imo_map: a, b, c, lambda must be positive");
  const ExtremumProblem problem(0.5, 3, lambda);
  return FeasiblePoint::make(problem, {lambda * b * c / (a * a), lambda * a * c / (b * b), lambda * a * b / (c * c)});
}

double imo_lhs(double a, double b, double c, double lambda) {
  return a / std::sqrt(a * a + lambda * b * c) + b / std::sqrt(b * b + lambda * a * c) +
         c / std::sqrt(c * c + lambda * a * b);
}

double imo_value(double a, double b, double c, double lambda) {
  return eval_F(ExtremumProblem(0.5, 3, lambda), imo_map(a, b, c, lambda));
}

CertificationReport certify_eq1(double lambda, int trials, std::uint64_t seed, Execution exec) {
  if (!(lambda >= 8.0) || !std::isfinite(lambda)) throw DomainError("certify_eq1: lambda must be at least 8");
  if (trials < 1) throw DomainError("certify_eq1: trials must be positive");

  CertificationReport rep;
  rep.lambda = lambda;
  rep.trials = trials;
  rep.seed = seed;
  rep.bound = 3.0 / std::sqrt(1.0 + lambda);

  const std::vector<double> values = sample_values(lambda, trials, seed, exec);
  rep.min_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < trials; ++i) {
    const double v = values[static_cast<std::size_t>(i)];
    if (v < rep.min_value) {
      rep.min_value = v;
      rep.argmin = sample_triple(seed, i);
    }
    if (v < rep.bound * (1.0 - 1e-12)) {
      ++rep.violations;
      if (!rep.first_violation) rep.first_violation = i;
    }
    if (v - rep.bound <= kNearTight) {
      ++rep.near_tight;
      const auto t = sample_triple(seed, i);
      const auto [lo, hi] = std::minmax({t[0], t[1], t[2]});
      if (hi / lo <= 1.0 + kNearSymmetric) ++rep.near_tight_symmetric;
    }
  }
  rep.pass = rep.violations == 0 && rep.near_tight == rep.near_tight_symmetric;
  return rep;
}

BelowThresholdReport probe_below_threshold(double lambda, int trials, std::uint64_t seed, Execution exec) {
  if (!(lambda > 0.0 && lambda < 8.0)) throw DomainError("probe_below_threshold: lambda must lie in (0, 8)");
  if (trials < 1) throw DomainError("probe_below_threshold: trials must be positive");

  BelowThresholdReport rep;
  rep.lambda = lambda;
  rep.trials = trials;
  rep.bound = 3.0 / std::sqrt(1.0 + lambda);
  const std::vector<double> values = sample_values(lambda, trials, seed, exec);
  rep.min_value = *std::min_element(values.begin(), values.end());
  rep.bound_violations =
      static_cast<int>(std::count_if(values.begin(), values.end(), [&](double v) { return v < rep.bound; }));

  rep.family_t = {1e3, 1e6, 1e9};
  for (double t : rep.family_t) rep.family_values.push_back(imo_value(t, 1.0, 1.0, lambda));
  rep.family_decreasing = std::is_sorted(rep.family_values.rbegin(), rep.family_values.rend()) &&
                          std::adjacent_find(rep.family_values.begin(), rep.family_values.end()) ==
                              rep.family_values.end();
  const bool above_one = rep.min_value > 1.0 - 1e-12 &&
                         std::all_of(rep.family_values.begin(), rep.family_values.end(), [](double v) { return v > 1.0; });
  rep.pass = rep.bound_violations > 0 && above_one && rep.family_decreasing;
  return rep;
}

}  // namespace gmext
