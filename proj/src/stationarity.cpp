#include "gmext/stationarity.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>

#include "gmext/roots.hpp"

namespace gmext {

namespace {

constexpr double kLogMax = 709.0;

double softplus(double t) { return t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t)); }

double logistic(double t) {
  return t >= 0.0 ? 1.0 / (1.0 + std::exp(-t)) : std::exp(t) / (1.0 + std::exp(t));
}

// ln g(e^t) and its t-derivative.
double log_g_of_log(double alpha, double t) { return t - (alpha + 1.0) * softplus(t); }
double dlog_g_of_log(double alpha, double t) { return 1.0 - (alpha + 1.0) * logistic(t); }

// Rounding scale of log_g_of_log, for acceptance of a computed conjugate.
double log_g_scale(double alpha, double t) { return std::abs(t) + std::abs(alpha + 1.0) * softplus(t); }

// Conjugate in log coordinates. Precondition alpha > 0 and t != -ln(alpha).
double conjugate_log(double alpha, double t) {
  const double peak = -std::log(alpha);
  const double target = log_g_of_log(alpha, t);
  auto f = [&](double s) { return log_g_of_log(alpha, s) - target; };
  auto df = [&](double s) { return dlog_g_of_log(alpha, s); };

  // f(peak) >= 0; march away from the peak on the other branch until f < 0.
  const double dir = t < peak ? 1.0 : -1.0;
  double step = 1.0;
  double far = peak + dir * step;
  while (f(far) >= 0.0) {
    step *= 2.0;
    far = peak + dir * step;
    if (std::abs(far) > kLogMax) {
      std::ostringstream os;
      os.precision(17);
      os << "conjugate_root: conjugate of x=exp(" << t << ") for alpha=" << alpha
         << " is outside the representable range";
      throw NumericFailure(os.str());
    }
  }
  roots::Options opts;
  opts.width_tol = 1e-14;
  const auto r = roots::bisect_newton(f, df, std::min(peak, far), std::max(peak, far), opts);
  const double tol = std::max(1e-13, 8.0 * std::numeric_limits<double>::epsilon() *
                                         std::max(log_g_scale(alpha, t), log_g_scale(alpha, r.x)));
  if (!r.converged || !(std::abs(r.fx) <= tol)) {
    std::ostringstream os;
    os.precision(17);
    os << "conjugate_root: bracketed search did not converge for alpha=" << alpha << ", x=exp(" << t
       << ") after " << r.iterations << " iterations (residual " << r.fx << ")";
    throw NumericFailure(os.str());
  }
  return r.x;
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

double g(double alpha, double x) {
  if (!(x > 0.0)) throw DomainError("g: x must be positive");
  return x / std::pow(1.0 + x, alpha + 1.0);
}

double log_g(double alpha, double x) {
  if (!(x > 0.0)) throw DomainError("log_g: x must be positive");
  return std::log(x) - (alpha + 1.0) * std::log1p(x);
}

double g_prime(double alpha, double x) {
  if (!(x > 0.0)) throw DomainError("g_prime: x must be positive");
  return (1.0 - alpha * x) / std::pow(1.0 + x, alpha + 2.0);
}

std::optional<double> conjugate_root(double alpha, double x) {
  if (!(x > 0.0)) throw DomainError("conjugate_root: x must be positive");
  if (alpha <= 0.0) return std::nullopt;
  if (x == 1.0 / alpha) return std::nullopt;
  const double t = std::log(x);
  if (t == -std::log(alpha)) return std::nullopt;
  return std::exp(conjugate_log(alpha, t));
}

FeasiblePoint expand(const ExtremumProblem& problem, const CriticalPoint& cp) {
  std::vector<double> coords(static_cast<std::size_t>(problem.n()), cp.y);
  std::fill_n(coords.begin(), cp.k, cp.x);
  return FeasiblePoint::make(problem, std::move(coords));
}

CriticalPointSet enumerate_critical_points_detailed(const ExtremumProblem& problem, Execution exec) {
  const double alpha = problem.alpha();
  const int n = problem.n();
  const double lam = problem.lambda();
  const double target = n * problem.log_lambda();

  CriticalPointSet out;
  CriticalPoint sym;
  sym.k = n;
  sym.x = sym.y = lam;
  sym.value = problem.symmetric_value();
  sym.multiplier = alpha * std::exp(log_g(alpha, lam) - target);
  sym.kind = CriticalKind::symmetric;

  if (alpha < kMinPositiveAlpha) {
    out.points.push_back(sym);
    return out;
  }

  // Lower-branch log-coordinates from the cap (y = kMaxConjugate) up to the peak.
  const double peak = -std::log(alpha);
  const double t_min = conjugate_log(alpha, std::log(kMaxConjugate));
  std::vector<double> t(kSearchCells + 1), s(kSearchCells + 1);
  for (int j = 0; j <= kSearchCells; ++j) t[j] = t_min + (peak - t_min) * (static_cast<double>(j) / kSearchCells);
  t[kSearchCells] = peak;
  s[kSearchCells] = peak;

  std::exception_ptr failure;
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (int j = 0; j < kSearchCells; ++j) {
      try {
        s[j] = conjugate_log(alpha, t[j]);
      } catch (...) {
#pragma omp critical(gmext_enum_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  } else {
    for (int j = 0; j < kSearchCells; ++j) s[j] = conjugate_log(alpha, t[j]);
  }
  if (failure) std::rethrow_exception(failure);

  for (int k = 1; k <= n - 1; ++k) {
    const int m = n - k;
    auto h = [&](double tx) { return k * tx + m * conjugate_log(alpha, tx) - target; };
    auto dh = [&](double tx) {
      const double sy = conjugate_log(alpha, tx);
      return k + m * dlog_g_of_log(alpha, tx) / dlog_g_of_log(alpha, sy);
    };
    std::vector<double> hv(kSearchCells + 1);
    for (int j = 0; j <= kSearchCells; ++j) hv[j] = k * t[j] + m * s[j] - target;

    // Odd number of roots below the cap: the sign of h as t -> -inf is that
    // of -(k - m/alpha) since y ~ x^(-1/alpha) there.
    const double slope = k - m / alpha;
    if (slope != 0.0 && hv[0] != 0.0 && sign_of(hv[0]) != -sign_of(slope)) out.escaped_k.push_back(k);

    std::vector<double> found;
    for (int j = 0; j < kSearchCells; ++j) {
      double root;
      if (hv[j] == 0.0) {
        root = t[j];
      } else if (hv[j + 1] != 0.0 && sign_of(hv[j]) != sign_of(hv[j + 1])) {
        roots::Options opts;
        opts.width_tol = 1e-14;
        const auto r = roots::bisect_newton(h, dh, t[j], t[j + 1], opts);
        if (!r.converged) {
          std::ostringstream os;
          os.precision(17);
          os << "enumerate_critical_points: no convergence for k=" << k << " in bracket [exp(" << t[j]
             << "), exp(" << t[j + 1] << ")]";
          throw NumericFailure(os.str());
        }
        root = r.x;
      } else {
        continue;
      }
      // A root at the peak is the symmetric point (lambda == 1/alpha).
      if (std::abs(root - peak) <= 1e-10) continue;
      if (!found.empty() && std::abs(root - found.back()) <= 1e-10) continue;
      found.push_back(root);
    }

    for (double tx : found) {
      // y from the constraint so the point is feasible to rounding; the
      // stationarity residual below absorbs the root-finding error instead.
      const double sy = (target - k * tx) / m;
      CriticalPoint cp;
      cp.k = k;
      cp.x = std::exp(tx);
      cp.y = std::exp(sy);
      cp.value = k * term(alpha, cp.x) + m * term(alpha, cp.y);
      cp.multiplier = alpha * std::exp(log_g_of_log(alpha, tx) - target);
      cp.kind = CriticalKind::asymmetric;
      const double g_gap = std::abs(log_g_of_log(alpha, tx) - log_g_of_log(alpha, sy));
      const double p_gap = std::abs(k * std::log(cp.x) + m * std::log(cp.y) - target);
      if (!(g_gap <= 1e-10) || !(p_gap <= 1e-10 * std::max(1.0, std::abs(target))) || !(cp.x < cp.y)) {
        std::ostringstream os;
        os << "enumerate_critical_points: refined root for k=" << k
           << " violates stationarity or feasibility";
        throw NumericFailure(os.str());
      }
      out.points.push_back(cp);
    }
  }

  out.points.push_back(sym);
  std::stable_sort(out.points.begin(), out.points.end(),
                   [](const CriticalPoint& a, const CriticalPoint& b) {
                     return a.k != b.k ? a.k < b.k : a.x < b.x;
                   });
  return out;
}

std::vector<CriticalPoint> enumerate_critical_points(const ExtremumProblem& problem, Execution exec) {
  return enumerate_critical_points_detailed(problem, exec).points;
}

}  // namespace gmext
