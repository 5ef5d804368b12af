#pragma once

// Lagrange stationarity on H_lambda. At a critical point every coordinate has
// the same value of g(x) = x / (1+x)^(alpha+1), and g takes each value at most
// twice, so critical points use at most two distinct coordinate values.

#include <optional>
#include <vector>

#include "gmext/core.hpp"

namespace gmext {

// Throws DomainError for x <= 0.
double g(double alpha, double x);
// ln g(x), usable far outside the range where g itself is representable.
double log_g(double alpha, double x);
// (1 - alpha x) / (1+x)^(alpha+2)
double g_prime(double alpha, double x);

// The other solution y != x of g(y) = g(x), on the opposite monotone branch of
// g around its peak at 1/alpha. Empty for alpha <= 0 (g is injective) and at
// the peak itself. Throws NumericFailure if the root leaves the representable
// range or the bracketed search fails to converge.
std::optional<double> conjugate_root(double alpha, double x);

enum class CriticalKind { symmetric, asymmetric };

// x repeated k times and y repeated n - k times, x < y for asymmetric points.
struct CriticalPoint {
  int k = 0;
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;
  double multiplier = 0.0;  // mu with d/dx_i [F + mu (prod x - lambda^n)] = 0
  CriticalKind kind = CriticalKind::symmetric;
};

struct CriticalPointSet {
  std::vector<CriticalPoint> points;  // sorted by (k, x); symmetric point last
  // Values of k for which the constraint equation has a root beyond the
  // search cap (y > kMaxConjugate): configurations indistinguishable from a
  // boundary limit, not reported as critical points.
  std::vector<int> escaped_k;
};

inline constexpr double kMaxConjugate = 1e12;
inline constexpr int kSearchCells = 1024;
// Below this alpha the peak 1/alpha is out of practical range and only the
// symmetric point is returned.
inline constexpr double kMinPositiveAlpha = 1e-8;

CriticalPointSet enumerate_critical_points_detailed(const ExtremumProblem& problem,
                                                    Execution exec = Execution::parallel);
std::vector<CriticalPoint> enumerate_critical_points(const ExtremumProblem& problem,
                                                     Execution exec = Execution::parallel);

// The n coordinates of a critical point (k copies of x, then n - k of y).
FeasiblePoint expand(const ExtremumProblem& problem, const CriticalPoint& cp);

}  // namespace gmext
