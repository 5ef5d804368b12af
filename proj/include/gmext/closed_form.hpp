#pragma once

// Closed-form infimum and supremum of F_alpha on H_lambda wherever they are
// known, with regime classification over (alpha, n).

#include <utility>

#include "gmext/core.hpp"

namespace gmext {

// Total over (alpha, n); lambda does not affect the tag.
RegimeTag classify(const ExtremumProblem& problem, Direction direction);

// Open regimes come back with method = unknown, attained = false and
// `bound` = min(1, n/(1+lambda)^alpha), an upper bound on the infimum.
ExtremumResult infimum(const ExtremumProblem& problem);

// Open regimes come back with method = unknown and `bound` =
// max(n-1, n/(1+lambda)^alpha), a lower bound on the supremum.
ExtremumResult supremum(const ExtremumProblem& problem);

ExtremumResult extremum(const ExtremumProblem& problem, Direction direction);

// The two-term formulas that apply outside the special examples:
// min(1, n/(1+lambda)^alpha) and max(n-1, n/(1+lambda)^alpha).
double min_formula(const ExtremumProblem& problem);
double max_formula(const ExtremumProblem& problem);

// alpha = 2, n = 2 minimum, both branches exposed for continuity checks.
double ex1_symmetric_branch(double lambda);   // 2 / (1+lambda)^2
double ex1_asymmetric_branch(double lambda);  // (1 - 2 lambda^2) / (1 - lambda^2)^2
// alpha = 1/2, n = 2 maximum.
double ex2_asymmetric_branch(double lambda);  // lambda / sqrt(lambda^2 - 1)
double ex2_symmetric_branch(double lambda);   // 2 / sqrt(1 + lambda)

// Roots (small, large) of t^2 - sum*t + product = 0, the large one computed
// without cancellation and the small one as product / large.
std::pair<double, double> stable_quadratic_roots(double sum, double product);

}  // namespace gmext
