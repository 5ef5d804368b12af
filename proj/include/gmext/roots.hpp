#pragma once

#include <functional>

namespace gmext::roots {

struct Options {
  double width_tol = 1e-14;  // absolute bracket width at which bisection stops
  int max_iter = 200;
  int newton_steps = 3;      // polish steps after bisection, kept inside the bracket
};

struct Result {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Root of f on [lo, hi]. f(lo) and f(hi) must differ in sign (or one of them
// be zero); otherwise DomainError. Bisection until the bracket is narrower than
// width_tol, then a few Newton steps that are accepted only if they stay inside
// the final bracket and reduce |f|. Never throws on non-convergence: callers
// inspect Result::converged and report with their own context.
Result bisect_newton(const std::function<double(double)>& f, const std::function<double(double)>& df,
                     double lo, double hi, const Options& opts = {});

}  // namespace gmext::roots
