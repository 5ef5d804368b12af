#include "gmext/roots.hpp"

#include <cmath>

#include "gmext/core.hpp"

namespace gmext::roots {

Result bisect_newton(const std::function<double(double)>& f, const std::function<double(double)>& df,
                     double lo, double hi, const Options& opts) {
  if (lo > hi) std::swap(lo, hi);
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, 0.0, 0, true};
  if (fhi == 0.0) return {hi, 0.0, 0, true};
  if (std::signbit(flo) == std::signbit(fhi)) throw DomainError("bisect_newton: root not bracketed");

  Result r;
  int it = 0;
  bool at_resolution = false;
  while (hi - lo > opts.width_tol && it < opts.max_iter) {
    ++it;
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) {
      at_resolution = true;
      break;
    }
    const double fm = f(mid);
    if (fm == 0.0) return {mid, 0.0, it, true};
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  r.converged = at_resolution || hi - lo <= opts.width_tol;

  double x = std::abs(flo) <= std::abs(fhi) ? lo : hi;
  double fx = std::abs(flo) <= std::abs(fhi) ? flo : fhi;
  for (int k = 0; k < opts.newton_steps && fx != 0.0; ++k) {
    const double d = df(x);
    if (!(d != 0.0) || !std::isfinite(d)) break;
    const double cand = x - fx / d;
    if (!(cand >= lo && cand <= hi)) break;
    const double fc = f(cand);
    if (!(std::abs(fc) < std::abs(fx))) break;
    x = cand;
    fx = fc;
    ++it;
  }
  r.x = x;
  r.fx = fx;
  r.iterations = it;
  return r;
}

}  // namespace gmext::roots
