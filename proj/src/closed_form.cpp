#include "gmext/closed_form.hpp"

#include <algorithm>
#include <cmath>

namespace gmext {

namespace {

// (n - 1) * alpha >= 1 decided on the exact product: fma rounds once, so the
// sign of the result is the sign of the exact real (n-1)*alpha - 1.
bool n_at_least_inverse_alpha_plus_one(int n, double alpha) {
  return std::fma(static_cast<double>(n - 1), alpha, -1.0) >= 0.0;
}

ExtremumResult attained_at(Direction d, RegimeTag tag, double value,
                           FeasiblePoint witness) {
  ExtremumResult r;
  r.direction = d;
  r.value = ExtendedReal::finite(value);
  r.attained = true;
  r.witness = std::move(witness);
  r.regime = tag;
  r.method = Method::closed_form;
  return r;
}

ExtremumResult boundary_limit(Direction d, RegimeTag tag, ExtendedReal value, BoundaryLimit limit) {
  ExtremumResult r;
  r.direction = d;
  r.value = value;
  r.attained = false;
  r.boundary = limit;
  r.regime = tag;
  r.method = Method::closed_form;
  return r;
}

ExtremumResult unknown(Direction d, RegimeTag tag, double bound) {
  ExtremumResult r;
  r.direction = d;
  r.value = ExtendedReal::finite(bound);
  r.attained = false;
  r.regime = tag;
  r.method = Method::unknown;
  r.bound = ExtendedReal::finite(bound);
  return r;
}

FeasiblePoint two_value_point(const ExtremumProblem& p, double small, double large) {
  return FeasiblePoint::make(p, {small, large});
}

}  // namespace

RegimeTag classify(const ExtremumProblem& problem, Direction direction) {
  const double a = problem.alpha();
  const int n = problem.n();
  if (a == 0.0) return RegimeTag::SUP_INF_ALPHA0;
  if (direction == Direction::inf) {
    if (a < 0.0) return RegimeTag::INF_P3;
    if (a <= 1.0) return RegimeTag::INF_P1;
    if (a == 2.0 && n == 2) return RegimeTag::INF_EX1;
    // n >= alpha + 1 <=> n - 1 >= alpha; n - 1 is exact in double.
    if (static_cast<double>(n - 1) >= a) return RegimeTag::INF_P2;
    return RegimeTag::INF_OPEN;
  }
  if (a < 0.0) return RegimeTag::SUP_NEG;
  if (a >= 1.0) return RegimeTag::SUP_P4;
  if (a == 0.5 && n == 2) return RegimeTag::SUP_EX2;
  if (n_at_least_inverse_alpha_plus_one(n, a)) return RegimeTag::SUP_P5;
  return RegimeTag::SUP_OPEN;
}

double min_formula(const ExtremumProblem& problem) { return std::min(1.0, problem.symmetric_value()); }

double max_formula(const ExtremumProblem& problem) {
  return std::max(static_cast<double>(problem.n() - 1), problem.symmetric_value());
}

double ex1_symmetric_branch(double lambda) { return 2.0 / ((1.0 + lambda) * (1.0 + lambda)); }

double ex1_asymmetric_branch(double lambda) {
  const double l2 = lambda * lambda;
  const double d = 1.0 - l2;
  return (1.0 - 2.0 * l2) / (d * d);
}

double ex2_asymmetric_branch(double lambda) { return lambda / std::sqrt(lambda * lambda - 1.0); }

double ex2_symmetric_branch(double lambda) { return 2.0 / std::sqrt(1.0 + lambda); }

std::pair<double, double> stable_quadratic_roots(double sum, double product) {
  const double disc = std::max(0.0, sum * sum - 4.0 * product);
  const double large = 0.5 * (sum + std::sqrt(disc));
  const double small = large > 0.0 ? product / large : 0.0;
  return {small, large};
}

ExtremumResult infimum(const ExtremumProblem& p) {
  const Direction d = Direction::inf;
  const RegimeTag tag = classify(p, d);
  const double lam = p.lambda();
  switch (tag) {
    case RegimeTag::SUP_INF_ALPHA0:
      return attained_at(d, tag, p.n(), FeasiblePoint::symmetric(p));
    case RegimeTag::INF_P3:
      return attained_at(d, tag, p.symmetric_value(), FeasiblePoint::symmetric(p));
    case RegimeTag::INF_P1:
    case RegimeTag::INF_P2: {
      const double s = p.symmetric_value();
      // At the tie s == 1 the symmetric point realizes the value.
      if (s <= 1.0) return attained_at(d, tag, s, FeasiblePoint::symmetric(p));
      return boundary_limit(d, tag, ExtendedReal::finite(1.0), {1, p.n() - 1});
    }
    case RegimeTag::INF_EX1: {
      if (lam >= 0.5) return attained_at(d, tag, ex1_symmetric_branch(lam), FeasiblePoint::symmetric(p));
      const double l2 = lam * lam;
      const auto [small, large] = stable_quadratic_roots(1.0 / l2 - 3.0, l2);
      return attained_at(d, tag, ex1_asymmetric_branch(lam), two_value_point(p, small, large));
    }
    case RegimeTag::INF_OPEN:
      return unknown(d, tag, min_formula(p));
    default:
      break;
  }
  throw DomainError("infimum: unexpected regime tag");
}

ExtremumResult supremum(const ExtremumProblem& p) {
  const Direction d = Direction::sup;
  const RegimeTag tag = classify(p, d);
  const double lam = p.lambda();
  switch (tag) {
    case RegimeTag::SUP_INF_ALPHA0:
      return attained_at(d, tag, p.n(), FeasiblePoint::symmetric(p));
    case RegimeTag::SUP_NEG:
      // One coordinate -> +inf already drives a term to +inf.
      return boundary_limit(d, tag, ExtendedReal::pos_infinity(), {p.n() - 1, 1});
    case RegimeTag::SUP_P4:
    case RegimeTag::SUP_P5: {
      const double s = p.symmetric_value();
      const double edge = p.n() - 1;
      if (s >= edge) return attained_at(d, tag, s, FeasiblePoint::symmetric(p));
      return boundary_limit(d, tag, ExtendedReal::finite(edge), {p.n() - 1, 1});
    }
    case RegimeTag::SUP_EX2: {
      if (lam <= 2.0) return attained_at(d, tag, ex2_symmetric_branch(lam), FeasiblePoint::symmetric(p));
      const double l2 = lam * lam;
      const auto [small, large] = stable_quadratic_roots(l2 * (l2 - 3.0), l2);
      return attained_at(d, tag, ex2_asymmetric_branch(lam), two_value_point(p, small, large));
    }
    case RegimeTag::SUP_OPEN:
      return unknown(d, tag, max_formula(p));
    default:
      break;
  }
  throw DomainError("supremum: unexpected regime tag");
}

ExtremumResult extremum(const ExtremumProblem& problem, Direction direction) {
  return direction == Direction::inf ? infimum(problem) : supremum(problem);
}

}  // namespace gmext
