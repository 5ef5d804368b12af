#include "gmext/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace gmext {

std::string_view to_string(Direction d) { return d == Direction::inf ? "inf" : "sup"; }

Direction parse_direction(std::string_view s) {
  if (s == "inf") return Direction::inf;
  if (s == "sup") return Direction::sup;
  throw DomainError("direction must be 'inf' or 'sup', got '" + std::string(s) + "'");
}

ExtendedReal ExtendedReal::finite(double v) {
  if (!std::isfinite(v)) throw DomainError("ExtendedReal::finite: value is not finite");
  return ExtendedReal(v, false);
}

double ExtendedReal::value() const {
  if (infinite_) throw DomainError("ExtendedReal::value: value is +infinity");
  return v_;
}

double ExtendedReal::as_double() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : v_;
}

std::string ExtendedReal::str() const {
  if (infinite_) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << v_;
  return os.str();
}

ExtremumProblem::ExtremumProblem(double alpha, int n, double lambda)
    : alpha_(alpha), n_(n), lambda_(lambda), log_lambda_(0.0) {
  if (!std::isfinite(alpha)) throw DomainError("alpha must be finite");
  if (n < 2) throw DomainError("n must be at least 2");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be positive and finite");
  log_lambda_ = std::log(lambda);
}

double ExtremumProblem::symmetric_value() const { return n_ * term(alpha_, lambda_); }

double term(double alpha, double x) { return std::exp(-alpha * std::log1p(x)); }

void check_feasible(const ExtremumProblem& problem, std::span<const double> coords) {
  if (coords.size() != static_cast<std::size_t>(problem.n())) {
    throw FeasibilityError("point has " + std::to_string(coords.size()) + " coordinates, expected n=" +
                           std::to_string(problem.n()));
  }
  // Sum of ln(x_i / lambda): small terms, so no cancellation against n ln lambda.
  double log_offset = 0.0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const double x = coords[i];
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw FeasibilityError("coordinate " + std::to_string(i) + " is not a finite positive real");
    }
    const double ratio = x / problem.lambda();
    log_offset += std::isnormal(ratio) ? std::log(ratio) : std::log(x) - problem.log_lambda();
  }
  // |prod / lambda^n - 1|
  const double rel = std::abs(std::expm1(log_offset));
  if (!(rel <= kFeasibilityRelTol)) {
    std::ostringstream os;
    os.precision(3);
    os << "product of coordinates differs from lambda^n by relative " << rel << " (tolerance "
       << kFeasibilityRelTol << ")";
    throw FeasibilityError(os.str());
  }
}

FeasiblePoint FeasiblePoint::make(const ExtremumProblem& problem, std::vector<double> coords) {
  check_feasible(problem, coords);
  return FeasiblePoint(std::move(coords));
}

FeasiblePoint FeasiblePoint::symmetric(const ExtremumProblem& problem) {
  return FeasiblePoint(std::vector<double>(static_cast<std::size_t>(problem.n()), problem.lambda()));
}

double eval_F_unchecked(double alpha, std::span<const double> coords) {
  double s = 0.0;
  for (double x : coords) s += term(alpha, x);
  return s;
}

double eval_F(const ExtremumProblem& problem, const FeasiblePoint& point) {
  check_feasible(problem, point.coords());
  return eval_F_unchecked(problem.alpha(), point.coords());
}

std::vector<ExtendedReal> boundary_candidates(const ExtremumProblem& problem) {
  const double a = problem.alpha();
  if (a < 0.0) return {ExtendedReal::pos_infinity()};
  if (a == 0.0) return {ExtendedReal::finite(problem.n())};
  // s coordinates -> 0 contribute 1 each, the remaining n - s -> +inf contribute 0.
  std::vector<ExtendedReal> out;
  for (int s = 1; s <= problem.n() - 1; ++s) out.push_back(ExtendedReal::finite(s));
  return out;
}

std::string_view to_string(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::INF_P1: return "INF_P1";
    case RegimeTag::INF_P2: return "INF_P2";
    case RegimeTag::INF_EX1: return "INF_EX1";
    case RegimeTag::INF_P3: return "INF_P3";
    case RegimeTag::INF_OPEN: return "INF_OPEN";
    case RegimeTag::SUP_P4: return "SUP_P4";
    case RegimeTag::SUP_P5: return "SUP_P5";
    case RegimeTag::SUP_EX2: return "SUP_EX2";
    case RegimeTag::SUP_INF_ALPHA0: return "SUP_INF_ALPHA0";
    case RegimeTag::SUP_NEG: return "SUP_NEG";
    case RegimeTag::SUP_OPEN: return "SUP_OPEN";
  }
  return "?";
}

bool is_open(RegimeTag tag) { return tag == RegimeTag::INF_OPEN || tag == RegimeTag::SUP_OPEN; }

std::string_view to_string(Method m) {
  switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::numeric: return "numeric";
    case Method::unknown: return "unknown";
  }
  return "?";
}

}  // namespace gmext
