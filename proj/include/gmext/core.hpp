#pragma once

// Domain types shared by every module: the problem triple (alpha, n, lambda),
// feasible points on the fixed-geometric-mean surface, extended reals and the
// extremum result record.

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gmext {

class FeasibilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Kernels that have an OpenMP path keep a serial path as the reference.
enum class Execution { serial, parallel };

enum class Direction { inf, sup };

std::string_view to_string(Direction d);
Direction parse_direction(std::string_view s);

// Real number or +infinity. Only +infinity is needed: no extremum here can be
// -infinity since F is a sum of positive terms.
class ExtendedReal {
 public:
  static ExtendedReal finite(double v);
  static ExtendedReal pos_infinity() { return ExtendedReal(0.0, true); }

  bool is_finite() const { return !infinite_; }
  bool is_pos_infinity() const { return infinite_; }
  // Throws DomainError when infinite.
  double value() const;
  // +inf as the IEEE value; convenient for comparisons only.
  double as_double() const;

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
  }
  friend std::partial_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b) {
    return a.as_double() <=> b.as_double();
  }

  std::string str() const;

 private:
  ExtendedReal(double v, bool inf) : v_(v), infinite_(inf) {}
  double v_;
  bool infinite_;
};

// F_alpha on H_lambda in dimension n.
class ExtremumProblem {
 public:
  // Throws DomainError unless n >= 2, lambda > 0 and alpha, lambda finite.
  ExtremumProblem(double alpha, int n, double lambda);

  double alpha() const { return alpha_; }
  int n() const { return n_; }
  double lambda() const { return lambda_; }
  double log_lambda() const { return log_lambda_; }

  // n / (1 + lambda)^alpha, the value at the symmetric point.
  double symmetric_value() const;

 private:
  double alpha_;
  int n_;
  double lambda_;
  double log_lambda_;
};

inline constexpr double kFeasibilityRelTol = 1e-12;

// Positive coordinates whose product equals lambda^n. Construction checks the
// invariants; the product is compared in log space.
class FeasiblePoint {
 public:
  // Empty; not feasible for any problem.
  FeasiblePoint() = default;
  static FeasiblePoint make(const ExtremumProblem& problem, std::vector<double> coords);
  static FeasiblePoint symmetric(const ExtremumProblem& problem);

  std::span<const double> coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }

 private:
  explicit FeasiblePoint(std::vector<double> c) : coords_(std::move(c)) {}
  std::vector<double> coords_;
};

// Throws FeasibilityError naming the violated invariant.
void check_feasible(const ExtremumProblem& problem, std::span<const double> coords);

// 1 / (1 + x)^alpha
double term(double alpha, double x);

double eval_F(const ExtremumProblem& problem, const FeasiblePoint& point);
// Same sum without the feasibility check; for hot loops on points that are
// feasible by construction.
double eval_F_unchecked(double alpha, std::span<const double> coords);

// Limits of F along degenerate families (coordinates tending to 0 or +inf).
// Sorted ascending.
std::vector<ExtendedReal> boundary_candidates(const ExtremumProblem& problem);

enum class RegimeTag {
  INF_P1,
  INF_P2,
  INF_EX1,
  INF_P3,
  INF_OPEN,
  SUP_P4,
  SUP_P5,
  SUP_EX2,
  SUP_INF_ALPHA0,
  SUP_NEG,
  SUP_OPEN,
};

std::string_view to_string(RegimeTag tag);
bool is_open(RegimeTag tag);

enum class Method { closed_form, numeric, unknown };
std::string_view to_string(Method m);

// Degenerate family along which a non-attained extremum is approached.
struct BoundaryLimit {
  int to_zero = 0;
  int to_infinity = 0;
  friend bool operator==(const BoundaryLimit&, const BoundaryLimit&) = default;
};

struct ExtremumResult {
  Direction direction = Direction::inf;
  ExtendedReal value = ExtendedReal::finite(0.0);
  bool attained = false;
  std::optional<FeasiblePoint> witness;
  std::optional<BoundaryLimit> boundary;
  RegimeTag regime = RegimeTag::INF_OPEN;
  Method method = Method::unknown;
  // Open regimes only: best known one-sided bound (an upper bound on the
  // infimum, a lower bound on the supremum).
  std::optional<ExtendedReal> bound;
};

}  // namespace gmext
