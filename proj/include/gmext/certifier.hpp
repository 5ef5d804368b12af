#pragma once

// Executable checks of the inequality lemmas behind the closed forms, and of
// the three-variable olympiad inequality
//   a/sqrt(a^2 + l bc) + b/sqrt(b^2 + l ac) + c/sqrt(c^2 + l ab) >= 3/sqrt(1+l)
// for l >= 8, through its rewrite as F_{1/2} on H_l with n = 3.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gmext/core.hpp"

namespace gmext {

// Margins at or above this count as satisfied (roundoff at near-equality).
inline constexpr double kMarginTol = -1e-15;

struct InequalityCase {
  double beta = 1.0;  // 1 / alpha
  double u = 0.5;     // ratio of (1+x)^alpha to (1+y)^alpha, in (0, 1)
};

struct ChainCheck {
  bool holds = false;
  double margin = 0.0;        // min of the individual margins
  std::vector<double> terms;  // the evaluated sides, left to right
};

// (1 - u^(b+1)) / (1 - u), stable as u -> 1.
double geometric_ratio(double beta, double u);

// (1+u)^b >= 1 + b u > (1 - u^(b+1))/(1-u) for b >= 1, 0 < u < 1.
// At b = 1 both links are identities and the margin is 0 up to rounding.
ChainCheck check_eq5(const InequalityCase& c);

// (1 + u/b)^b > (1 - u^(b+1))/(1-u) for b, u in (0, 1).
ChainCheck check_eq8(double beta, double u);

struct FProfile {
  double beta = 0.0;
  int grid = 0;
  double f_at_0 = 0.0;
  double f_at_1 = 0.0;
  double min_interior = 0.0;
  double argmin_interior = 0.0;
  double x0 = 0.0;             // unique stationary point of f on (0, 1)
  double fprime_at_x0 = 0.0;   // closed-form derivative
  double max_fd_mismatch = 0.0;  // closed-form f' vs central differences, over the grid
  bool ok = false;
  std::optional<std::string> failure;
};

// f(x) = (1-x)(1 + x/b)^b + x^(b+1) - 1 on [0, 1], positive inside.
double prop2_f(double beta, double x);
double prop2_f_prime(double beta, double x);
FProfile prop2_f_profile(double beta, int grid);

// (l bc/a^2, l ac/b^2, l ab/c^2), a point of H_l for n = 3.
FeasiblePoint imo_map(double a, double b, double c, double lambda);
// Left side of the olympiad inequality, computed directly from (a, b, c).
double imo_lhs(double a, double b, double c, double lambda);
// Same value through imo_map and eval_F with alpha = 1/2.
double imo_value(double a, double b, double c, double lambda);

struct CertificationReport {
  double lambda = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
  double bound = 0.0;  // 3 / sqrt(1 + lambda)
  double min_value = 0.0;
  std::array<double, 3> argmin{};
  int violations = 0;
  std::optional<int> first_violation;  // lowest trial index
  // Trials with value within kNearTight of the bound, and how many of those
  // are near-symmetric (max/min coordinate ratio <= 1 + kNearSymmetric).
  int near_tight = 0;
  int near_tight_symmetric = 0;
  bool pass = false;
};

inline constexpr double kNearTight = 1e-9;
inline constexpr double kNearSymmetric = 1e-3;
inline constexpr double kSampleLogMin = -6.0;  // log10 of the sampling range
inline constexpr double kSampleLogMax = 6.0;

// Requires lambda >= 8 (DomainError otherwise). Triples log-uniform over
// [1e-6, 1e6]; trial i is seeded from (seed, i).
CertificationReport certify_eq1(double lambda, int trials, std::uint64_t seed,
                                Execution exec = Execution::parallel);

struct BelowThresholdReport {
  double lambda = 0.0;
  double bound = 0.0;         // 3/sqrt(1+lambda), exceeds 1 here
  int trials = 0;
  int bound_violations = 0;   // sampled triples below the bound
  double min_value = 0.0;     // stays above 1
  std::vector<double> family_t;       // a = t, b = c = 1
  std::vector<double> family_values;  // decreasing toward 1
  bool family_decreasing = false;
  bool pass = false;
};

// 0 < lambda < 8: the bound fails and the infimum is 1, approached along
// (t, 1, 1) as t -> infinity.
BelowThresholdReport probe_below_threshold(double lambda, int trials, std::uint64_t seed,
                                           Execution exec = Execution::parallel);

}  // namespace gmext
