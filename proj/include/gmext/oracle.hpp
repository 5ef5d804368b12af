#pragma once

// Independent numerical estimate of inf/sup F_alpha over H_lambda.
//
// The constraint is eliminated exactly: with v_i = ln(x_i / lambda) for
// i < n free and v_n = -(v_1 + ... + v_{n-1}), every v in R^(n-1) is a point
// of H_lambda. Each start runs projected steepest descent with Armijo
// backtracking on the box [-R, R]^(n-1). Starts are seeded independently from
// (seed, start index), so the parallel and serial paths select the same best
// start.
//
// Start layout: index 0 is the symmetric point, index 1 the degenerate corner
// of the requested direction (all free coordinates at +R for inf, at -R for
// sup), the rest are uniform in [-min(R, 12), min(R, 12)]^(n-1) drawn from
// std::mt19937_64 seeded with std::seed_seq{seed_lo, seed_hi, index}.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gmext/core.hpp"

namespace gmext {

// Environment variable overriding OracleConfig::starts in the CLI.
inline constexpr const char* kStartsEnvVar = "GMEXT_ORACLE_STARTS";

struct OracleConfig {
  int starts = 64;
  std::uint64_t seed = 20010713;
  int max_iters = 10000;
  double tol = 1e-12;
  // Log-space box radius R. Unset: auto_box_radius().
  std::optional<double> box;

  void validate() const;  // DomainError on starts < 1, tol <= 0, R <= 0
};

struct OracleEstimate {
  Direction direction = Direction::inf;
  double value = 0.0;
  FeasiblePoint best_point;
  std::vector<double> best_log_offsets;  // v_1..v_n of the best point
  int best_start = 0;
  int converged_starts = 0;
  int total_starts = 0;
  bool boundary_suspect = false;
  double box_radius = 0.0;
};

class OracleFailure : public NumericFailure {
 public:
  OracleFailure(const std::string& what, int starts, int converged)
      : NumericFailure(what), starts_(starts), converged_(converged) {}
  int starts() const { return starts_; }
  int converged() const { return converged_; }

 private:
  int starts_;
  int converged_;
};

// Radius large enough that boundary limits are resolved to ~1e-10 in F,
// floored at 30 and capped so the dependent coordinate stays representable.
double auto_box_radius(const ExtremumProblem& problem);

// F at log offsets v (size n-1), computed without forming the coordinates.
double objective_log(const ExtremumProblem& problem, std::span<const double> v);
// Analytic gradient: dF/dv_i = alpha (g(x_n) - g(x_i)).
std::vector<double> gradient_log(const ExtremumProblem& problem, std::span<const double> v);
std::vector<double> gradient_log_fd(const ExtremumProblem& problem, std::span<const double> v,
                                    double step = 1e-6);
// Coordinates x_1..x_n for free log offsets v.
FeasiblePoint point_from_log(const ExtremumProblem& problem, std::span<const double> v);
// Free log offsets (size n-1) of a feasible point.
std::vector<double> log_from_point(const ExtremumProblem& problem, const FeasiblePoint& point);

struct DescentResult {
  std::vector<double> v;
  double value = 0.0;  // F (not -F) at v
  int iterations = 0;
  bool converged = false;
};

// One local run from v0 (clamped into the box).
DescentResult local_descent(const ExtremumProblem& problem, Direction direction, std::vector<double> v0,
                            double radius, int max_iters, double tol);

// direction = sup requires alpha >= 0 (DomainError otherwise).
// Throws OracleFailure when no start converges.
OracleEstimate estimate(const ExtremumProblem& problem, Direction direction, const OracleConfig& config = {},
                        Execution exec = Execution::parallel);

struct CrosscheckReport {
  Direction direction = Direction::inf;
  RegimeTag regime = RegimeTag::INF_OPEN;
  double closed_value = 0.0;
  bool attained = false;
  OracleEstimate oracle;
  double abs_gap = 0.0;  // |oracle - closed|
  double rel_gap = 0.0;
  bool pass = false;
  std::string reason;
};

inline constexpr double kCrosscheckTol = 1e-6;

// Precondition: known regime with a finite extremum (DomainError otherwise).
// Pass: |oracle - closed| <= max(1e-6, 1e-6 |closed|); for extrema approached
// only in a limit the oracle must also be on the feasible side and flagged
// boundary_suspect.
CrosscheckReport crosscheck(const ExtremumProblem& problem, Direction direction, const OracleConfig& config = {},
                            Execution exec = Execution::parallel);
// Same comparison for an estimate computed elsewhere.
CrosscheckReport judge(const ExtremumProblem& problem, Direction direction, OracleEstimate estimate);

}  // namespace gmext
