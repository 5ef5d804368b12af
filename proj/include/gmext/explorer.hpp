#pragma once

// Numerical survey of the (alpha, n) regions with no known closed form.
// Rows in known regimes are kept as validation rows and crosschecked.

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmext/core.hpp"
#include "gmext/oracle.hpp"

namespace gmext {

struct ScanRow {
  double alpha = 0.0;
  int n = 0;
  double lambda = 0.0;
  Direction direction = Direction::inf;
  RegimeTag regime = RegimeTag::INF_OPEN;
  bool validation = false;  // known regime
  bool failed = false;
  std::string message;

  double estimate = 0.0;
  bool boundary_suspect = false;
  int converged_starts = 0;
  // min(1, n/(1+l)^a) for inf, max(n-1, n/(1+l)^a) for sup.
  double formula = 0.0;
  std::optional<double> closed_form;  // validation rows with a finite extremum
  double gap_formula = 0.0;           // estimate - formula
  std::optional<double> gap_closed_form;
  std::optional<bool> crosscheck_pass;

  std::vector<double> critical_values;  // canonical (k, x) order
  std::vector<int> escaped_k;
  std::vector<ExtendedReal> boundary;
  std::optional<double> best_critical;  // min (inf) or max (sup) of critical_values

  // Open rows: estimate on the correct side of the formula (1e-9).
  bool formula_bound_ok = true;
  // Every row: estimate no worse than every critical value and finite
  // boundary candidate (1e-9).
  bool candidate_bound_ok = true;
};

struct AlphaN {
  double alpha = 0.0;
  int n = 0;
};

inline constexpr double kScanSlack = 1e-9;

// Rows in (pair, lambda) order.
std::vector<ScanRow> scan_pairs(const std::vector<AlphaN>& pairs, const std::vector<double>& lambda_grid,
                                Direction direction, const OracleConfig& config,
                                Execution exec = Execution::parallel);

// Cartesian product alpha x n x lambda.
std::vector<ScanRow> scan(const std::vector<double>& alpha_grid, const std::vector<int>& n_list,
                          const std::vector<double>& lambda_grid, Direction direction, const OracleConfig& config,
                          Execution exec = Execution::parallel);

// count points log-spaced over [lo, hi], endpoints included.
std::vector<double> log_grid(double lo, double hi, int count);

struct ScanGrid {
  std::vector<AlphaN> pairs;
  std::vector<double> lambdas;
};

// Open-regime brackets around the two known n = 2 examples, plus the
// validation pairs (2, 2) and (2, 3) for inf, (1/2, 2) and (1/2, 3) for sup.
ScanGrid default_grid(Direction direction);

// JSON grid file: {"alpha": [...], "n": [...], "lambda": [...]} or with
// "lambda": {"min": lo, "max": hi, "count": k}; optional "pairs":
// [[alpha, n], ...] replaces the alpha x n product.
ScanGrid load_grid(const std::string& path);

// Fixed column order, 17 significant digits; list cells joined by ';'.
void write_csv(std::ostream& os, const std::vector<ScanRow>& rows);
std::string csv_header();

bool row_ok(const ScanRow& row);

}  // namespace gmext
