#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "gmext/closed_form.hpp"
#include "gmext/explorer.hpp"

using namespace gmext;

namespace {

int count_fields(const std::string& line) {
  int c = 1;
  for (char ch : line) c += ch == ',';
  return c;
}

}  // namespace

TEST(Scan, ExampleRows) {
  {
    const auto rows = scan({2.0}, {2}, {0.25}, Direction::inf, {});
    ASSERT_EQ(rows.size(), 1u);
    const auto& r = rows[0];
    EXPECT_TRUE(r.validation);
    EXPECT_NEAR(r.estimate, 0.99555555555555555556, 1e-6);
    ASSERT_TRUE(r.gap_closed_form);
    EXPECT_LE(std::abs(*r.gap_closed_form), 1e-6);
    EXPECT_NEAR(r.gap_formula, 0.99555555555555555556 - 1.0, 1e-6);
    EXPECT_TRUE(r.crosscheck_pass.value_or(false));
    EXPECT_TRUE(row_ok(r));
  }
  {
    const auto rows = scan({3.0}, {2}, {0.1}, Direction::inf, {});
    const auto& r = rows[0];
    EXPECT_FALSE(r.validation);
    EXPECT_EQ(r.regime, RegimeTag::INF_OPEN);
    EXPECT_LE(r.estimate, std::min(1.0, 2.0 / std::pow(1.1, 3)) + 1e-9);
    ASSERT_TRUE(r.best_critical);
    EXPECT_LE(r.estimate, *r.best_critical + 1e-9);
    EXPECT_TRUE(row_ok(r));
  }
  {
    const auto rows = scan({0.5}, {2}, {3.0}, Direction::sup, {});
    EXPECT_NEAR(rows[0].estimate, 1.0606601717798213, 1e-6);
    EXPECT_TRUE(row_ok(rows[0]));
  }
}

TEST(Scan, DeterministicOrderAndParallelMatch) {
  const auto lam = log_grid(1e-2, 1e2, 5);
  const auto s = scan({1.5, 3.0}, {2, 3}, lam, Direction::inf, {}, Execution::serial);
  const auto p = scan({1.5, 3.0}, {2, 3}, lam, Direction::inf, {}, Execution::parallel);
  ASSERT_EQ(s.size(), 20u);
  ASSERT_EQ(p.size(), 20u);
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(s[i].alpha, p[i].alpha);
    EXPECT_EQ(s[i].n, p[i].n);
    EXPECT_EQ(s[i].lambda, p[i].lambda);
    EXPECT_EQ(s[i].estimate, p[i].estimate);
  }
  EXPECT_EQ(s[0].alpha, 1.5);
  EXPECT_EQ(s[0].n, 2);
  EXPECT_EQ(s[5].n, 3);
}

TEST(LogGrid, Endpoints) {
  const auto g = log_grid(1e-3, 1e3, 33);
  ASSERT_EQ(g.size(), 33u);
  EXPECT_DOUBLE_EQ(g.front(), 1e-3);
  EXPECT_DOUBLE_EQ(g.back(), 1e3);
  EXPECT_NEAR(g[16], 1.0, 1e-15);
}

TEST(DefaultGrid, CoversOpenRegimesAndValidationPairs) {
  const auto gi = default_grid(Direction::inf);
  EXPECT_EQ(gi.lambdas.size(), 33u);
  int open = 0, known = 0;
  for (const auto& pr : gi.pairs) {
    const bool o = is_open(classify(ExtremumProblem(pr.alpha, pr.n, 1), Direction::inf));
    open += o;
    known += !o;
  }
  EXPECT_GT(open, 0);
  EXPECT_GT(known, 0);
  const auto gs = default_grid(Direction::sup);
  bool has_quarter_four = false;
  for (const auto& pr : gs.pairs) has_quarter_four = has_quarter_four || (pr.alpha == 0.25 && pr.n == 4);
  EXPECT_TRUE(has_quarter_four);
}

TEST(Csv, HeaderAndRowShape) {
  const auto rows = scan({2.0}, {2}, {0.25, 1.0}, Direction::inf, {});
  std::ostringstream os;
  write_csv(os, rows);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, csv_header());
  const int cols = count_fields(line);
  EXPECT_EQ(cols, 22);
  int data = 0;
  while (std::getline(is, line)) {
    EXPECT_EQ(count_fields(line), cols);
    ++data;
  }
  EXPECT_EQ(data, 2);
}
