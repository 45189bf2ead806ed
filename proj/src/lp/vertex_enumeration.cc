#include "prophet/lp/vertex_enumeration.h"

#include <algorithm>
#include <cmath>

namespace prophet::lp {
namespace {

// One candidate active constraint: a'x = rhs.
struct Constraint {
  std::vector<double> coeffs;
  double rhs;
};

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (std::int64_t{1} << 50)) return r;
  }
  return r;
}

// Solves the square system by Gaussian elimination with partial pivoting.
bool solve_square(std::vector<std::vector<double>> a, std::vector<double> b, std::vector<double>& x) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) < 1e-10) return false;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (int r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (int k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  x.assign(n, 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int k = r + 1; k < n; ++k) s -= a[r][k] * x[k];
    x[r] = s / a[r][r];
  }
  return true;
}

}  // namespace

EnumerationResult enumerate_vertices(const LpProblem& problem, std::int64_t max_candidates, double tolerance) {
  problem.validate();
  const int n = problem.num_vars();
  const int m = problem.num_rows();

  std::vector<Constraint> forced;
  std::vector<Constraint> optional;
  for (int i = 0; i < m; ++i) {
    Constraint c{std::vector<double>(n, 0.0), problem.rhs[i]};
    for (int j = 0; j < n; ++j) c.coeffs[j] = problem.matrix.coefficient(i, j);
    (problem.row_sense[i] == RowSense::kEqual ? forced : optional).push_back(std::move(c));
  }
  for (int j = 0; j < n; ++j) {
    Constraint lo{std::vector<double>(n, 0.0), 0.0};
    lo.coeffs[j] = 1.0;
    optional.push_back(lo);
    if (std::isfinite(problem.upper_bounds[j])) {
      Constraint up{std::vector<double>(n, 0.0), problem.upper_bounds[j]};
      up.coeffs[j] = 1.0;
      optional.push_back(std::move(up));
    }
  }

  EnumerationResult result;
  const int pick = n - static_cast<int>(forced.size());
  if (pick < 0) {
    throw InstanceTooLarge("vertex enumeration needs at least as many variables as equality rows");
  }
  const int pool = static_cast<int>(optional.size());
  if (binomial(pool, pick) > max_candidates) {
    throw InstanceTooLarge("vertex enumeration candidate count exceeds the budget");
  }

  double scale = 1.0;
  for (double v : problem.rhs) scale = std::max(scale, std::abs(v));
  for (double v : problem.upper_bounds) {
    if (std::isfinite(v)) scale = std::max(scale, v);
  }

  std::vector<int> chosen(pick);
  for (int k = 0; k < pick; ++k) chosen[k] = k;
  std::vector<std::vector<double>> a(n);
  std::vector<double> b(n);
  std::vector<double> x;
  bool done = pick > pool;
  while (!done) {
    int row = 0;
    for (const auto& c : forced) {
      a[row] = c.coeffs;
      b[row++] = c.rhs;
    }
    for (int k : chosen) {
      a[row] = optional[k].coeffs;
      b[row++] = optional[k].rhs;
    }
    if (n == 0 || solve_square(a, b, x)) {
      if (n == 0) x.clear();
      if (max_violation(problem, x) <= tolerance * scale) {
        const bool seen = std::any_of(result.vertices.begin(), result.vertices.end(), [&](const auto& v) {
          for (int j = 0; j < n; ++j) {
            if (std::abs(v[j] - x[j]) > 1e-9) return false;
          }
          return true;
        });
        if (!seen) result.vertices.push_back(x);
      }
    }
    // Next combination in lexicographic order.
    int k = pick - 1;
    while (k >= 0 && chosen[k] == pool - pick + k) --k;
    if (k < 0) {
      done = true;
    } else {
      ++chosen[k];
      for (int q = k + 1; q < pick; ++q) chosen[q] = chosen[q - 1] + 1;
    }
  }

  if (!result.vertices.empty()) {
    result.status = LpStatus::kOptimal;
    result.objective_value = -kInfinity;
    for (const auto& v : result.vertices) {
      result.objective_value = std::max(result.objective_value, objective_of(problem, v));
    }
  }
  return result;
}

std::vector<std::vector<double>> optimal_vertices(const LpProblem& problem, double tolerance) {
  auto all = enumerate_vertices(problem);
  std::vector<std::vector<double>> best;
  if (all.status != LpStatus::kOptimal) return best;
  for (auto& v : all.vertices) {
    if (objective_of(problem, v) >= all.objective_value - tolerance) best.push_back(std::move(v));
  }
  return best;
}

}  // namespace prophet::lp
