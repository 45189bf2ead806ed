#include "prophet/lp/problem.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace prophet::lp {

void SparseMatrix::add_column(std::span<const Entry> entries) {
  for (const Entry& e : entries) {
    if (e.row < 0 || e.row >= num_rows_) throw ConfigError("sparse column entry row out of range");
    if (e.value != 0.0) entries_.push_back(e);
  }
  std::sort(entries_.begin() + static_cast<std::ptrdiff_t>(col_start_.back()), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.row < b.row; });
  col_start_.push_back(entries_.size());
}

double SparseMatrix::coefficient(int row, int col) const {
  for (const Entry& e : column(col)) {
    if (e.row == row) return e.value;
  }
  return 0.0;
}

int LpProblem::add_variable(double cost, double upper, std::span<const SparseMatrix::Entry> entries) {
  matrix.add_column(entries);
  objective.push_back(cost);
  upper_bounds.push_back(upper);
  return num_vars() - 1;
}

void LpProblem::validate() const {
  const auto n = static_cast<std::size_t>(num_vars());
  const auto m = static_cast<std::size_t>(num_rows());
  if (objective.size() != n || upper_bounds.size() != n) {
    throw ConfigError("LP objective/upper-bound length does not match the variable count");
  }
  if (rhs.size() != m || row_sense.size() != m) {
    throw ConfigError("LP rhs/sense length does not match the row count");
  }
  for (double u : upper_bounds) {
    if (std::isnan(u) || u < 0.0) throw ConfigError("LP upper bounds must be nonnegative");
  }
  for (double c : objective) {
    if (!std::isfinite(c)) throw ConfigError("LP objective must be finite");
  }
  for (double b : rhs) {
    if (!std::isfinite(b)) throw ConfigError("LP rhs must be finite");
  }
}

LpProblem LpProblem::from_dense(std::span<const double> c, const std::vector<std::vector<double>>& a,
                                std::span<const double> b, std::span<const double> u) {
  LpProblem p(static_cast<int>(b.size()));
  std::copy(b.begin(), b.end(), p.rhs.begin());
  std::vector<SparseMatrix::Entry> col;
  for (std::size_t j = 0; j < c.size(); ++j) {
    col.clear();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].size() != c.size()) throw ConfigError("dense LP row has wrong length");
      if (a[i][j] != 0.0) col.push_back({static_cast<int>(i), a[i][j]});
    }
    p.add_variable(c[j], u[j], col);
  }
  return p;
}

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

double max_violation(const LpProblem& problem, std::span<const double> x) {
  double worst = 0.0;
  std::vector<double> activity(problem.num_rows(), 0.0);
  for (int j = 0; j < problem.num_vars(); ++j) {
    worst = std::max(worst, -x[j]);
    if (std::isfinite(problem.upper_bounds[j])) worst = std::max(worst, x[j] - problem.upper_bounds[j]);
    for (const auto& e : problem.matrix.column(j)) activity[e.row] += e.value * x[j];
  }
  for (int i = 0; i < problem.num_rows(); ++i) {
    const double excess = activity[i] - problem.rhs[i];
    worst = std::max(worst, problem.row_sense[i] == RowSense::kEqual ? std::abs(excess) : excess);
  }
  return worst;
}

double objective_of(const LpProblem& problem, std::span<const double> x) {
  double v = 0.0;
  for (int j = 0; j < problem.num_vars(); ++j) v += problem.objective[j] * x[j];
  return v;
}

}  // namespace prophet::lp
