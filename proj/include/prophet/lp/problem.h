#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "prophet/common.h"

namespace prophet::lp {

enum class RowSense { kLessEqual, kEqual };

// Column-major sparse matrix; columns are appended one at a time.
class SparseMatrix {
 public:
  struct Entry {
    int row;
    double value;
  };

  explicit SparseMatrix(int num_rows = 0) : num_rows_(num_rows) {}

  int num_rows() const { return num_rows_; }
  int num_cols() const { return static_cast<int>(col_start_.size()) - 1; }

  void add_column(std::span<const Entry> entries);

  std::span<const Entry> column(int j) const {
    return {entries_.data() + col_start_[j], entries_.data() + col_start_[j + 1]};
  }

  double coefficient(int row, int col) const;

 private:
  int num_rows_;
  std::vector<std::size_t> col_start_{0};
  std::vector<Entry> entries_;
};

// max c'x  s.t.  A x (<= | =) b,  0 <= x <= u.
struct LpProblem {
  std::vector<double> objective;
  SparseMatrix matrix;
  std::vector<double> rhs;
  std::vector<double> upper_bounds;  // entries may be kInfinity
  std::vector<RowSense> row_sense;

  LpProblem() = default;
  explicit LpProblem(int num_rows)
      : matrix(num_rows), rhs(num_rows, 0.0), row_sense(num_rows, RowSense::kLessEqual) {}

  int num_rows() const { return matrix.num_rows(); }
  int num_vars() const { return matrix.num_cols(); }

  // Returns the index of the new variable.
  int add_variable(double cost, double upper, std::span<const SparseMatrix::Entry> entries);
  int add_variable(double cost, double upper, std::initializer_list<SparseMatrix::Entry> entries) {
    return add_variable(cost, upper, std::span<const SparseMatrix::Entry>(entries.begin(), entries.size()));
  }

  // Throws ConfigError on inconsistent dimensions or negative bounds.
  void validate() const;

  // Dense row-major helper for tests and small oracles.
  static LpProblem from_dense(std::span<const double> c, const std::vector<std::vector<double>>& a,
                              std::span<const double> b, std::span<const double> u);
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* to_string(LpStatus status);

enum class VarStatus : unsigned char { kBasic, kAtLower, kAtUpper };

// Statuses of the structural variables followed by one logical per row.
struct Basis {
  std::vector<VarStatus> status;
};

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> x;
  double objective_value = 0.0;
  Basis basis;
  int iterations = 0;
};

// Max violation of Ax <= b (or = b) and 0 <= x <= u.
double max_violation(const LpProblem& problem, std::span<const double> x);

double objective_of(const LpProblem& problem, std::span<const double> x);

}  // namespace prophet::lp
