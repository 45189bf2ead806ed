#include "prophet/lp/bounded_simplex.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace prophet::lp {
namespace {

constexpr double kPivotTolerance = 1e-9;
constexpr double kProgressTolerance = 1e-12;

// Variables are laid out as [structurals | logicals | artificials]. Logical
// r has column +e_r; artificial k has column sign_k * e_{row_k}.
class BoundedSimplex {
 public:
  BoundedSimplex(const LpProblem& problem, const SimplexOptions& options)
      : p_(problem),
        opt_(options),
        m_(problem.num_rows()),
        n_(problem.num_vars()) {
    max_iterations_ = opt_.max_iterations > 0 ? opt_.max_iterations : 100 * (m_ + n_) + 10000;
  }

  LpSolution solve(const Basis* warm) {
    if (warm == nullptr || !try_warm_start(*warm)) cold_start();
    LpSolution out;
    if (num_artificial() > 0 && !artificial_basis_is_clean()) {
      set_phase_one_costs();
      const auto status = run();
      if (status == LpStatus::kUnbounded) throw std::logic_error("phase one cannot be unbounded");
      double infeasibility = 0.0;
      for (int k = 0; k < num_artificial(); ++k) infeasibility += x_[n_ + m_ + k];
      double scale = 1.0;
      for (double b : p_.rhs) scale = std::max(scale, std::abs(b));
      if (infeasibility > opt_.tolerance * scale) {
        out.status = LpStatus::kInfeasible;
        out.iterations = iterations_;
        return out;
      }
    }
    // Artificials are pinned at zero for the rest of the solve.
    for (int k = 0; k < num_artificial(); ++k) {
      upper_[n_ + m_ + k] = 0.0;
      if (status_[n_ + m_ + k] != VarStatus::kBasic) {
        status_[n_ + m_ + k] = VarStatus::kAtLower;
        x_[n_ + m_ + k] = 0.0;
      }
    }
    set_phase_two_costs();
    out.status = run();
    out.iterations = iterations_;
    if (out.status != LpStatus::kOptimal) return out;

    refactor();
    out.x.assign(x_.begin(), x_.begin() + n_);
    for (int j = 0; j < n_; ++j) {
      double& v = out.x[j];
      if (std::abs(v) <= 1e-11) v = 0.0;
      if (std::isfinite(p_.upper_bounds[j]) && std::abs(v - p_.upper_bounds[j]) <= 1e-11) {
        v = p_.upper_bounds[j];
      }
    }
    out.objective_value = objective_of(p_, out.x);
    out.basis.status.assign(status_.begin(), status_.begin() + n_ + m_);
    return out;
  }

 private:
  int num_vars_total() const { return n_ + m_ + static_cast<int>(art_row_.size()); }
  int num_artificial() const { return static_cast<int>(art_row_.size()); }

  template <typename Fn>
  void for_column(int var, Fn&& fn) const {
    if (var < n_) {
      for (const auto& e : p_.matrix.column(var)) fn(e.row, e.value);
    } else if (var < n_ + m_) {
      fn(var - n_, 1.0);
    } else {
      const int k = var - n_ - m_;
      fn(art_row_[k], art_sign_[k]);
    }
  }

  void init_bounds() {
    upper_.assign(n_ + m_, 0.0);
    for (int j = 0; j < n_; ++j) upper_[j] = p_.upper_bounds[j];
    for (int r = 0; r < m_; ++r) {
      upper_[n_ + r] = p_.row_sense[r] == RowSense::kEqual ? 0.0 : kInfinity;
    }
    x_.assign(n_ + m_, 0.0);
    status_.assign(n_ + m_, VarStatus::kAtLower);
    art_row_.clear();
    art_sign_.clear();
    head_.assign(m_, -1);
  }

  void cold_start() {
    init_bounds();
    std::vector<double> residual(p_.rhs);
    std::vector<char> used(n_, 0);
    // Unit structural columns (e.g. explicit slack columns) can start basic.
    std::vector<int> unit_for_row(m_, -1);
    for (int j = 0; j < n_; ++j) {
      const auto col = p_.matrix.column(j);
      if (col.size() == 1 && unit_for_row[col[0].row] < 0) unit_for_row[col[0].row] = j;
    }
    for (int r = 0; r < m_; ++r) {
      if (p_.row_sense[r] == RowSense::kLessEqual && residual[r] >= 0.0) {
        head_[r] = n_ + r;
        status_[n_ + r] = VarStatus::kBasic;
        x_[n_ + r] = residual[r];
        continue;
      }
      const int j = unit_for_row[r];
      if (j >= 0 && !used[j]) {
        const double value = residual[r] / p_.matrix.column(j)[0].value;
        if (value >= 0.0 && value <= p_.upper_bounds[j]) {
          used[j] = 1;
          head_[r] = j;
          status_[j] = VarStatus::kBasic;
          x_[j] = value;
          continue;
        }
      }
      art_row_.push_back(r);
      art_sign_.push_back(residual[r] >= 0.0 ? 1.0 : -1.0);
      const int var = n_ + m_ + num_artificial() - 1;
      upper_.push_back(kInfinity);
      x_.push_back(std::abs(residual[r]));
      status_.push_back(VarStatus::kBasic);
      head_[r] = var;
    }
    refactor();
  }

  bool try_warm_start(const Basis& warm) {
    if (static_cast<int>(warm.status.size()) != n_ + m_) return false;
    init_bounds();
    int basics = 0;
    for (int v = 0; v < n_ + m_; ++v) {
      VarStatus s = warm.status[v];
      if (s == VarStatus::kBasic) {
        if (basics == m_) return false;
        head_[basics++] = v;
      } else if (s == VarStatus::kAtUpper && !std::isfinite(upper_[v])) {
        s = VarStatus::kAtLower;
      }
      status_[v] = s;
      x_[v] = s == VarStatus::kAtUpper ? upper_[v] : 0.0;
    }
    if (basics != m_) return false;
    if (!refactor_or_fail()) return false;
    for (int i = 0; i < m_; ++i) {
      const int v = head_[i];
      if (x_[v] < -opt_.tolerance || x_[v] > upper_[v] + opt_.tolerance) return false;
    }
    return true;
  }

  bool artificial_basis_is_clean() const {
    for (int k = 0; k < num_artificial(); ++k) {
      if (x_[n_ + m_ + k] > opt_.tolerance) return false;
    }
    return true;
  }

  void set_phase_one_costs() {
    cost_.assign(num_vars_total(), 0.0);
    for (int k = 0; k < num_artificial(); ++k) cost_[n_ + m_ + k] = -1.0;
  }

  void set_phase_two_costs() {
    cost_.assign(num_vars_total(), 0.0);
    for (int j = 0; j < n_; ++j) cost_[j] = p_.objective[j];
  }

  void refactor() {
    if (!refactor_or_fail()) throw std::runtime_error("simplex basis became singular");
  }

  // Gauss-Jordan inverse of the basis matrix with partial pivoting, then
  // recomputes basic values from the nonbasic ones.
  bool refactor_or_fail() {
    std::vector<double> work(static_cast<std::size_t>(m_) * m_, 0.0);
    binv_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
    for (int i = 0; i < m_; ++i) {
      for_column(head_[i], [&](int row, double v) { work[static_cast<std::size_t>(row) * m_ + i] = v; });
      binv_[static_cast<std::size_t>(i) * m_ + i] = 1.0;
    }
    std::vector<int> col_of_row(m_);
    for (int col = 0; col < m_; ++col) {
      int pivot = -1;
      double best = 1e-11;
      for (int r = col; r < m_; ++r) {
        const double v = std::abs(work[static_cast<std::size_t>(r) * m_ + col]);
        if (v > best) {
          best = v;
          pivot = r;
        }
      }
      if (pivot < 0) return false;
      if (pivot != col) {
        for (int k = 0; k < m_; ++k) {
          std::swap(work[static_cast<std::size_t>(pivot) * m_ + k], work[static_cast<std::size_t>(col) * m_ + k]);
          std::swap(binv_[static_cast<std::size_t>(pivot) * m_ + k], binv_[static_cast<std::size_t>(col) * m_ + k]);
        }
      }
      const double inv = 1.0 / work[static_cast<std::size_t>(col) * m_ + col];
      for (int k = 0; k < m_; ++k) {
        work[static_cast<std::size_t>(col) * m_ + k] *= inv;
        binv_[static_cast<std::size_t>(col) * m_ + k] *= inv;
      }
      for (int r = 0; r < m_; ++r) {
        if (r == col) continue;
        const double f = work[static_cast<std::size_t>(r) * m_ + col];
        if (f == 0.0) continue;
        for (int k = 0; k < m_; ++k) {
          work[static_cast<std::size_t>(r) * m_ + k] -= f * work[static_cast<std::size_t>(col) * m_ + k];
          binv_[static_cast<std::size_t>(r) * m_ + k] -= f * binv_[static_cast<std::size_t>(col) * m_ + k];
        }
      }
    }
    // work is now the identity: row i of binv_ belongs to basis position i.
    std::vector<double> rhs(p_.rhs);
    for (int v = 0; v < num_vars_total(); ++v) {
      if (status_[v] == VarStatus::kBasic || x_[v] == 0.0) continue;
      const double xv = x_[v];
      for_column(v, [&](int row, double a) { rhs[row] -= a * xv; });
    }
    for (int i = 0; i < m_; ++i) {
      double s = 0.0;
      for (int k = 0; k < m_; ++k) s += binv_[static_cast<std::size_t>(i) * m_ + k] * rhs[k];
      x_[head_[i]] = s;
    }
    pivots_since_refactor_ = 0;
    return true;
  }

  LpStatus run() {
    bool bland = false;
    int stalled = 0;
    const int stall_limit = 3 * (m_ + n_);
    std::vector<double> y(m_), alpha(m_);
    while (true) {
      if (++iterations_ > max_iterations_) throw std::runtime_error("simplex iteration limit exceeded");
      if (pivots_since_refactor_ >= opt_.refactor_interval) refactor();

      for (int r = 0; r < m_; ++r) {
        double s = 0.0;
        for (int i = 0; i < m_; ++i) s += cost_[head_[i]] * binv_[static_cast<std::size_t>(i) * m_ + r];
        y[r] = s;
      }

      int entering = -1;
      double entering_dj = 0.0;
      double best_score = 0.0;
      for (int v = 0; v < num_vars_total(); ++v) {
        const VarStatus s = status_[v];
        if (s == VarStatus::kBasic || upper_[v] == 0.0) continue;
        double dj = cost_[v];
        for_column(v, [&](int row, double a) { dj -= y[row] * a; });
        const bool improving = (s == VarStatus::kAtLower && dj > opt_.tolerance) ||
                               (s == VarStatus::kAtUpper && dj < -opt_.tolerance);
        if (!improving) continue;
        if (bland) {
          entering = v;
          entering_dj = dj;
          break;
        }
        if (std::abs(dj) > best_score) {
          best_score = std::abs(dj);
          entering = v;
          entering_dj = dj;
        }
      }
      if (entering < 0) return LpStatus::kOptimal;

      const double sigma = entering_dj > 0.0 ? 1.0 : -1.0;
      std::fill(alpha.begin(), alpha.end(), 0.0);
      for_column(entering, [&](int row, double a) {
        for (int i = 0; i < m_; ++i) alpha[i] += binv_[static_cast<std::size_t>(i) * m_ + row] * a;
      });

      double theta = kInfinity;
      int leave_pos = -1;  // -1 with finite theta means a bound flip
      int leave_var = -1;
      bool leave_to_upper = false;
      if (std::isfinite(upper_[entering])) {
        theta = upper_[entering];
        leave_var = entering;
      }
      for (int i = 0; i < m_; ++i) {
        const double rate = -sigma * alpha[i];
        const int v = head_[i];
        double limit;
        bool to_upper;
        if (rate < -kPivotTolerance) {
          limit = std::max(0.0, x_[v]) / -rate;
          to_upper = false;
        } else if (rate > kPivotTolerance && std::isfinite(upper_[v])) {
          limit = std::max(0.0, upper_[v] - x_[v]) / rate;
          to_upper = true;
        } else {
          continue;
        }
        if (limit < theta - kProgressTolerance ||
            (limit <= theta + kProgressTolerance && v < leave_var)) {
          theta = limit;
          leave_pos = i;
          leave_var = v;
          leave_to_upper = to_upper;
        }
      }
      if (!std::isfinite(theta)) return LpStatus::kUnbounded;

      if (theta * std::abs(entering_dj) > kProgressTolerance) {
        stalled = 0;
      } else if (++stalled >= stall_limit) {
        bland = true;
      }

      for (int i = 0; i < m_; ++i) x_[head_[i]] -= sigma * theta * alpha[i];
      x_[entering] += sigma * theta;

      if (leave_pos < 0) {
        status_[entering] = status_[entering] == VarStatus::kAtLower ? VarStatus::kAtUpper : VarStatus::kAtLower;
        x_[entering] = status_[entering] == VarStatus::kAtUpper ? upper_[entering] : 0.0;
        continue;
      }

      status_[leave_var] = leave_to_upper ? VarStatus::kAtUpper : VarStatus::kAtLower;
      x_[leave_var] = leave_to_upper ? upper_[leave_var] : 0.0;
      status_[entering] = VarStatus::kBasic;
      head_[leave_pos] = entering;

      const double pivot = alpha[leave_pos];
      double* prow = &binv_[static_cast<std::size_t>(leave_pos) * m_];
      for (int k = 0; k < m_; ++k) prow[k] /= pivot;
      for (int i = 0; i < m_; ++i) {
        if (i == leave_pos || alpha[i] == 0.0) continue;
        double* row = &binv_[static_cast<std::size_t>(i) * m_];
        const double f = alpha[i];
        for (int k = 0; k < m_; ++k) row[k] -= f * prow[k];
      }
      ++pivots_since_refactor_;
    }
  }

  const LpProblem& p_;
  const SimplexOptions& opt_;
  const int m_;
  const int n_;
  int max_iterations_ = 0;
  int iterations_ = 0;
  int pivots_since_refactor_ = 0;

  std::vector<double> upper_;
  std::vector<double> x_;
  std::vector<double> cost_;
  std::vector<VarStatus> status_;
  std::vector<int> head_;
  std::vector<double> binv_;
  std::vector<int> art_row_;
  std::vector<double> art_sign_;
};

}  // namespace

LpSolution solve_bounded_lp(const LpProblem& problem, const SimplexOptions& options) {
  problem.validate();
  return BoundedSimplex(problem, options).solve(nullptr);
}

LpSolution solve_bounded_lp(const LpProblem& problem, const Basis& warm, const SimplexOptions& options) {
  problem.validate();
  return BoundedSimplex(problem, options).solve(&warm);
}

}  // namespace prophet::lp
