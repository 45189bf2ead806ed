#include "prophet/lp/lipschitz.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "prophet/lp/bounded_simplex.h"
#include "prophet/lp/vertex_enumeration.h"

namespace prophet::lp {

double distance_to_optimal_face(const LpProblem& problem, std::span<const double> target) {
  const auto best = solve_bounded_lp(problem);
  if (best.status != LpStatus::kOptimal) throw UsageError("optimal face of a non-optimal LP");
  const int m = problem.num_rows();
  const int n = problem.num_vars();
  // Rows: original rows, -c'x <= -(v - tol), then x_k - delta <= t_k and
  // -x_k - delta <= -t_k for every k. Maximize -delta.
  LpProblem face(m + 1 + 2 * n);
  for (int i = 0; i < m; ++i) {
    face.rhs[i] = problem.rhs[i];
    face.row_sense[i] = problem.row_sense[i];
  }
  const double slack = 1e-9 * std::max(1.0, std::abs(best.objective_value));
  face.rhs[m] = -(best.objective_value - slack);
  std::vector<SparseMatrix::Entry> col;
  for (int k = 0; k < n; ++k) {
    col.assign(problem.matrix.column(k).begin(), problem.matrix.column(k).end());
    if (problem.objective[k] != 0.0) col.push_back({m, -problem.objective[k]});
    col.push_back({m + 1 + 2 * k, 1.0});
    col.push_back({m + 2 + 2 * k, -1.0});
    face.add_variable(0.0, problem.upper_bounds[k], col);
    face.rhs[m + 1 + 2 * k] = target[k];
    face.rhs[m + 2 + 2 * k] = -target[k];
  }
  col.clear();
  for (int k = 0; k < n; ++k) {
    col.push_back({m + 1 + 2 * k, -1.0});
    col.push_back({m + 2 + 2 * k, -1.0});
  }
  face.add_variable(-1.0, kInfinity, col);
  const auto sol = solve_bounded_lp(face);
  if (sol.status != LpStatus::kOptimal) throw std::runtime_error("face distance LP failed");
  return std::max(0.0, -sol.objective_value);
}

LipschitzReport lipschitz_check(const LpTemplate& make, std::span<const double> y1, std::span<const double> y2) {
  if (y1.size() != y2.size()) throw ConfigError("perturbation vectors differ in length");
  const LpProblem p1 = make(y1);
  const LpProblem p2 = make(y2);
  const auto first = optimal_vertices(p1);
  const auto second = optimal_vertices(p2);
  if (first.empty() || second.empty()) throw UsageError("Lipschitz check needs feasible LPs");

  LipschitzReport report;
  for (std::size_t k = 0; k < y1.size(); ++k) report.bound += std::abs(y1[k] - y2[k]);
  for (const auto& x1 : first) {
    double nearest = kInfinity;
    for (const auto& x2 : second) {
      double dist = 0.0;
      for (std::size_t k = 0; k < x1.size(); ++k) dist = std::max(dist, std::abs(x1[k] - x2[k]));
      nearest = std::min(nearest, dist);
    }
    report.vertex_distance = std::max(report.vertex_distance, nearest);
    report.distance = std::max(report.distance, std::min(nearest, distance_to_optimal_face(p2, x1)));
  }
  report.holds = report.distance <= report.bound + kCompareTolerance;
  return report;
}

}  // namespace prophet::lp
