#pragma once

#include <functional>
#include <span>

#include "prophet/lp/problem.h"

namespace prophet::lp {

// Builds the LP P(y) for a right-hand-side perturbation vector y.
using LpTemplate = std::function<LpProblem(std::span<const double>)>;

struct LipschitzReport {
  // max over optimal vertices x1 of P(y1) of the min over optimal vertices
  // x2 of P(y2) of ||x1 - x2||_inf.
  double vertex_distance = 0.0;
  // Same, with x2 ranging over the whole optimal face of P(y2).
  double distance = 0.0;
  double bound = 0.0;  // ||y1 - y2||_1
  bool holds = false;  // distance <= bound + 1e-7
};

// Empirical check that every solution of P(y1) has a solution of P(y2)
// within ||y1 - y2||_1 in the sup norm. Optimal vertices are enumerated,
// so P must be small; throws InstanceTooLarge otherwise.
LipschitzReport lipschitz_check(const LpTemplate& make, std::span<const double> y1, std::span<const double> y2);

// min ||x - target||_inf over the optimal face of `problem`.
double distance_to_optimal_face(const LpProblem& problem, std::span<const double> target);

}  // namespace prophet::lp
