#pragma once

#include <cstdint>
#include <vector>

#include "prophet/lp/problem.h"

namespace prophet::lp {

struct EnumerationResult {
  LpStatus status = LpStatus::kInfeasible;
  double objective_value = 0.0;
  // Every distinct basic feasible point, in discovery order.
  std::vector<std::vector<double>> vertices;
};

// Brute-force oracle: picks every set of num_vars active constraints among
// rows, lower bounds and finite upper bounds (equality rows always active),
// solves the square system and keeps the feasible points. Throws
// InstanceTooLarge when the number of candidate sets exceeds `max_candidates`.
// The feasible region must be bounded; unboundedness is not detected.
EnumerationResult enumerate_vertices(const LpProblem& problem, std::int64_t max_candidates = 2'000'000,
                                     double tolerance = 1e-9);

// Vertices whose objective is within `tolerance` of the optimum.
std::vector<std::vector<double>> optimal_vertices(const LpProblem& problem, double tolerance = 1e-7);

}  // namespace prophet::lp
