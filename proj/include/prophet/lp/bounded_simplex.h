#pragma once

#include "prophet/lp/problem.h"

namespace prophet::lp {

struct SimplexOptions {
  double tolerance = kLpTolerance;
  // Rebuild the basis inverse from scratch every this many pivots.
  int refactor_interval = 64;
  // 0 selects 100 * (rows + cols) + 10000.
  int max_iterations = 0;
};

// Revised primal simplex with implicit bounds 0 <= x <= u: variables sit
// nonbasic at either bound, so the column bounds never become rows.
//
// Pricing is Dantzig (largest reduced cost, lowest index on ties) and
// switches to Bland's rule once 3 * (rows + cols) consecutive pivots make
// no objective progress. Ratio-test ties go to the lowest variable index.
// Equality rows, or rows whose logical start is infeasible, get an
// artificial and a phase-one pass. The result is an optimal basic solution
// and is a deterministic function of the input.
LpSolution solve_bounded_lp(const LpProblem& problem, const SimplexOptions& options = {});

// Starts from `warm` when it is a valid, primal feasible basis for
// `problem`; otherwise falls back to a cold start.
LpSolution solve_bounded_lp(const LpProblem& problem, const Basis& warm,
                            const SimplexOptions& options = {});

}  // namespace prophet::lp
