#pragma once

#include <span>
#include <vector>

#include "prophet/lp/builders.h"
#include "prophet/lp/problem.h"

namespace prophet::policies {

// Fluid LP (P_t) at budgets B and expected demand E, in the form matching
// the instance kind: packing columns, matching with a slack column per
// type, or allocation with a fictitious column per type.
struct FluidSolution {
  lp::BuiltLp lp;
  lp::LpSolution solution;

  // X_sj for bundle s of type j.
  double bundle_value(int type, int bundle) const { return solution.x[lp.columns_of_type[type][bundle]]; }
  // Mass on the reject/slack column of type j (0 for packing).
  double fictitious_value(int type) const;
};

FluidSolution solve_fluid(const AllocationInstance& instance, std::span<const int> budgets,
                          std::span<const double> expected);

}  // namespace prophet::policies
