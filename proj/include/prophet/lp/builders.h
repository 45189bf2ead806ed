#pragma once

#include <span>
#include <vector>

#include "prophet/instance.h"
#include "prophet/lp/problem.h"

namespace prophet::lp {

// Which allocation a column of a built LP represents. `option` is the
// bundle index within the type, or kFictitious for the reject/slack column.
struct ColumnRef {
  static constexpr int kFictitious = -1;
  int type;
  int option;
};

struct BuiltLp {
  LpProblem problem;
  std::vector<ColumnRef> columns;
  // columns_of_type[j] lists the column indices of type j.
  std::vector<std::vector<int>> columns_of_type;
};

// max r'x, Ax <= budgets, 0 <= x <= demand_cap. One column per type.
BuiltLp build_packing_lp(const AllocationInstance& instance, std::span<const double> budgets,
                         std::span<const double> demand_cap);

// Matching LP with one column per edge (i, j), grouped by type. With
// `use_equality_with_slack` each type row reads sum_i x_ij + s_j = demand_j
// with a zero-reward slack column s_j appended after all edge columns;
// otherwise the type rows are sum_i x_ij <= demand_j and there is no slack.
BuiltLp build_matching_lp(const AllocationInstance& instance, std::span<const double> budgets,
                          std::span<const double> demand, bool use_equality_with_slack);

// Allocation LP: columns x_sj for every bundle plus a zero-reward
// fictitious column per type; type rows are equalities sum_s x_sj = demand_j.
// Column order per type is bundles in order, then the fictitious column.
BuiltLp build_allocation_lp(const AllocationInstance& instance, std::span<const double> budgets,
                            std::span<const double> demand);

}  // namespace prophet::lp
