#include "prophet/policies/fluid.h"

#include "prophet/lp/bounded_simplex.h"

namespace prophet::policies {

double FluidSolution::fictitious_value(int type) const {
  const auto& cols = lp.columns_of_type[type];
  if (cols.empty() || lp.columns[cols.back()].option != lp::ColumnRef::kFictitious) return 0.0;
  return solution.x[cols.back()];
}

FluidSolution solve_fluid(const AllocationInstance& instance, std::span<const int> budgets,
                          std::span<const double> expected) {
  const std::vector<double> b(budgets.begin(), budgets.end());
  FluidSolution out;
  switch (instance.kind) {
    case InstanceKind::kPacking:
      out.lp = lp::build_packing_lp(instance, b, expected);
      break;
    case InstanceKind::kMatching:
      out.lp = lp::build_matching_lp(instance, b, expected, true);
      break;
    case InstanceKind::kAllocation:
      out.lp = lp::build_allocation_lp(instance, b, expected);
      break;
  }
  out.solution = lp::solve_bounded_lp(out.lp.problem);
  if (out.solution.status != lp::LpStatus::kOptimal) {
    throw std::runtime_error(std::string("fluid LP ended ") + lp::to_string(out.solution.status));
  }
  return out;
}

}  // namespace prophet::policies
