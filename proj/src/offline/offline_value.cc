#include "prophet/offline/offline_value.h"

#include <stdexcept>
#include <vector>

#include "prophet/lp/bounded_simplex.h"
#include "prophet/lp/builders.h"

namespace prophet::offline {

double offline_lp_value(const AllocationInstance& instance, std::span<const int> counts, std::span<const int> budgets) {
  const std::vector<double> z(counts.begin(), counts.end());
  const std::vector<double> b(budgets.begin(), budgets.end());
  lp::BuiltLp built;
  switch (instance.kind) {
    case InstanceKind::kPacking:
      built = lp::build_packing_lp(instance, b, z);
      break;
    case InstanceKind::kMatching:
      built = lp::build_matching_lp(instance, b, z, false);
      break;
    case InstanceKind::kAllocation:
      built = lp::build_allocation_lp(instance, b, z);
      break;
  }
  const auto sol = lp::solve_bounded_lp(built.problem);
  if (sol.status != lp::LpStatus::kOptimal) {
    throw std::runtime_error(std::string("hindsight LP ended ") + lp::to_string(sol.status));
  }
  return sol.objective_value;
}

}  // namespace prophet::offline
