#include "prophet/policies/fluid_bayes.h"

#include <algorithm>

namespace prophet::policies {
namespace {

// Index of the winning bundle, or -1 for the fictitious column.
int argmax_bundle(const FluidSolution& fluid, int type, int bundle_count) {
  int best = -1;
  double best_value = fluid.fictitious_value(type);
  for (int s = 0; s < bundle_count; ++s) {
    const double v = fluid.bundle_value(type, s);
    if (v > best_value + kTieTolerance * std::max(1.0, std::abs(best_value))) {
      best = s;
      best_value = v;
    }
  }
  return best;
}

Decision argmax_decision(const AllocationInstance& instance, std::span<const int> budgets, int type,
                         std::span<const double> expected) {
  if (instance.bundles[type].empty() || expected[type] <= 0.0) return {Action::reject(), false};
  const auto fluid = solve_fluid(instance, budgets, expected);
  const int s = argmax_bundle(fluid, type, static_cast<int>(instance.bundles[type].size()));
  if (s < 0) return {Action::reject(), false};
  if (!bundle_fits(instance.bundles[type][s], budgets)) return {Action::reject(), true};
  return {action_for_bundle(instance, type, s), false};
}

}  // namespace

Decision fluid_bayes_packing(const AllocationInstance& instance, std::span<const int> budgets, int type,
                             std::span<const double> expected) {
  if (instance.kind != InstanceKind::kPacking) throw ConfigError("packing rule needs a packing instance");
  const double e = expected[type];
  if (e <= 0.0) return {Action::reject(), false};
  const auto fluid = solve_fluid(instance, budgets, expected);
  const bool wanted = fluid.bundle_value(type, 0) >= e / 2.0 - kTieTolerance * std::max(1.0, e);
  if (!wanted) return {Action::reject(), false};
  if (!bundle_fits(instance.bundles[type][0], budgets)) return {Action::reject(), true};
  return {Action::accept(), false};
}

Decision fluid_bayes_matching(const AllocationInstance& instance, std::span<const int> budgets, int type,
                              std::span<const double> expected) {
  if (instance.kind != InstanceKind::kMatching) throw ConfigError("matching rule needs a matching instance");
  return argmax_decision(instance, budgets, type, expected);
}

Decision fluid_bayes_allocation(const AllocationInstance& instance, std::span<const int> budgets, int type,
                                std::span<const double> expected) {
  if (instance.kind != InstanceKind::kAllocation) throw ConfigError("allocation rule needs an allocation instance");
  return argmax_decision(instance, budgets, type, expected);
}

Decision FluidBayesPolicy::decide(std::span<const int> budgets, const Observation& obs, CounterRng&) {
  switch (instance().kind) {
    case InstanceKind::kPacking:
      return fluid_bayes_packing(instance(), budgets, obs.type, obs.expected);
    case InstanceKind::kMatching:
      return fluid_bayes_matching(instance(), budgets, obs.type, obs.expected);
    case InstanceKind::kAllocation:
      return fluid_bayes_allocation(instance(), budgets, obs.type, obs.expected);
  }
  return {Action::reject(), false};
}

}  // namespace prophet::policies
