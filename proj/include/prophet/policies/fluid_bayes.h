#pragma once

#include <span>

#include "prophet/policies/fluid.h"
#include "prophet/policies/policy.h"

namespace prophet::policies {

// Values within this of each other count as tied.
inline constexpr double kTieTolerance = 1e-9;

// Packing rule: accept iff X_j >= E_j / 2 and the column fits the budget.
// A wanted acceptance that does not fit is a forced reject; E_j = 0 rejects.
Decision fluid_bayes_packing(const AllocationInstance& instance, std::span<const int> budgets, int type,
                             std::span<const double> expected);

// Matching rule: serve with the resource holding the largest X_ij, the
// slack column counting as reject and winning ties, then lowest index.
Decision fluid_bayes_matching(const AllocationInstance& instance, std::span<const int> budgets, int type,
                              std::span<const double> expected);

// Allocation rule: argmax over the fictitious column then the bundles;
// reject when the chosen bundle does not fit.
Decision fluid_bayes_allocation(const AllocationInstance& instance, std::span<const int> budgets, int type,
                                std::span<const double> expected);

// Re-solves the fluid LP every period and applies the rule for the
// instance kind.
class FluidBayesPolicy final : public Policy {
 public:
  std::string name() const override { return "bayes"; }
  std::unique_ptr<Policy> clone() const override { return std::make_unique<FluidBayesPolicy>(*this); }
  Decision decide(std::span<const int> budgets, const Observation& obs, CounterRng& rng) override;
};

}  // namespace prophet::policies
