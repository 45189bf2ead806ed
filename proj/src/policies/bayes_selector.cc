#include "prophet/policies/bayes_selector.h"

#include <algorithm>
#include <cmath>

#include "prophet/arrivals/model.h"
#include "prophet/offline/offline_value.h"
#include "prophet/policies/fluid.h"
#include "prophet/policies/fluid_bayes.h"

namespace prophet::policies {

Action select_min(const ActionEstimates& estimates) {
  if (estimates.actions.empty() || estimates.actions.size() != estimates.values.size()) {
    throw UsageError("selector needs one estimate per action");
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < estimates.values.size(); ++k) {
    if (estimates.values[k] < estimates.values[best] - kTieTolerance) best = k;
  }
  return estimates.actions[best];
}

Action generic_bayes_selector(const EstimateOracle& q_oracle, std::span<const int> budgets, const Observation& obs,
                              CounterRng& rng) {
  return select_min(q_oracle(budgets, obs, rng));
}

Action marginal_compensation_selector(const EstimateOracle& l_oracle, std::span<const int> budgets,
                                      const Observation& obs, CounterRng& rng) {
  return select_min(l_oracle(budgets, obs, rng));
}

ActionEstimates multisecretary_estimates(const AllocationInstance& instance, std::span<const int> budgets,
                                         const Observation& obs) {
  if (instance.kind != InstanceKind::kPacking || instance.d != 1) {
    throw ConfigError("multi-secretary estimates need a single-resource packing instance");
  }
  const int j = obs.type;
  const double e = obs.expected[j];
  ActionEstimates out;
  out.actions = feasible_actions(instance, j, budgets);
  const auto fluid = solve_fluid(instance, budgets, obs.expected);
  const bool high = e > 0.0 && fluid.bundle_value(j, 0) >= e / 2.0 - kTieTolerance * std::max(1.0, e);
  const double pj = e / obs.t;
  const double small = std::exp(-pj * pj * obs.t / 2.0);
  for (const auto& a : out.actions) out.values.push_back(a.is_reject() == high ? 1.0 : small);
  return out;
}

MonteCarloEstimates monte_carlo_estimates(const AllocationInstance& instance, std::span<const int> budgets,
                                          const Observation& obs, int samples, CounterRng& rng) {
  if (samples < 1) throw ConfigError("Monte-Carlo oracle needs at least one sample");
  const int j = obs.type;
  MonteCarloEstimates out;
  out.disagreement.actions = feasible_actions(instance, j, budgets);
  out.compensation.actions = out.disagreement.actions;
  const std::size_t count = out.disagreement.actions.size();
  std::vector<double> losses(count, 0.0), misses(count, 0.0);

  const auto& model = instance.arrival;
  const double remaining = model.kind() == arrivals::ArrivalKind::kPoisson ? obs.clock : obs.t - 1;
  std::vector<int> after(budgets.begin(), budgets.end());
  for (int m = 0; m < samples; ++m) {
    auto future = model.sample_future_counts(remaining, j, rng);
    ++future[j];
    const double best = offline::offline_lp_value(instance, future, budgets);
    --future[j];
    for (std::size_t k = 0; k < count; ++k) {
      std::copy(budgets.begin(), budgets.end(), after.begin());
      const double reward = apply_action(instance, j, out.disagreement.actions[k], after);
      const double value = reward + offline::offline_lp_value(instance, future, after);
      const double loss = best - value;
      if (loss > kCompareTolerance * std::max(1.0, std::abs(best))) {
        misses[k] += 1.0;
        losses[k] += loss;
      }
    }
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const double q = misses[k] / samples;
    out.disagreement.values.push_back(q);
    out.compensation.values.push_back(losses[k] / samples);
    worst = std::max(worst, std::sqrt(q * (1.0 - q) / samples));
  }
  out.disagreement.accuracy = worst;
  return out;
}

Decision MonteCarloBayesPolicy::decide(std::span<const int> budgets, const Observation& obs, CounterRng& rng) {
  const auto estimates = monte_carlo_estimates(instance(), budgets, obs, samples_, rng);
  return {select_min(use_compensation_ ? estimates.compensation : estimates.disagreement), false};
}

}  // namespace prophet::policies
