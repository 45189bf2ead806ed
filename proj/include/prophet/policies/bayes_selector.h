#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "prophet/policies/policy.h"

namespace prophet::policies {

// Per-action estimates for the feasible actions of one decision, reject
// first. `values` are disagreement probabilities or expected compensations.
struct ActionEstimates {
  std::vector<Action> actions;
  std::vector<double> values;
  double accuracy = 0.0;  // half-width of the estimation error, if known
};

// Argmin over the estimates; on ties (within 1e-9) the earliest action,
// which is reject when reject is tied.
Action select_min(const ActionEstimates& estimates);

// Generic selector: argmin of the disagreement estimates q(a).
using EstimateOracle =
    std::function<ActionEstimates(std::span<const int> budgets, const Observation& obs, CounterRng& rng)>;

Action generic_bayes_selector(const EstimateOracle& q_oracle, std::span<const int> budgets, const Observation& obs,
                              CounterRng& rng);

// Marginal-compensation selector: argmin of expected compensations l(a).
Action marginal_compensation_selector(const EstimateOracle& l_oracle, std::span<const int> budgets,
                                      const Observation& obs, CounterRng& rng);

// Threshold over-estimates for the multi-secretary problem (single
// resource, unit consumption): accepting scores exp(-p_j^2 t / 2) when
// X_j / (t p_j) >= 1/2 and 1 otherwise; rejecting the reverse.
ActionEstimates multisecretary_estimates(const AllocationInstance& instance, std::span<const int> budgets,
                                         const Observation& obs);

struct MonteCarloEstimates {
  ActionEstimates disagreement;  // q(a): frequency of losing hindsight value
  ActionEstimates compensation;  // l(a): mean hindsight value lost
};

// Samples `samples` continuations of the arrivals after the current one
// (conditioned on the current type for Markov models),
// and for every feasible action compares the ex-post LP value at the
// current state with the action's reward plus the ex-post value after it.
// The disagreement accuracy is the binomial standard error of the worst
// action's frequency.
MonteCarloEstimates monte_carlo_estimates(const AllocationInstance& instance, std::span<const int> budgets,
                                          const Observation& obs, int samples, CounterRng& rng);

// Bayes selector driven by Monte-Carlo estimates; `use_compensation`
// switches from disagreement frequencies to expected compensations.
class MonteCarloBayesPolicy final : public Policy {
 public:
  MonteCarloBayesPolicy(int samples, bool use_compensation)
      : samples_(samples), use_compensation_(use_compensation) {}

  std::string name() const override { return use_compensation_ ? "bayes-mcl" : "bayes-mc"; }
  std::unique_ptr<Policy> clone() const override { return std::make_unique<MonteCarloBayesPolicy>(*this); }
  Decision decide(std::span<const int> budgets, const Observation& obs, CounterRng& rng) override;

 private:
  int samples_;
  bool use_compensation_;
};

}  // namespace prophet::policies
