#include "prophet/harness/simulate.h"

#include <string>

namespace prophet::harness {

std::vector<double> observed_expectation(const arrivals::ArrivalModel& model, int t, double clock, int type) {
  switch (model.kind()) {
    case arrivals::ArrivalKind::kMultinomial:
      return model.expected_remaining(t);
    case arrivals::ArrivalKind::kPoisson:
      return model.expected_remaining(clock);
    case arrivals::ArrivalKind::kMarkov: {
      auto e = model.expected_remaining(t - 1, type);
      e[type] += 1.0;
      return e;
    }
  }
  return {};
}

SimulationTrace simulate(const AllocationInstance& instance, const arrivals::SamplePath& path,
                         policies::Policy& policy, CounterRng& policy_rng) {
  if (path.num_types() != instance.n) throw ConfigError("sample path type count does not match the instance");
  const int horizon = path.horizon();
  policies::EpisodeContext context;
  context.instance = &instance;
  context.budgets = instance.budgets;
  context.horizon = horizon;
  context.horizon_clock = horizon > 0 ? path.clock_at(horizon) : 0.0;
  context.expected_total = instance.arrival.expected_total(horizon);
  policy.begin(context);

  SimulationTrace trace;
  trace.initial_budgets = instance.budgets;
  trace.types = path.types();
  trace.periods.reserve(horizon);
  std::vector<int> budgets = instance.budgets;
  policies::Observation obs;
  for (int t = horizon; t >= 1; --t) {
    obs.t = t;
    obs.clock = path.clock_at(t);
    obs.type = path.type_at(t);
    obs.expected = observed_expectation(instance.arrival, t, obs.clock, obs.type);
    const auto decision = policy.decide(budgets, obs, policy_rng);
    PeriodRecord rec;
    rec.t = t;
    rec.clock = obs.clock;
    rec.type = obs.type;
    rec.action = decision.action;
    rec.forced_reject = decision.forced_reject;
    try {
      rec.reward = policies::apply_action(instance, obs.type, decision.action, budgets);
    } catch (const UsageError& e) {
      throw std::logic_error("policy " + policy.name() + " chose an invalid action: " + e.what());
    }
    rec.budgets_after = budgets;
    trace.total_reward += rec.reward;
    trace.forced_rejects += decision.forced_reject ? 1 : 0;
    trace.periods.push_back(std::move(rec));
  }
  return trace;
}

}  // namespace prophet::harness
