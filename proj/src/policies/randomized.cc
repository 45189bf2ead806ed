#include "prophet/policies/randomized.h"

#include <algorithm>
#include <cmath>

namespace prophet::policies {
namespace {

std::vector<std::vector<double>> all_ratios(const AllocationInstance& instance, std::span<const int> budgets,
                                            std::span<const double> expected) {
  const auto fluid = solve_fluid(instance, budgets, expected);
  std::vector<std::vector<double>> out(instance.n);
  for (int j = 0; j < instance.n; ++j) out[j] = serving_ratios(instance, fluid, j, expected[j]);
  return out;
}

}  // namespace

std::vector<double> serving_ratios(const AllocationInstance& instance, const FluidSolution& fluid, int type,
                                   double expected) {
  const int count = static_cast<int>(instance.bundles[type].size());
  std::vector<double> ratios(count, 0.0);
  if (expected <= 0.0) return ratios;
  double total = 0.0;
  for (int s = 0; s < count; ++s) {
    ratios[s] = std::clamp(fluid.bundle_value(type, s) / expected, 0.0, 1.0);
    total += ratios[s];
  }
  if (total > 1.0) {
    for (double& r : ratios) r /= total;
  }
  return ratios;
}

Decision randomized_decision(const AllocationInstance& instance, std::span<const int> budgets, int type,
                             std::span<const double> ratios, CounterRng& rng) {
  const double u = rng.uniform();
  double acc = 0.0;
  for (std::size_t s = 0; s < ratios.size(); ++s) {
    acc += ratios[s];
    if (u < acc) {
      const Bundle& b = instance.bundles[type][s];
      if (!bundle_fits(b, budgets)) return {Action::reject(), true};
      return {action_for_bundle(instance, type, static_cast<int>(s)), false};
    }
  }
  return {Action::reject(), false};
}

void StaticRandomizedPolicy::begin(const EpisodeContext& context) {
  Policy::begin(context);
  ratios_ = all_ratios(instance(), context.budgets, context.expected_total);
}

Decision StaticRandomizedPolicy::decide(std::span<const int> budgets, const Observation& obs, CounterRng& rng) {
  return randomized_decision(instance(), budgets, obs.type, ratios_[obs.type], rng);
}

Decision ResolveRandomizePolicy::decide(std::span<const int> budgets, const Observation& obs, CounterRng& rng) {
  const double e = obs.expected[obs.type];
  if (e <= 0.0 || instance().bundles[obs.type].empty()) return {Action::reject(), false};
  const auto fluid = solve_fluid(instance(), budgets, obs.expected);
  const auto ratios = serving_ratios(instance(), fluid, obs.type, e);
  return randomized_decision(instance(), budgets, obs.type, ratios, rng);
}

std::vector<int> irt_schedule(int horizon) {
  std::vector<int> out;
  if (horizon < 1) return out;
  out.push_back(horizon);
  if (horizon < 3) return out;
  const double log_t = std::log(static_cast<double>(horizon));
  const int last = static_cast<int>(std::floor(std::log(log_t) / std::log(1.2)));
  for (int u = 1; u <= last; ++u) {
    const int time = static_cast<int>(std::floor(std::exp(log_t * std::pow(5.0 / 6.0, u))));
    if (time < out.back() && time >= 1) out.push_back(time);
  }
  return out;
}

void InfrequentResolvePolicy::begin(const EpisodeContext& context) {
  Policy::begin(context);
  schedule_ = irt_schedule(context.horizon);
  next_ = 0;
  resolves_ = 0;
  ratios_.assign(instance().n, std::vector<double>{});
  for (int j = 0; j < instance().n; ++j) ratios_[j].assign(instance().bundles[j].size(), 0.0);
}

Decision InfrequentResolvePolicy::decide(std::span<const int> budgets, const Observation& obs, CounterRng& rng) {
  if (next_ < schedule_.size() && obs.t <= schedule_[next_]) {
    ratios_ = all_ratios(instance(), budgets, obs.expected);
    ++resolves_;
    while (next_ < schedule_.size() && obs.t <= schedule_[next_]) ++next_;
  }
  const auto& ratios = ratios_[obs.type];
  bool near_integral = true;
  for (double r : ratios) near_integral = near_integral && (r <= band_ || r >= 1.0 - band_);
  if (!near_integral) return randomized_decision(instance(), budgets, obs.type, ratios, rng);
  for (std::size_t s = 0; s < ratios.size(); ++s) {
    if (ratios[s] >= 0.5) {
      if (!bundle_fits(instance().bundles[obs.type][s], budgets)) return {Action::reject(), true};
      return {action_for_bundle(instance(), obs.type, static_cast<int>(s)), false};
    }
  }
  return {Action::reject(), false};
}

}  // namespace prophet::policies
