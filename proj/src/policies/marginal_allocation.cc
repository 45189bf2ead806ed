#include "prophet/policies/marginal_allocation.h"

#include <algorithm>

#include "prophet/policies/fluid.h"
#include "prophet/policies/fluid_bayes.h"

namespace prophet::policies {

BidPriceTables::BidPriceTables(const AllocationInstance& instance, const std::vector<std::vector<double>>& x,
                               std::span<const int> budgets, int horizon)
    : horizon_(horizon), budgets_(budgets.begin(), budgets.end()), table_(instance.d) {
  for (int i = 0; i < instance.d; ++i) {
    const int width = budgets_[i] + 1;
    auto& f = table_[i];
    f.assign(static_cast<std::size_t>(std::max(horizon, 1)) * width, 0.0);
    for (int t = 1; t < horizon; ++t) {
      const double* prev = &f[static_cast<std::size_t>(t - 1) * width];
      double* next = &f[static_cast<std::size_t>(t) * width];
      for (int b = 1; b < width; ++b) {
        double gain = 0.0;
        for (int j = 0; j < instance.n; ++j) {
          if (x[i][j] == 0.0) continue;
          gain += x[i][j] * std::max(0.0, instance.matching_reward(i, j) - prev[b] + prev[b - 1]);
        }
        next[b] = prev[b] + gain / horizon;
      }
    }
  }
}

double BidPriceTables::value(int resource, int t, int b) const {
  if (b <= 0) return 0.0;
  if (t < 1 || t > horizon_ || b > budgets_[resource]) throw UsageError("bid-price lookup outside the table");
  return table_[resource][static_cast<std::size_t>(t - 1) * (budgets_[resource] + 1) + b];
}

MarginalAllocationPolicy::MarginalAllocationPolicy(const AllocationInstance& instance) {
  if (instance.kind != InstanceKind::kMatching) throw ConfigError("marginal allocation needs a matching instance");
  const auto expected = instance.arrival.expected_total(instance.horizon);
  const auto fluid = solve_fluid(instance, instance.budgets, expected);
  std::vector<std::vector<double>> x(instance.d, std::vector<double>(instance.n, 0.0));
  for (int j = 0; j < instance.n; ++j) {
    for (int s = 0; s < static_cast<int>(instance.bundles[j].size()); ++s) {
      x[instance.matched_resource(j, s)][j] = fluid.bundle_value(j, s);
    }
  }
  tables_ = BidPriceTables(instance, x, instance.budgets, instance.horizon);
}

Decision MarginalAllocationPolicy::decide(std::span<const int> budgets, const Observation& obs, CounterRng&) {
  const auto& inst = instance();
  const int j = obs.type;
  int best = -1;
  double best_margin = 0.0;
  for (int s = 0; s < static_cast<int>(inst.bundles[j].size()); ++s) {
    const int i = inst.matched_resource(j, s);
    if (budgets[i] <= 0) continue;
    const double margin = inst.bundles[j][s].reward - tables_.bid_price(i, obs.t, budgets[i]);
    if (best < 0 ? margin >= 0.0 : margin > best_margin + kTieTolerance) {
      best = i;
      best_margin = margin;
    }
  }
  if (best < 0) return {Action::reject(), false};
  return {Action::match(best), false};
}

}  // namespace prophet::policies
