#include "prophet/offline/hindsight_dp.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace prophet::offline {

int HindsightModel::num_states() const {
  std::int64_t n = 1;
  for (int c : caps()) {
    n *= c + 1;
    if (n > kMaxDpStates) throw InstanceTooLarge("budget lattice exceeds the DP state guard; use offline_lp_value");
  }
  return static_cast<int>(n);
}

int HindsightModel::encode(std::span<const int> budgets) const {
  const auto& c = caps();
  if (budgets.size() != c.size()) throw UsageError("budget vector has the wrong length");
  int index = 0;
  int stride = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (budgets[i] < 0 || budgets[i] > c[i]) throw UsageError("budget outside the DP lattice");
    index += budgets[i] * stride;
    stride *= c[i] + 1;
  }
  return index;
}

std::vector<int> HindsightModel::decode(int state) const {
  const auto& c = caps();
  std::vector<int> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    out[i] = state % (c[i] + 1);
    state /= c[i] + 1;
  }
  return out;
}

AllocationHindsight::AllocationHindsight(const AllocationInstance& instance, std::vector<int> types)
    : instance_(instance), types_(std::move(types)), caps_(instance.budgets), integral_(instance.integral_rewards()) {
  for (int j : types_) {
    if (j < 0 || j >= instance_.n) throw ConfigError("arrival type out of range");
  }
  int stride = 1;
  for (int c : caps_) {
    strides_.push_back(stride);
    stride *= c + 1;
  }
}

void AllocationHindsight::transitions(int t, int state, std::vector<Transition>& out) const {
  out.clear();
  out.push_back({0, 0.0, state});
  const int j = signal(t);
  const auto budgets = decode(state);
  for (int s = 0; s < static_cast<int>(instance_.bundles[j].size()); ++s) {
    const Bundle& b = instance_.bundles[j][s];
    int next = state;
    bool fits = true;
    for (int i = 0; i < instance_.d && fits; ++i) {
      fits = b.consumption[i] <= budgets[i];
      next -= b.consumption[i] * strides_[i];
    }
    if (fits) out.push_back({s + 1, b.reward, next});
  }
}

SkiRentalHindsight::SkiRentalHindsight(int horizon, int buy_cost, int snow_days)
    : horizon_(horizon), buy_cost_(buy_cost), snow_days_(snow_days) {
  if (horizon < 0 || buy_cost < 0 || snow_days < 0 || snow_days > horizon) {
    throw ConfigError("ski rental needs 0 <= snow days <= horizon and a nonnegative price");
  }
}

void SkiRentalHindsight::transitions(int t, int state, std::vector<Transition>& out) const {
  out.clear();
  if (state == 1 && signal(t) == 1) {
    out.push_back({kRent, -1.0, 1});
    out.push_back({kBuy, -static_cast<double>(buy_cost_), 0});
  } else {
    out.push_back({kIdle, 0.0, state});
  }
}

OfflineValueTable::OfflineValueTable(std::shared_ptr<const HindsightModel> model, std::vector<double> values,
                                     std::vector<std::int64_t> exact)
    : model_(std::move(model)), values_(std::move(values)), exact_(std::move(exact)) {}

std::size_t OfflineValueTable::index(int t, int state) const {
  const int states = model_->num_states();
  if (t < 0 || t > horizon() || state < 0 || state >= states) throw UsageError("(t, state) outside the table");
  return static_cast<std::size_t>(t) * states + state;
}

std::int64_t OfflineValueTable::exact_value(int t, int state) const {
  if (!exact()) throw UsageError("table has no exact values (non-integral rewards)");
  return exact_[index(t, state)];
}

std::vector<int> OfflineValueTable::signals() const {
  std::vector<int> out;
  for (int t = horizon(); t >= 1; --t) out.push_back(model_->signal(t));
  return out;
}

OfflineValueTable solve_hindsight(std::shared_ptr<const HindsightModel> model) {
  const int states = model->num_states();
  const std::int64_t cells = static_cast<std::int64_t>(model->horizon() + 1) * states;
  if (cells > kMaxDpStates) {
    throw InstanceTooLarge("DP needs " + std::to_string(cells) + " (t, budget) states, above the guard of " +
                           std::to_string(kMaxDpStates) + "; use offline_lp_value instead");
  }
  const bool integral = model->integral_rewards();
  std::vector<double> values(static_cast<std::size_t>(cells), 0.0);
  std::vector<std::int64_t> exact(integral ? static_cast<std::size_t>(cells) : 0, 0);
  std::vector<Transition> moves;
  for (int t = 1; t <= model->horizon(); ++t) {
    const std::size_t row = static_cast<std::size_t>(t) * states;
    const std::size_t prev = static_cast<std::size_t>(t - 1) * states;
    for (int s = 0; s < states; ++s) {
      model->transitions(t, s, moves);
      double best = -std::numeric_limits<double>::infinity();
      std::int64_t best_exact = std::numeric_limits<std::int64_t>::min();
      for (const auto& m : moves) {
        best = std::max(best, m.reward + values[prev + m.next_state]);
        if (integral) best_exact = std::max<std::int64_t>(best_exact, std::llround(m.reward) + exact[prev + m.next_state]);
      }
      values[row + s] = best;
      if (integral) exact[row + s] = best_exact;
    }
  }
  return OfflineValueTable(std::move(model), std::move(values), std::move(exact));
}

OfflineValueTable offline_dp_table(const AllocationInstance& instance, std::span<const int> types) {
  return solve_hindsight(
      std::make_shared<AllocationHindsight>(instance, std::vector<int>(types.begin(), types.end())));
}

bool is_satisfying(const OfflineValueTable& table, int t, int state, int action) {
  if (t < 1) throw UsageError("no decision at time-to-go 0");
  std::vector<Transition> moves;
  table.model().transitions(t, state, moves);
  for (const auto& m : moves) {
    if (m.action != action) continue;
    if (table.exact()) {
      return std::llround(m.reward) + table.exact_value(t - 1, m.next_state) == table.exact_value(t, state);
    }
    return m.reward + table.value(t - 1, m.next_state) >= table.value(t, state) - 1e-9;
  }
  throw UsageError("action " + std::to_string(action) + " is not available at this state");
}

}  // namespace prophet::offline
