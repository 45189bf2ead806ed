#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "prophet/instance.h"

namespace prophet::offline {

// Largest (t, state) lattice the exact DP accepts.
inline constexpr std::int64_t kMaxDpStates = 5'000'000;

struct Transition {
  int action;
  double reward;
  int next_state;
};

// Finite-horizon MDP whose signal sequence is fixed in hindsight. States
// are budget vectors 0 <= b_i <= cap_i, indexed in mixed radix.
class HindsightModel {
 public:
  virtual ~HindsightModel() = default;

  virtual int horizon() const = 0;
  virtual const std::vector<int>& caps() const = 0;
  // Signal observed at time-to-go t.
  virtual int signal(int t) const = 0;
  // Transitions available at time-to-go t from `state`, in action order.
  virtual void transitions(int t, int state, std::vector<Transition>& out) const = 0;
  virtual bool integral_rewards() const = 0;

  int num_states() const;
  int encode(std::span<const int> budgets) const;
  std::vector<int> decode(int state) const;
};

// Hindsight DP for an allocation instance and a fixed arrival sequence.
// Action 0 rejects; action s + 1 serves with bundle s.
class AllocationHindsight final : public HindsightModel {
 public:
  // `types` is in period order (first entry has time-to-go T).
  AllocationHindsight(const AllocationInstance& instance, std::vector<int> types);

  int horizon() const override { return static_cast<int>(types_.size()); }
  const std::vector<int>& caps() const override { return caps_; }
  int signal(int t) const override { return types_[types_.size() - t]; }
  void transitions(int t, int state, std::vector<Transition>& out) const override;
  bool integral_rewards() const override { return integral_; }

 private:
  AllocationInstance instance_;
  std::vector<int> types_;
  std::vector<int> caps_;
  std::vector<int> strides_;
  bool integral_;
};

// Ski rental with state 1 = no skis, 0 = skis owned. Actions: 0 idle,
// 1 rent (reward -1), 2 buy (reward -buy_cost). Snow on the first
// `snow_days` days.
class SkiRentalHindsight final : public HindsightModel {
 public:
  enum : int { kIdle = 0, kRent = 1, kBuy = 2 };

  SkiRentalHindsight(int horizon, int buy_cost, int snow_days);

  int horizon() const override { return horizon_; }
  const std::vector<int>& caps() const override { return caps_; }
  int signal(int t) const override { return horizon_ - t + 1 <= snow_days_ ? 1 : 0; }
  void transitions(int t, int state, std::vector<Transition>& out) const override;
  bool integral_rewards() const override { return true; }

 private:
  int horizon_;
  int buy_cost_;
  int snow_days_;
  std::vector<int> caps_{1};
};

// V_off(t, s) for t = 0..T over every state. When all rewards are integers
// the values are also kept as exact 64-bit integers.
class OfflineValueTable {
 public:
  OfflineValueTable(std::shared_ptr<const HindsightModel> model, std::vector<double> values,
                    std::vector<std::int64_t> exact);

  const HindsightModel& model() const { return *model_; }
  int horizon() const { return model_->horizon(); }
  bool exact() const { return !exact_.empty(); }

  double value(int t, int state) const { return values_[index(t, state)]; }
  double value(int t, std::span<const int> budgets) const { return value(t, model_->encode(budgets)); }
  std::int64_t exact_value(int t, int state) const;

  std::vector<int> signals() const;

 private:
  std::size_t index(int t, int state) const;

  std::shared_ptr<const HindsightModel> model_;
  std::vector<double> values_;
  std::vector<std::int64_t> exact_;
};

// Backward induction over the whole lattice. Throws InstanceTooLarge when
// (T + 1) * #states exceeds kMaxDpStates.
OfflineValueTable solve_hindsight(std::shared_ptr<const HindsightModel> model);

// Exact hindsight values for an allocation instance and arrival sequence.
OfflineValueTable offline_dp_table(const AllocationInstance& instance, std::span<const int> types);

// True iff the action attains the Bellman maximum at (t, state).
// Throws UsageError if the action is not available there.
bool is_satisfying(const OfflineValueTable& table, int t, int state, int action);

}  // namespace prophet::offline
