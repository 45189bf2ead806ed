#pragma once

#include <map>
#include <string>
#include <vector>

#include "prophet/harness/replication.h"

namespace prophet::harness {

// Budgets k * B and horizon h(k) * T, both rounded half up. Poisson
// windows are stretched by h(k).
struct ScalingRule {
  enum class Horizon { kLinear, kKPlusK07 };
  Horizon horizon = Horizon::kKPlusK07;

  double horizon_factor(double k) const;
  int scaled_budget(int base, double k) const;
  int scaled_horizon(int base, double k) const;
  AllocationInstance apply(const AllocationInstance& base, double k) const;

  // "linear" or "k-plus-k07"; throws ConfigError otherwise.
  static ScalingRule parse(const std::string& name);
  std::string name() const;
};

int round_half_up(double x);

struct SweepResult {
  std::vector<int> k_list;
  std::vector<std::string> policies;
  // reports[policy index][k index]
  std::vector<std::vector<RegretReport>> reports;
  std::map<std::string, double> slopes;  // log-log slope of mean regret vs k

  const RegretReport& at(const std::string& policy, int k) const;
};

// Every (k, policy) pair uses the same seed, so policies share paths.
SweepResult scaling_sweep(const AllocationInstance& base, const ScalingRule& rule, const std::vector<int>& k_list,
                          const std::vector<std::string>& policies, const RunOptions& options);

}  // namespace prophet::harness
