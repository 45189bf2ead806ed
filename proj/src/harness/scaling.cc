#include "prophet/harness/scaling.h"

#include <cmath>

#include "prophet/statistics.h"

namespace prophet::harness {

int round_half_up(double x) { return static_cast<int>(std::floor(x + 0.5)); }

double ScalingRule::horizon_factor(double k) const {
  return horizon == Horizon::kLinear ? k : k + std::pow(k, 0.7);
}

int ScalingRule::scaled_budget(int base, double k) const { return round_half_up(k * base); }

int ScalingRule::scaled_horizon(int base, double k) const { return round_half_up(horizon_factor(k) * base); }

AllocationInstance ScalingRule::apply(const AllocationInstance& base, double k) const {
  if (!(k >= 1.0)) throw ConfigError("scaling factor k must be at least 1");
  AllocationInstance inst = base;
  for (auto& b : inst.budgets) b = scaled_budget(b, k);
  inst.horizon = scaled_horizon(base.horizon, k);
  if (inst.arrival.kind() == arrivals::ArrivalKind::kPoisson) {
    inst.arrival = base.arrival.stretched(horizon_factor(k));
  }
  return inst;
}

ScalingRule ScalingRule::parse(const std::string& name) {
  if (name == "linear") return {Horizon::kLinear};
  if (name == "k-plus-k07") return {Horizon::kKPlusK07};
  throw ConfigError("unknown scaling rule '" + name + "' (expected linear or k-plus-k07)");
}

std::string ScalingRule::name() const { return horizon == Horizon::kLinear ? "linear" : "k-plus-k07"; }

const RegretReport& SweepResult::at(const std::string& policy, int k) const {
  for (std::size_t p = 0; p < policies.size(); ++p) {
    if (policies[p] != policy) continue;
    for (std::size_t i = 0; i < k_list.size(); ++i) {
      if (k_list[i] == k) return reports[p][i];
    }
  }
  throw UsageError("no sweep report for policy " + policy + " at k=" + std::to_string(k));
}

SweepResult scaling_sweep(const AllocationInstance& base, const ScalingRule& rule, const std::vector<int>& k_list,
                          const std::vector<std::string>& policies, const RunOptions& options) {
  if (k_list.empty()) throw ConfigError("the k list is empty");
  if (policies.empty()) throw ConfigError("no policies given");
  for (int k : k_list) {
    if (k < 1) throw ConfigError("k values must be positive integers");
  }
  SweepResult result;
  result.k_list = k_list;
  result.policies = policies;
  result.reports.resize(policies.size());
  for (int k : k_list) {
    const auto inst = rule.apply(base, k);
    for (std::size_t p = 0; p < policies.size(); ++p) {
      result.reports[p].push_back(run_replications(inst, policies[p], options, k));
    }
  }
  std::vector<double> xs(k_list.begin(), k_list.end());
  for (std::size_t p = 0; p < policies.size(); ++p) {
    std::vector<double> ys;
    for (const auto& r : result.reports[p]) ys.push_back(r.mean_regret);
    result.slopes[policies[p]] = loglog_slope(xs, ys);
  }
  return result;
}

}  // namespace prophet::harness
