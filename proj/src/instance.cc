#include "prophet/instance.h"

#include <algorithm>
#include <cmath>

namespace prophet {

const char* to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kPacking:
      return "packing";
    case InstanceKind::kMatching:
      return "matching";
    case InstanceKind::kAllocation:
      return "allocation";
  }
  return "unknown";
}

AllocationInstance AllocationInstance::packing(std::string name, const std::vector<std::vector<int>>& a,
                                               const std::vector<double>& rewards, std::vector<int> budgets,
                                               int horizon, arrivals::ArrivalModel arrival) {
  AllocationInstance inst;
  inst.name = std::move(name);
  inst.kind = InstanceKind::kPacking;
  inst.d = static_cast<int>(a.size());
  inst.n = static_cast<int>(rewards.size());
  inst.bundles.resize(inst.n);
  for (int j = 0; j < inst.n; ++j) {
    Bundle b{std::vector<int>(inst.d, 0), rewards[j]};
    for (int i = 0; i < inst.d; ++i) {
      if (static_cast<int>(a[i].size()) != inst.n) throw ConfigError("packing matrix row has wrong length");
      b.consumption[i] = a[i][j];
    }
    inst.bundles[j].push_back(std::move(b));
  }
  inst.budgets = std::move(budgets);
  inst.horizon = horizon;
  inst.arrival = std::move(arrival);
  inst.validate();
  return inst;
}

AllocationInstance AllocationInstance::matching(std::string name, const std::vector<std::vector<double>>& rewards,
                                                std::vector<int> budgets, int horizon,
                                                arrivals::ArrivalModel arrival,
                                                const std::vector<std::vector<int>>& adjacency) {
  AllocationInstance inst;
  inst.name = std::move(name);
  inst.kind = InstanceKind::kMatching;
  inst.d = static_cast<int>(rewards.size());
  inst.n = inst.d > 0 ? static_cast<int>(rewards[0].size()) : 0;
  if (!adjacency.empty() && static_cast<int>(adjacency.size()) != inst.d) {
    throw ConfigError("adjacency needs one row per resource");
  }
  inst.bundles.resize(inst.n);
  for (int i = 0; i < inst.d; ++i) {
    if (static_cast<int>(rewards[i].size()) != inst.n) throw ConfigError("reward matrix row has wrong length");
    if (!adjacency.empty() && static_cast<int>(adjacency[i].size()) != inst.n) {
      throw ConfigError("adjacency row has wrong length");
    }
  }
  for (int j = 0; j < inst.n; ++j) {
    for (int i = 0; i < inst.d; ++i) {
      const bool edge = adjacency.empty() ? rewards[i][j] > 0.0 : adjacency[i][j] != 0;
      if (!edge) continue;
      Bundle b{std::vector<int>(inst.d, 0), rewards[i][j]};
      b.consumption[i] = 1;
      inst.bundles[j].push_back(std::move(b));
    }
  }
  inst.budgets = std::move(budgets);
  inst.horizon = horizon;
  inst.arrival = std::move(arrival);
  inst.validate();
  return inst;
}

AllocationInstance AllocationInstance::allocation(std::string name, int d, std::vector<std::vector<Bundle>> bundles,
                                                  std::vector<int> budgets, int horizon,
                                                  arrivals::ArrivalModel arrival) {
  AllocationInstance inst;
  inst.name = std::move(name);
  inst.kind = InstanceKind::kAllocation;
  inst.d = d;
  inst.n = static_cast<int>(bundles.size());
  inst.bundles = std::move(bundles);
  inst.budgets = std::move(budgets);
  inst.horizon = horizon;
  inst.arrival = std::move(arrival);
  inst.validate();
  return inst;
}

std::vector<std::vector<int>> AllocationInstance::packing_matrix() const {
  if (kind != InstanceKind::kPacking) throw UsageError("packing view of a non-packing instance");
  std::vector<std::vector<int>> a(d, std::vector<int>(n, 0));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < d; ++i) a[i][j] = bundles[j][0].consumption[i];
  }
  return a;
}

std::vector<double> AllocationInstance::packing_rewards() const {
  if (kind != InstanceKind::kPacking) throw UsageError("packing view of a non-packing instance");
  std::vector<double> r(n);
  for (int j = 0; j < n; ++j) r[j] = bundles[j][0].reward;
  return r;
}

int AllocationInstance::matched_resource(int j, int s) const {
  const auto& c = bundles[j][s].consumption;
  return static_cast<int>(std::find(c.begin(), c.end(), 1) - c.begin());
}

double AllocationInstance::matching_reward(int i, int j) const {
  for (std::size_t s = 0; s < bundles[j].size(); ++s) {
    if (matched_resource(j, static_cast<int>(s)) == i) return bundles[j][s].reward;
  }
  return 0.0;
}

double AllocationInstance::max_reward() const {
  double r = 0.0;
  for (const auto& type : bundles) {
    for (const auto& b : type) r = std::max(r, b.reward);
  }
  return r;
}

bool AllocationInstance::integral_rewards() const {
  for (const auto& type : bundles) {
    for (const auto& b : type) {
      if (b.reward != std::floor(b.reward) || std::abs(b.reward) > 1e15) return false;
    }
  }
  return true;
}

void AllocationInstance::validate() const {
  if (d < 0 || n < 1) throw ConfigError("instance needs at least one type");
  if (static_cast<int>(bundles.size()) != n) throw ConfigError("instance needs one bundle list per type");
  if (static_cast<int>(budgets.size()) != d) throw ConfigError("instance needs one budget per resource");
  if (horizon < 0) throw ConfigError("horizon must be nonnegative");
  for (int b : budgets) {
    if (b < 0) throw ConfigError("budgets must be nonnegative");
  }
  for (const auto& type : bundles) {
    for (const auto& b : type) {
      if (static_cast<int>(b.consumption.size()) != d) throw ConfigError("bundle consumption has wrong length");
      if (!std::isfinite(b.reward) || b.reward < 0.0) throw ConfigError("rewards must be finite and nonnegative");
      bool nonempty = false;
      for (int a : b.consumption) {
        if (a < 0) throw ConfigError("consumption must be nonnegative");
        nonempty = nonempty || a > 0;
      }
      if (!nonempty && kind != InstanceKind::kPacking) throw ConfigError("bundles must consume some resource");
    }
  }
  if (kind == InstanceKind::kPacking) {
    for (const auto& type : bundles) {
      if (type.size() != 1) throw ConfigError("packing types have exactly one bundle");
    }
  }
  if (kind == InstanceKind::kMatching) {
    for (const auto& type : bundles) {
      for (const auto& b : type) {
        int total = 0;
        for (int a : b.consumption) total += a;
        if (total != 1) throw ConfigError("matching bundles use exactly one unit of one resource");
      }
    }
  }
  if (arrival.num_types() != n) throw ConfigError("arrival model type count does not match the instance");
}

}  // namespace prophet
