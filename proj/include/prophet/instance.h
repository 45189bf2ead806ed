#pragma once

#include <string>
#include <vector>

#include "prophet/arrivals/model.h"

namespace prophet {

enum class InstanceKind { kPacking, kMatching, kAllocation };

const char* to_string(InstanceKind kind);

// One way to serve a type: units consumed per resource and the reward.
struct Bundle {
  std::vector<int> consumption;  // length d
  double reward = 0.0;
};

// Online allocation instance. Types are 0-based; each type may be served
// by any one of its bundles or rejected.
struct AllocationInstance {
  std::string name;
  InstanceKind kind = InstanceKind::kAllocation;
  int d = 0;
  int n = 0;
  std::vector<std::vector<Bundle>> bundles;  // per type
  std::vector<int> budgets;
  int horizon = 0;
  arrivals::ArrivalModel arrival;
  // Lipschitz constant of the fluid LP, supplied by configuration.
  double kappa = 1.0;

  // a[i][j] units of resource i per accepted type j.
  static AllocationInstance packing(std::string name, const std::vector<std::vector<int>>& a,
                                    const std::vector<double>& rewards, std::vector<int> budgets, int horizon,
                                    arrivals::ArrivalModel arrival);

  // Edge (i, j) exists iff adjacency[i][j]; when `adjacency` is empty,
  // edges are the positive rewards.
  static AllocationInstance matching(std::string name, const std::vector<std::vector<double>>& rewards,
                                     std::vector<int> budgets, int horizon, arrivals::ArrivalModel arrival,
                                     const std::vector<std::vector<int>>& adjacency = {});

  static AllocationInstance allocation(std::string name, int d, std::vector<std::vector<Bundle>> bundles,
                                       std::vector<int> budgets, int horizon, arrivals::ArrivalModel arrival);

  // Packing view: column j of A and r_j. Requires kind == kPacking.
  std::vector<std::vector<int>> packing_matrix() const;
  std::vector<double> packing_rewards() const;

  // Matching view: the resource served by bundle s of type j.
  int matched_resource(int j, int s) const;
  double matching_reward(int i, int j) const;  // 0 without an edge

  double max_reward() const;
  bool integral_rewards() const;

  // Throws ConfigError when dimensions or values are inconsistent.
  void validate() const;
};

}  // namespace prophet
