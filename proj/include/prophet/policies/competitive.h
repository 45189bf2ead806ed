#pragma once

#include <vector>

#include "prophet/policies/policy.h"

namespace prophet::policies {

// Copy-graph LP: B_i copies of each resource, K_j = ceil(p_j T) copies of
// each type, one variable per edge between adjacent copies. Solved once.
struct CopyGraphSolution {
  std::vector<int> copies_of_type;      // K_j
  std::vector<int> first_copy_of_resource;  // offset of resource i's copies
  int resource_copies = 0;
  // edges[j][k] lists (resource copy, lambda) with lambda > 0 for type copy k.
  std::vector<std::vector<std::vector<std::pair<int, double>>>> edges;
  double objective = 0.0;

  int resource_of_copy(int copy) const;
};

CopyGraphSolution solve_copy_graph(const AllocationInstance& instance, std::span<const int> budgets, int horizon);

// On arrival j: draw a type copy uniformly, then a resource copy with
// probability lambda (reject with the residual); match iff that copy is
// still free.
class CompetitivePolicy final : public Policy {
 public:
  // Prepares the copy LP for the instance's budgets and horizon.
  explicit CompetitivePolicy(const AllocationInstance& instance);

  std::string name() const override { return "competitive"; }
  std::unique_ptr<Policy> clone() const override { return std::make_unique<CompetitivePolicy>(*this); }
  void begin(const EpisodeContext& context) override;
  Decision decide(std::span<const int> budgets, const Observation& obs, CounterRng& rng) override;

  const CopyGraphSolution& copy_graph() const { return graph_; }

 private:
  CopyGraphSolution graph_;
  std::vector<char> taken_;
};

}  // namespace prophet::policies
