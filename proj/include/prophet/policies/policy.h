#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "prophet/common.h"
#include "prophet/instance.h"
#include "prophet/policies/action.h"

namespace prophet::policies {

// What a policy sees at the start of a run.
struct EpisodeContext {
  const AllocationInstance* instance = nullptr;
  std::vector<int> budgets;
  int horizon = 0;        // number of periods
  double horizon_clock = 0.0;
  std::vector<double> expected_total;  // E[Z(T)]
};

// What a policy sees in one period.
struct Observation {
  int t = 0;            // time-to-go, horizon .. 1
  double clock = 0.0;   // continuous time-to-go (Poisson) or t
  int type = 0;
  std::vector<double> expected;  // E[Z(t)] under the model's conditioning
};

// A policy object drives one run at a time. Expensive preparation happens
// when the prototype is built; clone() hands out per-run copies.
class Policy {
 public:
  virtual ~Policy() = default;

  virtual std::string name() const = 0;
  virtual std::unique_ptr<Policy> clone() const = 0;

  virtual void begin(const EpisodeContext& context) { context_ = context; }
  virtual Decision decide(std::span<const int> budgets, const Observation& obs, CounterRng& rng) = 0;

 protected:
  const AllocationInstance& instance() const { return *context_.instance; }
  EpisodeContext context_;
};

}  // namespace prophet::policies
