#pragma once

#include <vector>

#include "prophet/policies/fluid.h"
#include "prophet/policies/policy.h"

namespace prophet::policies {

// Serving probabilities of type j taken from a fluid solution: bundle s
// gets X_sj / E_j, clamped to [0, 1] and scaled down if they sum above 1;
// the rest is reject.
std::vector<double> serving_ratios(const AllocationInstance& instance, const FluidSolution& fluid, int type,
                                   double expected);

// Draws a bundle from `ratios` (or reject) and rejects when it does not fit.
Decision randomized_decision(const AllocationInstance& instance, std::span<const int> budgets, int type,
                             std::span<const double> ratios, CounterRng& rng);

// Solves (P_T) once and serves type j with probability x_j / E_j(T).
class StaticRandomizedPolicy final : public Policy {
 public:
  std::string name() const override { return "sr"; }
  std::unique_ptr<Policy> clone() const override { return std::make_unique<StaticRandomizedPolicy>(*this); }
  void begin(const EpisodeContext& context) override;
  Decision decide(std::span<const int> budgets, const Observation& obs, CounterRng& rng) override;

 private:
  std::vector<std::vector<double>> ratios_;
};

// Re-solves (P_t) every period and serves with probability X^t_j / E_j(t).
class ResolveRandomizePolicy final : public Policy {
 public:
  std::string name() const override { return "rr"; }
  std::unique_ptr<Policy> clone() const override { return std::make_unique<ResolveRandomizePolicy>(*this); }
  Decision decide(std::span<const int> budgets, const Observation& obs, CounterRng& rng) override;
};

// Re-solve times floor(T^{(5/6)^u}) for u = 0 .. floor(log log T / log 1.2),
// deduplicated, in decreasing order.
std::vector<int> irt_schedule(int horizon);

// Re-solves (P_t) on a geometric schedule. Between re-solves it reuses the
// stored ratios: a ratio within `band` of 0 or 1 is thresholded at 1/2,
// anything else is randomized.
class InfrequentResolvePolicy final : public Policy {
 public:
  explicit InfrequentResolvePolicy(double band = 0.25) : band_(band) {}

  std::string name() const override { return "irt"; }
  std::unique_ptr<Policy> clone() const override { return std::make_unique<InfrequentResolvePolicy>(*this); }
  void begin(const EpisodeContext& context) override;
  Decision decide(std::span<const int> budgets, const Observation& obs, CounterRng& rng) override;

  int resolves() const { return resolves_; }

 private:
  double band_;
  std::vector<int> schedule_;
  std::size_t next_ = 0;
  int resolves_ = 0;
  std::vector<std::vector<double>> ratios_;
};

}  // namespace prophet::policies
