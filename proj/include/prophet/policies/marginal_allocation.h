#pragma once

#include <vector>

#include "prophet/policies/policy.h"

namespace prophet::policies {

// Bid-price tables f_i(t, b), t = 1..T, b = 0..B_i, built from a fluid
// solution x of (P_T) by
//   f_i(t+1, b) = f_i(t, b) + (1/T) sum_j x_ij (r_ij - f_i(t, b) + f_i(t, b-1))^+
// with f_i(1, .) = 0 and f_i(., 0) = 0.
class BidPriceTables {
 public:
  BidPriceTables() = default;
  // x[i][j] is the fluid allocation of type j to resource i.
  BidPriceTables(const AllocationInstance& instance, const std::vector<std::vector<double>>& x,
                 std::span<const int> budgets, int horizon);

  double value(int resource, int t, int b) const;
  double bid_price(int resource, int t, int b) const { return value(resource, t, b) - value(resource, t, b - 1); }

 private:
  int horizon_ = 0;
  std::vector<int> budgets_;
  std::vector<std::vector<double>> table_;  // per resource, (t-1) * (B_i+1) + b
};

// Rejects when every reward with a free resource is below its bid price;
// otherwise matches the largest reward minus bid price, lowest index on ties.
class MarginalAllocationPolicy final : public Policy {
 public:
  explicit MarginalAllocationPolicy(const AllocationInstance& instance);

  std::string name() const override { return "marginal"; }
  std::unique_ptr<Policy> clone() const override { return std::make_unique<MarginalAllocationPolicy>(*this); }
  Decision decide(std::span<const int> budgets, const Observation& obs, CounterRng& rng) override;

  const BidPriceTables& tables() const { return tables_; }

 private:
  BidPriceTables tables_;
};

}  // namespace prophet::policies
