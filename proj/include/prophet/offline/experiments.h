#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "prophet/instance.h"

namespace prophet::offline {

// Ski rental regret in closed form from the remaining-snow counts:
// remaining_snow[t] is X^t, the snowy days among the last t days, for
// t = 0..horizon.
int ski_rental_regret_formula(int horizon, int tau, int buy_cost, std::span<const int> remaining_snow);

// Same, for a season that snows on its first `snow_days` days.
int ski_rental_regret_formula(int horizon, int tau, int buy_cost, int snow_days);

// Regret measured directly: the policy's cost minus min(X, buy_cost).
int ski_rental_direct_regret(int horizon, int tau, int buy_cost, int snow_days);

struct FluidGapPoint {
  int horizon = 0;
  double fluid_value = 0.0;     // v(P[E Z(T), B])
  double exact_offline = 0.0;   // E v(P[Z(T), B]) by summation, NaN if unavailable
  double exact_gap = 0.0;
  double mc_offline = 0.0;
  double mc_gap = 0.0;
  double mc_stderr = 0.0;
  int reps = 0;
};

struct FluidGapResult {
  std::vector<FluidGapPoint> points;
  double exact_slope = 0.0;  // log-log slope of exact_gap vs T
  double mc_slope = 0.0;
};

// The instance family is scaled to each horizon with budgets
// round(base_budget * T / base_horizon). The exact expectation is a sum
// over the binomial law and needs two types under multinomial arrivals.
// Monte-Carlo draws the counts with conditional binomials; reps = 0 skips it.
FluidGapResult fluid_gap_experiment(const AllocationInstance& base, std::span<const int> horizons, int reps,
                                    std::uint64_t seed);

// The two-type multi-secretary family with p = (1/2, 1/2), r = (2, 1) and
// B = T / 2 whose fluid LP is dual degenerate.
AllocationInstance degenerate_multisecretary(int horizon);

using Rational = boost::rational<std::int64_t>;

struct CounterexampleResult {
  Rational bayes_value;
  Rational optimal_value;
  Rational gap;
  bool tie_holds = false;
  // The optimal online value dominates the Bayes value in every state.
  bool optimal_dominates = false;
  int first_action_resource = -1;  // resource the Bayes Selector matches first
};

// Three resources, four types, T = 3, conditioned on the first arrival
// being type 2. Values are exact expected matching sizes.
CounterexampleResult bipartite_counterexample_check();

struct RegretBoundParams {
  std::vector<double> c;      // per-type deviation constants
  std::vector<double> tau;    // per-type deviation horizons
  std::vector<double> kappa;  // per-type Lipschitz constants
  double r_max = 0.0;
  double p_min = 0.0;
  double value = 0.0;
};

// Closed-form regret bounds under multinomial arrivals: single-resource
// unit packing (multi-secretary), packing with the configured kappa, and
// matching. Throws ConfigError for other arrival models.
RegretBoundParams theoretical_bound(const AllocationInstance& instance);

}  // namespace prophet::offline
