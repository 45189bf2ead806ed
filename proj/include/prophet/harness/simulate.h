#pragma once

#include "prophet/arrivals/model.h"
#include "prophet/instance.h"
#include "prophet/policies/policy.h"
#include "prophet/trace.h"

namespace prophet::harness {

// E[Z(t)] handed to the policy at time-to-go t with current arrival `type`:
// t * p (multinomial), the rate integral up to `clock` (Poisson), or
// e_type plus the expected counts of the t - 1 arrivals after it (Markov).
std::vector<double> observed_expectation(const arrivals::ArrivalModel& model, int t, double clock, int type);

// Runs `policy` over the path from the instance's initial budgets. Every
// action is checked against the budgets; an infeasible action throws.
SimulationTrace simulate(const AllocationInstance& instance, const arrivals::SamplePath& path,
                         policies::Policy& policy, CounterRng& policy_rng);

}  // namespace prophet::harness
