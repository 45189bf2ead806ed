#pragma once

#include <span>

#include "prophet/instance.h"

namespace prophet::offline {

// Hindsight LP value v(P[Z, B]): packing with caps Z, matching with type
// rows sum_i x_ij <= Z_j, allocation with a fictitious column per type.
double offline_lp_value(const AllocationInstance& instance, std::span<const int> counts, std::span<const int> budgets);

}  // namespace prophet::offline
