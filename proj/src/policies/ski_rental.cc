#include "prophet/policies/ski_rental.h"

namespace prophet::policies {

SkiAction ski_rental_policy(int tau, int day, bool owns_skis, bool snow) {
  if (owns_skis || !snow) return SkiAction::kIdle;
  return day <= tau ? SkiAction::kRent : SkiAction::kBuy;
}

int ski_rental_cost(int horizon, int tau, int buy_cost, int snow_days) {
  int cost = 0;
  bool owns = false;
  for (int day = 1; day <= horizon; ++day) {
    switch (ski_rental_policy(tau, day, owns, day <= snow_days)) {
      case SkiAction::kRent:
        cost += 1;
        break;
      case SkiAction::kBuy:
        cost += buy_cost;
        owns = true;
        break;
      case SkiAction::kIdle:
        break;
    }
  }
  return cost;
}

}  // namespace prophet::policies
