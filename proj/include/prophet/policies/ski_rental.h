#pragma once

namespace prophet::policies {

enum class SkiAction { kIdle, kRent, kBuy };

// Rent on the first `tau` snowy days, buy on day tau + 1 if it snows.
// `day` is 1-based; idle without snow or once the skis are owned.
SkiAction ski_rental_policy(int tau, int day, bool owns_skis, bool snow);

// Total cost of the policy over a season whose first `snow_days` days have
// snow, with `buy_cost` to buy and 1 per rental.
int ski_rental_cost(int horizon, int tau, int buy_cost, int snow_days);

}  // namespace prophet::policies
