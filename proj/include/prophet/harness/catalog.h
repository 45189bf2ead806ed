#pragma once

#include <string>
#include <variant>
#include <vector>

#include "prophet/instance.h"

namespace prophet::harness {

// Ski rental: buy for `buy_cost` or rent for 1 per snowy day. Snow lasts
// the first X days of the season, X ~ snow_days (index = X, 0..horizon).
struct SkiRentalInstance {
  std::string name;
  int horizon = 0;
  int buy_cost = 1;
  int tau = 0;
  std::vector<double> snow_days;
};

using CatalogEntry = std::variant<AllocationInstance, SkiRentalInstance>;

const std::vector<std::string>& catalog_names();

// Throws ConfigError listing the valid names when `name` is unknown.
CatalogEntry instance_catalog(const std::string& name);

// Convenience for entries that are allocation instances.
AllocationInstance allocation_from_catalog(const std::string& name);

}  // namespace prophet::harness
