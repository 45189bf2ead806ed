#include "prophet/harness/catalog.h"

namespace prophet::harness {
namespace {

using arrivals::ArrivalModel;

AllocationInstance packing_one() {
  return AllocationInstance::packing("packing-1", {{1, 1, 0, 0, 1, 1}, {0, 0, 1, 1, 1, 1}}, {10, 6, 10, 5, 9, 8},
                                     {40, 40}, 200, ArrivalModel::multinomial({0.2, 0.2, 0.2, 0.2, 0.1, 0.1}));
}

AllocationInstance packing_two() {
  const std::vector<std::vector<int>> a = {
      {0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0}, {1, 1, 1, 0, 0, 1, 1, 1, 1, 0, 0, 0, 1, 1, 1},
      {0, 1, 1, 0, 1, 0, 0, 1, 0, 0, 1, 1, 0, 1, 0}, {0, 1, 0, 0, 0, 1, 1, 0, 1, 1, 1, 1, 1, 0, 0},
      {1, 1, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 1}, {0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 1, 1, 0},
      {1, 0, 1, 1, 1, 1, 1, 0, 1, 1, 1, 0, 0, 1, 1}, {1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0},
      {0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0}, {1, 1, 0, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 0, 0},
      {1, 1, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1}, {0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 0, 1, 0, 0, 1},
      {0, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1}, {1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 1, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0}, {1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 0, 1},
      {0, 1, 0, 1, 1, 0, 0, 0, 0, 1, 1, 1, 0, 0, 1}, {0, 0, 1, 1, 0, 1, 1, 0, 1, 1, 0, 0, 0, 0, 1},
      {1, 1, 1, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 1, 1, 1, 0, 0, 1, 1, 1, 1},
  };
  const std::vector<double> r = {7, 5, 16, 1, 1, 20, 10, 18, 7, 14, 17, 19, 14, 1, 2};
  const std::vector<double> p = {0.075, 0.075, 0.125, 0.025, 0.05,  0.062, 0.062, 0.1,
                                 0.1,   0.05,  0.125, 0.012, 0.075, 0.062, 0.002};
  return AllocationInstance::packing("packing-2", a, r, std::vector<int>(20, 10), 50, ArrivalModel::multinomial(p));
}

AllocationInstance matching_one() {
  return AllocationInstance::matching("matching-1", {{10, 6, 0, 0, 9, 8}, {0, 0, 5, 10, 20, 20}}, {4, 5}, 20,
                                      ArrivalModel::multinomial({0.2, 0.2, 0.2, 0.2, 0.1, 0.1}));
}

AllocationInstance matching_two() {
  return AllocationInstance::matching("matching-2",
                                      {
                                          {10, 6, 0, 0, 9, 8, 2, 0, 0, 1},
                                          {1, 0, 0, 0, 0, 0, 2, 0, 0, 8},
                                          {0, 0, 0, 0, 0, 0, 2, 0, 0, 6},
                                          {0, 26, 0, 0, 1, 0, 3, 0, 0, 11},
                                          {1, 4, 0, 0, 0, 0, 0, 0, 0, 13},
                                          {7, 4, 12, 11, 10, 12, 18, 2, 0, 0},
                                      },
                                      {40, 50, 40, 30, 20, 40}, 200, ArrivalModel::multinomial(std::vector<double>(10, 0.1)));
}

AllocationInstance multisecretary_demo() {
  return AllocationInstance::packing("multisecretary-demo", {{1, 1, 1}}, {3, 2, 1}, {50}, 100,
                                     ArrivalModel::multinomial({1.0 / 3, 1.0 / 3, 1.0 / 3}));
}

SkiRentalInstance skirental_demo() {
  SkiRentalInstance s;
  s.name = "skirental-demo";
  s.horizon = 12;
  s.buy_cost = 4;
  s.tau = 3;
  s.snow_days.assign(13, 1.0 / 12);
  s.snow_days[0] = 0.0;
  return s;
}

// Resources a, b, c with one unit each; types 1..4 want {a}, {a,b}, {c}, {b,c}.
AllocationInstance counterexample_matching() {
  return AllocationInstance::matching("counterexample-matching", {{1, 1, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}}, {1, 1, 1},
                                      3, ArrivalModel::multinomial({0.2, 0.3, 0.1, 0.4}));
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"packing-1",           "packing-2",      "matching-1", "matching-2",
                                                 "multisecretary-demo", "skirental-demo", "counterexample-matching"};
  return names;
}

CatalogEntry instance_catalog(const std::string& name) {
  if (name == "packing-1") return packing_one();
  if (name == "packing-2") return packing_two();
  if (name == "matching-1") return matching_one();
  if (name == "matching-2") return matching_two();
  if (name == "multisecretary-demo") return multisecretary_demo();
  if (name == "skirental-demo") return skirental_demo();
  if (name == "counterexample-matching") return counterexample_matching();
  std::string valid;
  for (const auto& n : catalog_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw ConfigError("unknown instance '" + name + "'; valid names: " + valid);
}

AllocationInstance allocation_from_catalog(const std::string& name) {
  auto entry = instance_catalog(name);
  if (auto* inst = std::get_if<AllocationInstance>(&entry)) return std::move(*inst);
  throw ConfigError("instance '" + name + "' is not an allocation instance");
}

}  // namespace prophet::harness
