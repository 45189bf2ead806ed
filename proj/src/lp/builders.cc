#include "prophet/lp/builders.h"

#include <string>

namespace prophet::lp {
namespace {

void check_sizes(const AllocationInstance& instance, std::span<const double> budgets,
                 std::span<const double> demand) {
  if (static_cast<int>(budgets.size()) != instance.d) {
    throw ConfigError("budget vector has " + std::to_string(budgets.size()) + " entries, expected " +
                      std::to_string(instance.d));
  }
  if (static_cast<int>(demand.size()) != instance.n) {
    throw ConfigError("demand vector has " + std::to_string(demand.size()) + " entries, expected " +
                      std::to_string(instance.n));
  }
  for (double b : budgets) {
    if (b < 0.0) throw ConfigError("budgets must be nonnegative");
  }
  for (double z : demand) {
    if (z < 0.0) throw ConfigError("demand must be nonnegative");
  }
}

}  // namespace

BuiltLp build_packing_lp(const AllocationInstance& instance, std::span<const double> budgets,
                         std::span<const double> demand_cap) {
  if (instance.kind != InstanceKind::kPacking) throw ConfigError("packing LP needs a packing instance");
  check_sizes(instance, budgets, demand_cap);
  BuiltLp out{LpProblem(instance.d), {}, std::vector<std::vector<int>>(instance.n)};
  std::copy(budgets.begin(), budgets.end(), out.problem.rhs.begin());
  std::vector<SparseMatrix::Entry> col;
  for (int j = 0; j < instance.n; ++j) {
    const Bundle& b = instance.bundles[j][0];
    col.clear();
    for (int i = 0; i < instance.d; ++i) {
      if (b.consumption[i] != 0) col.push_back({i, static_cast<double>(b.consumption[i])});
    }
    out.columns_of_type[j].push_back(out.problem.add_variable(b.reward, demand_cap[j], col));
    out.columns.push_back({j, 0});
  }
  return out;
}

BuiltLp build_matching_lp(const AllocationInstance& instance, std::span<const double> budgets,
                          std::span<const double> demand, bool use_equality_with_slack) {
  if (instance.kind != InstanceKind::kMatching) throw ConfigError("matching LP needs a matching instance");
  check_sizes(instance, budgets, demand);
  const int d = instance.d;
  BuiltLp out{LpProblem(d + instance.n), {}, std::vector<std::vector<int>>(instance.n)};
  std::copy(budgets.begin(), budgets.end(), out.problem.rhs.begin());
  for (int j = 0; j < instance.n; ++j) {
    out.problem.rhs[d + j] = demand[j];
    if (use_equality_with_slack) out.problem.row_sense[d + j] = RowSense::kEqual;
  }
  for (int j = 0; j < instance.n; ++j) {
    for (int s = 0; s < static_cast<int>(instance.bundles[j].size()); ++s) {
      const int i = instance.matched_resource(j, s);
      out.columns_of_type[j].push_back(
          out.problem.add_variable(instance.bundles[j][s].reward, kInfinity, {{i, 1.0}, {d + j, 1.0}}));
      out.columns.push_back({j, s});
    }
  }
  if (use_equality_with_slack) {
    for (int j = 0; j < instance.n; ++j) {
      out.columns_of_type[j].push_back(out.problem.add_variable(0.0, kInfinity, {{d + j, 1.0}}));
      out.columns.push_back({j, ColumnRef::kFictitious});
    }
  }
  return out;
}

BuiltLp build_allocation_lp(const AllocationInstance& instance, std::span<const double> budgets,
                            std::span<const double> demand) {
  check_sizes(instance, budgets, demand);
  const int d = instance.d;
  BuiltLp out{LpProblem(d + instance.n), {}, std::vector<std::vector<int>>(instance.n)};
  std::copy(budgets.begin(), budgets.end(), out.problem.rhs.begin());
  std::vector<SparseMatrix::Entry> col;
  for (int j = 0; j < instance.n; ++j) {
    out.problem.rhs[d + j] = demand[j];
    out.problem.row_sense[d + j] = RowSense::kEqual;
    for (int s = 0; s < static_cast<int>(instance.bundles[j].size()); ++s) {
      const Bundle& b = instance.bundles[j][s];
      col.clear();
      for (int i = 0; i < d; ++i) {
        if (b.consumption[i] != 0) col.push_back({i, static_cast<double>(b.consumption[i])});
      }
      col.push_back({d + j, 1.0});
      out.columns_of_type[j].push_back(out.problem.add_variable(b.reward, kInfinity, col));
      out.columns.push_back({j, s});
    }
    out.columns_of_type[j].push_back(out.problem.add_variable(0.0, kInfinity, {{d + j, 1.0}}));
    out.columns.push_back({j, ColumnRef::kFictitious});
  }
  return out;
}

}  // namespace prophet::lp
