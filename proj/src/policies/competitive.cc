#include "prophet/policies/competitive.h"

#include <algorithm>
#include <cmath>

#include "prophet/lp/bounded_simplex.h"

namespace prophet::policies {

int CopyGraphSolution::resource_of_copy(int copy) const {
  const auto it = std::upper_bound(first_copy_of_resource.begin(), first_copy_of_resource.end(), copy);
  return static_cast<int>(it - first_copy_of_resource.begin()) - 1;
}

CopyGraphSolution solve_copy_graph(const AllocationInstance& instance, std::span<const int> budgets, int horizon) {
  if (instance.kind != InstanceKind::kMatching) throw ConfigError("competitive needs a matching instance");
  if (instance.arrival.kind() != arrivals::ArrivalKind::kMultinomial) {
    throw ConfigError("competitive needs multinomial arrivals");
  }
  CopyGraphSolution g;
  const auto& p = instance.arrival.probabilities();
  for (int i = 0; i < instance.d; ++i) {
    g.first_copy_of_resource.push_back(g.resource_copies);
    g.resource_copies += budgets[i];
  }
  int type_copies = 0;
  std::vector<int> first_type_copy;
  for (int j = 0; j < instance.n; ++j) {
    // Guard against p_j * T landing a hair above an integer.
    const int k = static_cast<int>(std::ceil(p[j] * horizon - 1e-9));
    g.copies_of_type.push_back(k);
    first_type_copy.push_back(type_copies);
    type_copies += k;
  }

  lp::LpProblem problem(g.resource_copies + type_copies);
  std::fill(problem.rhs.begin(), problem.rhs.end(), 1.0);
  struct Edge {
    int type, type_copy, resource_copy;
  };
  std::vector<Edge> edges;
  for (int j = 0; j < instance.n; ++j) {
    for (int k = 0; k < g.copies_of_type[j]; ++k) {
      for (int s = 0; s < static_cast<int>(instance.bundles[j].size()); ++s) {
        const int i = instance.matched_resource(j, s);
        for (int l = 0; l < budgets[i]; ++l) {
          const int u = g.first_copy_of_resource[i] + l;
          problem.add_variable(instance.bundles[j][s].reward, kInfinity,
                               {{u, 1.0}, {g.resource_copies + first_type_copy[j] + k, 1.0}});
          edges.push_back({j, k, u});
        }
      }
    }
  }
  const auto sol = lp::solve_bounded_lp(problem);
  if (sol.status != lp::LpStatus::kOptimal) throw std::runtime_error("copy-graph LP failed");
  g.objective = sol.objective_value;
  g.edges.resize(instance.n);
  for (int j = 0; j < instance.n; ++j) g.edges[j].resize(g.copies_of_type[j]);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (sol.x[e] > 1e-12) g.edges[edges[e].type][edges[e].type_copy].push_back({edges[e].resource_copy, sol.x[e]});
  }
  return g;
}

CompetitivePolicy::CompetitivePolicy(const AllocationInstance& instance)
    : graph_(solve_copy_graph(instance, instance.budgets, instance.horizon)) {}

void CompetitivePolicy::begin(const EpisodeContext& context) {
  Policy::begin(context);
  if (static_cast<int>(context.budgets.size()) != instance().d) throw ConfigError("budget size mismatch");
  int copies = 0;
  for (int b : context.budgets) copies += b;
  if (copies != graph_.resource_copies) throw ConfigError("competitive was prepared for different budgets");
  taken_.assign(graph_.resource_copies, 0);
}

Decision CompetitivePolicy::decide(std::span<const int> budgets, const Observation& obs, CounterRng& rng) {
  const int j = obs.type;
  const int k_count = graph_.copies_of_type[j];
  if (k_count == 0) return {Action::reject(), false};
  const int k = std::min(k_count - 1, static_cast<int>(rng.uniform() * k_count));
  const double u = rng.uniform();
  double acc = 0.0;
  for (const auto& [copy, lambda] : graph_.edges[j][k]) {
    acc += lambda;
    if (u < acc) {
      if (taken_[copy]) return {Action::reject(), false};
      const int i = graph_.resource_of_copy(copy);
      if (budgets[i] < 1) return {Action::reject(), false};
      taken_[copy] = 1;
      return {Action::match(i), false};
    }
  }
  return {Action::reject(), false};
}

}  // namespace prophet::policies
