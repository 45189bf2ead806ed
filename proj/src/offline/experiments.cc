#include "prophet/offline/experiments.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>

#include "prophet/harness/catalog.h"
#include "prophet/offline/hindsight_dp.h"
#include "prophet/offline/offline_value.h"
#include "prophet/policies/action.h"
#include "prophet/policies/fluid.h"
#include "prophet/policies/ski_rental.h"
#include "prophet/statistics.h"

namespace prophet::offline {

int ski_rental_regret_formula(int horizon, int tau, int buy_cost, std::span<const int> remaining_snow) {
  if (static_cast<int>(remaining_snow.size()) != horizon + 1) {
    throw ConfigError("remaining snow counts must cover t = 0..horizon");
  }
  if (tau < 0 || tau > horizon) throw ConfigError("tau must lie in [0, horizon]");
  int regret = 0;
  for (int t = horizon - tau + 1; t <= horizon; ++t) regret += remaining_snow[t] > buy_cost ? 1 : 0;
  const int x = remaining_snow[horizon - tau];
  if (x >= 1 && x < buy_cost) regret += buy_cost - x;
  return regret;
}

int ski_rental_regret_formula(int horizon, int tau, int buy_cost, int snow_days) {
  std::vector<int> remaining(horizon + 1);
  for (int t = 0; t <= horizon; ++t) remaining[t] = std::max(0, snow_days - (horizon - t));
  return ski_rental_regret_formula(horizon, tau, buy_cost, remaining);
}

int ski_rental_direct_regret(int horizon, int tau, int buy_cost, int snow_days) {
  return policies::ski_rental_cost(horizon, tau, buy_cost, snow_days) - std::min(snow_days, buy_cost);
}

namespace {

int scaled_budget(int base_budget, int base_horizon, int horizon) {
  return static_cast<int>(std::floor(static_cast<double>(base_budget) * horizon / base_horizon + 0.5));
}

AllocationInstance at_horizon(const AllocationInstance& base, int horizon) {
  AllocationInstance inst = base;
  inst.horizon = horizon;
  for (auto& b : inst.budgets) b = scaled_budget(b, base.horizon, horizon);
  return inst;
}

double fluid_value(const AllocationInstance& inst) {
  const auto expected = inst.arrival.expected_total(inst.horizon);
  return policies::solve_fluid(inst, inst.budgets, expected).solution.objective_value;
}

std::vector<int> draw_multinomial(int trials, std::span<const double> p, CounterRng& rng) {
  std::vector<int> counts(p.size(), 0);
  double mass = 1.0;
  int left = trials;
  for (std::size_t j = 0; j + 1 < p.size() && left > 0; ++j) {
    const double q = std::clamp(p[j] / mass, 0.0, 1.0);
    counts[j] = std::binomial_distribution<int>(left, q)(rng);
    left -= counts[j];
    mass -= p[j];
  }
  counts.back() += left;
  return counts;
}

}  // namespace

AllocationInstance degenerate_multisecretary(int horizon) {
  return AllocationInstance::packing("degenerate-multisecretary", {{1, 1}}, {2.0, 1.0}, {horizon / 2}, horizon,
                                     arrivals::ArrivalModel::multinomial({0.5, 0.5}));
}

FluidGapResult fluid_gap_experiment(const AllocationInstance& base, std::span<const int> horizons, int reps,
                                    std::uint64_t seed) {
  if (base.arrival.kind() != arrivals::ArrivalKind::kMultinomial) {
    throw ConfigError("the fluid gap experiment needs multinomial arrivals");
  }
  if (base.horizon <= 0) throw ConfigError("the base instance needs a positive horizon");
  const auto& p = base.arrival.probabilities();
  FluidGapResult result;
  for (std::size_t h = 0; h < horizons.size(); ++h) {
    const int horizon = horizons[h];
    if (horizon <= 0) throw ConfigError("fluid gap horizons must be positive");
    const AllocationInstance inst = at_horizon(base, horizon);
    FluidGapPoint point;
    point.horizon = horizon;
    point.fluid_value = fluid_value(inst);
    point.exact_offline = std::numeric_limits<double>::quiet_NaN();
    if (base.n == 2) {
      const double lp = std::log(p[0]), lq = std::log(p[1]);
      std::vector<double> terms(horizon + 1);
      for (int z = 0; z <= horizon; ++z) {
        const double log_pmf = std::lgamma(horizon + 1.0) - std::lgamma(z + 1.0) - std::lgamma(horizon - z + 1.0) +
                               z * lp + (horizon - z) * lq;
        const int counts[2] = {z, horizon - z};
        terms[z] = std::exp(log_pmf) * offline_lp_value(inst, counts, inst.budgets);
      }
      point.exact_offline = pairwise_sum(terms);
    }
    point.exact_gap = point.fluid_value - point.exact_offline;
    point.reps = reps;
    if (reps > 0) {
      std::vector<double> values(reps);
      for (int r = 0; r < reps; ++r) {
        CounterRng rng = make_stream(derive_key(seed, h), r, Stream::kArrivals);
        values[r] = offline_lp_value(inst, draw_multinomial(horizon, p, rng), inst.budgets);
      }
      point.mc_offline = mean(values);
      point.mc_gap = point.fluid_value - point.mc_offline;
      point.mc_stderr = standard_error(values);
    }
    result.points.push_back(point);
  }
  std::vector<double> xs, exact, mc;
  for (const auto& pt : result.points) {
    xs.push_back(pt.horizon);
    exact.push_back(pt.exact_gap);
    mc.push_back(pt.mc_gap);
  }
  result.exact_slope = loglog_slope(xs, exact);
  result.mc_slope = reps > 0 ? loglog_slope(xs, mc) : std::numeric_limits<double>::quiet_NaN();
  return result;
}

namespace {

// Exact expected values over the remaining arrivals of a small matching
// instance, with the next types drawn i.i.d. from p.
class CounterexampleSolver {
 public:
  CounterexampleSolver(AllocationInstance inst, std::vector<Rational> p) : inst_(std::move(inst)), p_(std::move(p)) {}

  // Action of the Bayes Selector with exact disagreement probabilities.
  policies::Action bayes_action(int t, const std::vector<int>& budgets, int type) const {
    const auto actions = policies::feasible_actions(inst_, type, budgets);
    policies::Action best = actions.front();
    Rational best_q(2);
    for (const auto& action : actions) {
      const Rational q = disagreement(t, budgets, type, action);
      if (q < best_q) {
        best_q = q;
        best = action;
      }
    }
    return best;
  }

  Rational bayes_value(int t, const std::vector<int>& budgets, int type) const {
    if (t == 0) return 0;
    const auto action = bayes_action(t, budgets, type);
    return step_value(t, budgets, type, action, [this](int s, const std::vector<int>& b, int j) {
      return bayes_value(s, b, j);
    });
  }

  Rational optimal_value(int t, const std::vector<int>& budgets, int type) const {
    if (t == 0) return 0;
    Rational best(-1);
    for (const auto& action : policies::feasible_actions(inst_, type, budgets)) {
      best = std::max(best, step_value(t, budgets, type, action, [this](int s, const std::vector<int>& b, int j) {
                        return optimal_value(s, b, j);
                      }));
    }
    return best;
  }

  const AllocationInstance& instance() const { return inst_; }

 private:
  using ValueFn = std::function<Rational(int, const std::vector<int>&, int)>;

  Rational step_value(int t, const std::vector<int>& budgets, int type, const policies::Action& action,
                      const ValueFn& next) const {
    std::vector<int> after = budgets;
    const Rational reward(std::llround(policies::apply_action(inst_, type, action, after)));
    if (t == 1) return reward;
    Rational future = 0;
    for (std::size_t j = 0; j < p_.size(); ++j) future += p_[j] * next(t - 1, after, static_cast<int>(j));
    return reward + future;
  }

  // Pr[action is not satisfying in hindsight] over the t - 1 later arrivals.
  Rational disagreement(int t, const std::vector<int>& budgets, int type, const policies::Action& action) const {
    const auto bundle = policies::bundle_of(inst_, type, action);
    const int dp_action = bundle ? *bundle + 1 : 0;
    Rational q = 0;
    std::vector<int> seq(t, 0);
    seq[0] = type;
    const int n = static_cast<int>(p_.size());
    std::function<void(int, Rational)> walk = [&](int pos, Rational prob) {
      if (pos == t) {
        auto sub = inst_;
        sub.budgets = budgets;
        const auto table = offline_dp_table(sub, seq);
        if (!is_satisfying(table, t, table.model().encode(budgets), dp_action)) q += prob;
        return;
      }
      for (int j = 0; j < n; ++j) {
        seq[pos] = j;
        walk(pos + 1, prob * p_[j]);
      }
    };
    walk(1, Rational(1));
    return q;
  }

  AllocationInstance inst_;
  std::vector<Rational> p_;
};

}  // namespace

CounterexampleResult bipartite_counterexample_check() {
  const AllocationInstance inst = harness::allocation_from_catalog("counterexample-matching");
  // p = (0.2, 0.3, 0.1, 0.4) as exact fractions.
  const std::vector<Rational> p = {Rational(1, 5), Rational(3, 10), Rational(1, 10), Rational(2, 5)};
  CounterexampleSolver solver(inst, p);
  CounterexampleResult result;
  const Rational &p1 = p[0], &p3 = p[2], &p4 = p[3];
  result.tie_holds = p4 * p4 + 2 * p4 * p3 == p1 * p1 + 2 * p1 * p3 + 2 * p1 * p4;

  const int horizon = inst.horizon;
  const int first_type = 1;
  result.bayes_value = solver.bayes_value(horizon, inst.budgets, first_type);
  result.optimal_value = solver.optimal_value(horizon, inst.budgets, first_type);
  result.gap = result.optimal_value - result.bayes_value;
  const auto first = solver.bayes_action(horizon, inst.budgets, first_type);
  if (first.kind == policies::Action::Kind::kMatch) result.first_action_resource = first.index;

  result.optimal_dominates = true;
  const int states = 1 << inst.d;
  for (int t = 1; t <= horizon; ++t) {
    for (int mask = 0; mask < states; ++mask) {
      std::vector<int> budgets(inst.d);
      for (int i = 0; i < inst.d; ++i) budgets[i] = (mask >> i) & 1;
      for (int j = 0; j < inst.n; ++j) {
        if (solver.optimal_value(t, budgets, j) < solver.bayes_value(t, budgets, j)) result.optimal_dominates = false;
      }
    }
  }
  return result;
}

RegretBoundParams theoretical_bound(const AllocationInstance& instance) {
  if (instance.arrival.kind() != arrivals::ArrivalKind::kMultinomial) {
    throw ConfigError("closed-form regret bounds need multinomial arrivals");
  }
  const auto& p = instance.arrival.probabilities();
  const int n = instance.n;
  RegretBoundParams out;
  out.r_max = instance.max_reward();
  out.p_min = *std::min_element(p.begin(), p.end());
  out.c.assign(n, 0.0);
  out.tau.assign(n, 0.0);
  out.kappa.assign(n, instance.kappa);

  if (instance.kind == InstanceKind::kPacking) {
    const auto a = instance.packing_matrix();
    const bool unit_single = instance.d == 1 &&
                             std::all_of(a[0].begin(), a[0].end(), [](int v) { return v == 1; });
    if (unit_single) {
      // Every type but the most valuable one can be a disagreement.
      const auto r = instance.packing_rewards();
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return r[x] > r[y]; });
      std::fill(out.kappa.begin(), out.kappa.end(), 1.0);
      for (int k = 1; k < n; ++k) out.value += 2.0 / p[order[k]];
      out.value *= out.r_max;
      return out;
    }
    double sum = 0.0;
    for (double pj : p) sum += 1.0 / pj;
    out.value = instance.d * out.r_max * 103.0 * instance.kappa * instance.kappa * sum;
    return out;
  }

  for (int j = 0; j < n; ++j) {
    const double options = static_cast<double>(instance.bundles[j].size()) + 1.0;
    out.kappa[j] = instance.kind == InstanceKind::kMatching ? options / 2.0 : instance.kappa * options;
    const double eps = p[j] / (2.0 * out.kappa[j]);
    out.c[j] = 25.0 / (eps * eps);
    out.tau[j] = std::max(std::ceil(eps * eps * n / 20.0), std::ceil(2.0 / p[j]));
    out.value += p[j] * (out.c[j] + out.tau[j]);
  }
  out.value *= out.r_max;
  return out;
}

}  // namespace prophet::offline
