// Runs the ten acceptance criteria and prints one PASS/FAIL line each.
// Exit status is the number of failing criteria, not counting those named
// with --known-shortfalls (they still print FAIL).

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "prophet/harness/catalog.h"
#include "prophet/harness/replication.h"
#include "prophet/harness/scaling.h"
#include "prophet/harness/simulate.h"
#include "prophet/lp/bounded_simplex.h"
#include "prophet/lp/builders.h"
#include "prophet/lp/lipschitz.h"
#include "prophet/lp/vertex_enumeration.h"
#include "prophet/offline/coupling.h"
#include "prophet/offline/experiments.h"
#include "prophet/offline/hindsight_dp.h"
#include "prophet/policies/fluid_bayes.h"
#include "prophet/statistics.h"

namespace prophet {
namespace {

using arrivals::ArrivalModel;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

AllocationInstance random_packing(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> dim(1, 2), types(1, 3), coef(0, 2), reward(0, 10), budget(0, 4), horizon(1, 8);
  const int d = dim(gen), n = types(gen);
  std::vector<std::vector<int>> a(d, std::vector<int>(n));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < d; ++i) a[i][j] = coef(gen);
    const int home = static_cast<int>(gen() % d);
    a[home][j] = std::max(1, a[home][j]);
  }
  std::vector<double> r(n);
  for (auto& v : r) v = reward(gen);
  std::vector<int> b(d);
  for (auto& v : b) v = budget(gen);
  std::vector<double> p(n);
  for (auto& v : p) v = 1.0 + static_cast<double>(gen() % 4);
  double total = 0.0;
  for (double v : p) total += v;
  for (auto& v : p) v /= total;
  return AllocationInstance::packing("random", a, r, b, horizon(gen), ArrivalModel::multinomial(p));
}

void coupling_identity(Outcome& o) {
  const auto start = Clock::now();
  std::mt19937_64 gen(1);
  int paths = 0, disagreements = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto inst = random_packing(gen);
    CounterRng rng(derive_key(11, trial)), coin(derive_key(12, trial));
    const auto path = inst.arrival.sample_path(inst.horizon, rng);
    const auto table = offline::offline_dp_table(inst, path.types());
    policies::FluidBayesPolicy policy;
    const auto trace = harness::simulate(inst, path, policy, coin);
    const auto report = offline::coupling_audit(trace, inst, table);
    const std::int64_t v_off = table.exact_value(inst.horizon, table.model().encode(inst.budgets));
    if (report.exact_total != v_off - std::llround(trace.total_reward)) {
      o.require(false, "identity broken on trial " + std::to_string(trial));
      break;
    }
    for (const auto& r : report.records) disagreements += r.was_satisfying ? 0 : 1;
    ++paths;
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 120, "runtime");
  o.detail << paths << " paths exact, " << disagreements << " disagreements, " << elapsed << " s";
}

AllocationInstance three_type_secretary(int horizon) {
  return AllocationInstance::packing("multisecretary", {{1, 1, 1}}, {3, 2, 1}, {horizon / 2}, horizon,
                                     ArrivalModel::multinomial({1.0 / 3, 1.0 / 3, 1.0 / 3}));
}

harness::RegretReport secretary_t200;

void multisecretary_bound(Outcome& o) {
  const auto start = Clock::now();
  const std::vector<int> horizons = {50, 100, 200, 400};
  std::vector<double> xs, means;
  harness::RunOptions opts;
  opts.reps = 2000;
  opts.seed = 2;
  for (int horizon : horizons) {
    const auto report = harness::run_replications(three_type_secretary(horizon), "bayes", opts);
    if (horizon == 200) secretary_t200 = report;
    xs.push_back(horizon);
    means.push_back(report.mean_regret);
    o.require(report.mean_regret <= 36.0, "mean regret above 36 at T=" + std::to_string(horizon));
    o.detail << "T=" << horizon << " mean " << report.mean_regret << "; ";
  }
  const double slope = loglog_slope(xs, means);
  const double elapsed = seconds_since(start);
  o.require(slope < 0.2, "slope");
  o.require(elapsed < 600, "runtime");
  o.detail << "slope " << slope << ", " << elapsed << " s";
}

void fluid_gap(Outcome& o) {
  const std::vector<int> horizons = {100, 400, 1600, 6400};
  const auto result = offline::fluid_gap_experiment(offline::degenerate_multisecretary(100), horizons, 100000, 3);
  const auto& first = result.points.front();
  o.require(std::abs(result.exact_slope - 0.5) <= 0.1, "exact slope");
  o.require(std::abs(result.mc_slope - 0.5) <= 0.1, "Monte-Carlo slope");
  o.require(std::abs(first.mc_gap - first.exact_gap) <= 3 * first.mc_stderr, "T=100 Monte-Carlo vs exact");
  o.detail << "exact slope " << result.exact_slope << ", MC slope " << result.mc_slope << ", T=100 exact gap "
           << first.exact_gap << " vs MC " << first.mc_gap << " +- " << first.mc_stderr;
}

void scaling_check(Outcome& o, const std::string& instance, harness::ScalingRule::Horizon horizon_rule,
                   const std::vector<std::string>& policies, double time_limit,
                   const std::function<void(const harness::SweepResult&)>& judge) {
  const auto start = Clock::now();
  harness::RunOptions opts;
  opts.reps = 100;
  opts.seed = 4;
  harness::ScalingRule rule;
  rule.horizon = horizon_rule;
  const auto sweep = harness::scaling_sweep(harness::allocation_from_catalog(instance), rule, {1, 2, 4, 8}, policies,
                                            opts);
  for (const auto& p : policies) {
    o.detail << p << " [";
    for (int k : sweep.k_list) o.detail << (k == 1 ? "" : " ") << sweep.at(p, k).mean_regret;
    o.detail << "] slope " << sweep.slopes.at(p) << "; ";
  }
  judge(sweep);
  const double elapsed = seconds_since(start);
  o.require(elapsed < time_limit, "runtime");
  o.detail << elapsed << " s";
}

void packing_scaling(Outcome& o) {
  scaling_check(o, "packing-1", harness::ScalingRule::Horizon::kKPlusK07, {"bayes", "rr", "sr"}, 1800,
                [&o](const harness::SweepResult& s) {
                  o.require(s.slopes.at("bayes") < 0.2, "bayes slope");
                  o.require(s.slopes.at("rr") >= 0.3, "rr slope");
                  o.require(s.slopes.at("sr") >= 0.3, "sr slope");
                  for (int k : s.k_list) {
                    const double bayes = s.at("bayes", k).mean_regret;
                    o.require(bayes < s.at("rr", k).mean_regret && bayes < s.at("sr", k).mean_regret,
                              "bayes not smallest at k=" + std::to_string(k));
                  }
                });
}

void matching_scaling(Outcome& o) {
  scaling_check(o, "matching-1", harness::ScalingRule::Horizon::kLinear, {"bayes", "marginal", "competitive"}, 1800,
                [&o](const harness::SweepResult& s) {
                  o.require(s.slopes.at("bayes") < 0.2, "bayes slope");
                  o.require(s.slopes.at("marginal") >= 0.3, "marginal slope");
                  for (int k : s.k_list) {
                    o.require(s.at("competitive", k).mean_regret >= 10 * s.at("bayes", k).mean_regret,
                              "competitive below 10x bayes at k=" + std::to_string(k));
                  }
                });
}

void tail_lightness(Outcome& o) {
  if (secretary_t200.records.empty()) {
    o.require(false, "criterion 2 ensemble missing");
    return;
  }
  const auto summary = harness::tail_summary(secretary_t200);
  o.require(summary.survival_at_twice_mean < 0.25, "Pr[Reg > 2 mean]");
  o.require(summary.non_increasing, "survival monotone");
  o.require(std::abs(summary.log_survival_pearson) >= 0.9, "log-survival linearity");
  o.detail << "Pr[Reg > 2*" << secretary_t200.mean_regret << "] = " << summary.survival_at_twice_mean
           << ", Pearson " << summary.log_survival_pearson << " over " << summary.points << " points";
}

lp::LpProblem random_lp(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> nvars(1, 5), nrows(1, 4), coef(-3, 4), cost(-5, 9), cap(0, 6), rhs(-4, 12);
  const int n = nvars(gen), m = nrows(gen);
  std::vector<double> c(n), u(n), b(m);
  std::vector<std::vector<double>> a(m, std::vector<double>(n));
  for (auto& v : c) v = cost(gen);
  for (auto& v : u) v = cap(gen) + 0.5 * static_cast<double>(gen() % 2);
  for (auto& row : a) {
    for (auto& v : row) v = coef(gen);
  }
  for (auto& v : b) v = rhs(gen);
  auto p = lp::LpProblem::from_dense(c, a, b, u);
  if (gen() % 4 == 0) p.row_sense[gen() % m] = lp::RowSense::kEqual;
  return p;
}

void lp_oracles(Outcome& o) {
  std::mt19937_64 gen(7);
  int optimal = 0, infeasible = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = random_lp(gen);
    const auto sol = lp::solve_bounded_lp(p);
    const auto oracle = lp::enumerate_vertices(p);
    if (sol.status != oracle.status) {
      o.require(false, "status mismatch on trial " + std::to_string(trial));
      continue;
    }
    if (sol.status != lp::LpStatus::kOptimal) {
      ++infeasible;
      continue;
    }
    ++optimal;
    worst = std::max(worst, std::abs(sol.objective_value - oracle.objective_value));
  }
  o.require(worst <= 1e-7, "objective mismatch");

  std::uniform_int_distribution<int> dim(1, 3), reward(0, 5), rhs(0, 3);
  int lipschitz_ok = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int d = dim(gen), n = dim(gen);
    std::vector<std::vector<double>> r(d, std::vector<double>(n));
    for (auto& row : r) {
      for (auto& v : row) v = reward(gen);
    }
    const auto inst = AllocationInstance::matching("random", r, std::vector<int>(d, 1), 4,
                                                   ArrivalModel::multinomial(std::vector<double>(n, 1.0 / n)));
    const lp::LpTemplate make = [&inst, d, n](std::span<const double> y) {
      std::vector<double> budgets(y.begin(), y.begin() + d), demand(y.begin() + d, y.begin() + d + n);
      return lp::build_matching_lp(inst, budgets, demand, false).problem;
    };
    std::vector<double> y1(d + n), y2(d + n);
    for (auto& v : y1) v = rhs(gen);
    for (auto& v : y2) v = rhs(gen);
    if (lp::lipschitz_check(make, y1, y2).holds) ++lipschitz_ok;
  }
  o.require(lipschitz_ok == 200, "Lipschitz");
  o.detail << optimal << " optimal + " << infeasible << " infeasible LPs, worst gap " << worst << "; Lipschitz "
           << lipschitz_ok << "/200";
}

void ski_rental_formula(Outcome& o) {
  const int horizon = 12;
  int cases = 0, mismatches = 0;
  for (int tau = 0; tau < horizon; ++tau) {
    for (int b = 1; b <= horizon; ++b) {
      for (int x = 0; x <= horizon; ++x) {
        ++cases;
        if (offline::ski_rental_regret_formula(horizon, tau, b, x) != offline::ski_rental_direct_regret(horizon, tau, b, x)) {
          ++mismatches;
        }
      }
    }
  }
  o.require(mismatches == 0, "formula mismatch");
  o.detail << cases << " cases, " << mismatches << " mismatches";
}

void counterexample(Outcome& o) {
  const auto r = offline::bipartite_counterexample_check();
  o.require(r.gap > 0, "gap");
  o.require(r.tie_holds, "tie");
  o.detail << "optimal " << r.optimal_value << " - bayes " << r.bayes_value << " = " << r.gap;
}

// accept iff b / t >= pbar_j - p_j / 2 with p_j = weights_j / denominator
bool closed_form_accept(const std::vector<int>& weights, int denominator, int j, int b, int t) {
  int cumulative = 0;
  for (int i = 0; i <= j; ++i) cumulative += weights[i];
  return b > 0 && 2L * b * denominator >= static_cast<long>(t) * (2 * cumulative - weights[j]);
}

void secretary_closed_form(Outcome& o) {
  struct Case {
    std::vector<double> rewards;
    std::vector<int> weights;
    int denominator;
  };
  const std::vector<Case> cases = {
      {{3, 2, 1}, {1, 1, 1}, 3}, {{2, 1}, {1, 1}, 2}, {{9, 4, 2, 1}, {2, 3, 1, 4}, 10}, {{5, 4, 3, 2, 1}, {1, 1, 1, 1, 6}, 10}};
  int states = 0, mismatches = 0;
  for (const auto& c : cases) {
    std::vector<double> p;
    for (int w : c.weights) p.push_back(static_cast<double>(w) / c.denominator);
    const auto inst = AllocationInstance::packing("ms", {std::vector<int>(c.rewards.size(), 1)}, c.rewards, {50}, 50,
                                                  ArrivalModel::multinomial(p));
    for (int t = 1; t <= 50; ++t) {
      for (int b = 0; b <= t; ++b) {
        const std::vector<int> budgets = {b};
        for (int j = 0; j < inst.n; ++j) {
          const auto expected = harness::observed_expectation(inst.arrival, t, t, j);
          const bool accepted = !policies::fluid_bayes_packing(inst, budgets, j, expected).action.is_reject();
          ++states;
          if (accepted != closed_form_accept(c.weights, c.denominator, j, b, t)) ++mismatches;
        }
      }
    }
  }
  o.require(mismatches == 0, "closed form mismatch");
  o.detail << states << " (instance, t, b, type) states, " << mismatches << " mismatches";
}

}  // namespace
}  // namespace prophet

int main(int argc, char** argv) {
  using namespace prophet;
  std::vector<int> known_shortfalls;
  CLI::App app{"acceptance criteria"};
  app.add_option("--known-shortfalls", known_shortfalls, "Criteria whose failure does not affect the exit status")
      ->delimiter(',');
  CLI11_PARSE(app, argc, argv);
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"coupling identity", coupling_identity},
      {"multi-secretary bound", multisecretary_bound},
      {"fluid gap", fluid_gap},
      {"packing-1 scaling", packing_scaling},
      {"matching-1 scaling", matching_scaling},
      {"tail lightness", tail_lightness},
      {"LP oracle equivalence", lp_oracles},
      {"ski rental formula", ski_rental_formula},
      {"bipartite counterexample", counterexample},
      {"multi-secretary closed form", secretary_closed_form},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome outcome;
    try {
      criteria[k].second(outcome);
    } catch (const std::exception& e) {
      outcome.require(false, std::string("exception: ") + e.what());
    }
    const bool known = std::ranges::find(known_shortfalls, static_cast<int>(k + 1)) != known_shortfalls.end();
    failures += outcome.pass || known ? 0 : 1;
    std::printf("criterion %2zu %-28s %s  %s%s\n", k + 1, criteria[k].first.c_str(), outcome.pass ? "PASS" : "FAIL",
                outcome.detail.str().c_str(),
                known ? (outcome.pass ? " (listed as a known shortfall but passed)" : " (known shortfall)") : "");
    std::fflush(stdout);
  }
  return failures;
}
