#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "prophet/harness/catalog.h"
#include "prophet/harness/csv.h"
#include "prophet/harness/replication.h"
#include "prophet/harness/scaling.h"
#include "prophet/harness/simulate.h"
#include "prophet/offline/offline_value.h"
#include "prophet/policies/registry.h"
#include "prophet/statistics.h"

namespace prophet::harness {
namespace {

using arrivals::ArrivalModel;

RunOptions options(int reps, std::uint64_t seed = 1) {
  RunOptions o;
  o.reps = reps;
  o.seed = seed;
  o.threads = 1;
  return o;
}

TEST(Replications, AcceptAllIsOptimalWithAmpleBudget) {
  const auto inst = AllocationInstance::packing("one", {{1}}, {5}, {30}, 20, ArrivalModel::multinomial({1.0}));
  const auto report = run_replications(inst, "bayes", options(25));
  for (const auto& r : report.records) {
    EXPECT_EQ(r.regret, 0.0);
    EXPECT_EQ(r.v_on, 100.0);
    EXPECT_EQ(r.disagreements, 0);
  }
  EXPECT_EQ(report.mean_regret, 0.0);
  EXPECT_EQ(report.ci90_lo, report.ci90_hi);
}

// Expected regret of a policy by enumerating every arrival sequence.
double enumerated_regret(const AllocationInstance& inst, const std::string& policy_name) {
  const auto& p = inst.arrival.probabilities();
  const int n = inst.n, horizon = inst.horizon;
  int paths = 1;
  for (int t = 0; t < horizon; ++t) paths *= n;
  double total = 0.0;
  for (int code = 0; code < paths; ++code) {
    std::vector<int> types(horizon);
    double prob = 1.0;
    for (int k = 0, c = code; k < horizon; ++k, c /= n) {
      types[k] = c % n;
      prob *= p[types[k]];
    }
    const arrivals::SamplePath path(n, types);
    auto policy = policies::make_policy(policy_name, inst);
    CounterRng coin(0);
    const auto trace = simulate(inst, path, *policy, coin);
    total += prob * (offline::offline_lp_value(inst, path.tail_counts(horizon), inst.budgets) - trace.total_reward);
  }
  return total;
}

TEST(Replications, MatchesPathEnumeration) {
  // With T = 2, B = 1, r = (2, 1), p = (0.5, 0.5) the policy never errs.
  const auto easy = AllocationInstance::packing("ms", {{1, 1}}, {2, 1}, {1}, 2, ArrivalModel::multinomial({0.5, 0.5}));
  EXPECT_EQ(enumerated_regret(easy, "bayes"), 0.0);
  EXPECT_EQ(run_replications(easy, "bayes", options(200)).mean_regret, 0.0);
  // Skewed arrivals over a longer horizon leave a positive expected regret.
  const auto inst = AllocationInstance::packing("ms", {{1, 1}}, {2, 1}, {2}, 6, ArrivalModel::multinomial({0.2, 0.8}));
  const double exact = enumerated_regret(inst, "bayes");
  EXPECT_GT(exact, 0.0);
  const auto report = run_replications(inst, "bayes", options(4000, 9));
  EXPECT_NEAR(report.mean_regret, exact, 3 * report.stderr_regret);
}

TEST(Replications, RegretIsNonnegativeAndAccountedFor) {
  const auto inst = allocation_from_catalog("matching-1");
  for (const std::string policy : {"bayes", "rr", "sr", "marginal", "competitive"}) {
    const auto report = run_replications(inst, policy, options(30));
    for (const auto& r : report.records) {
      EXPECT_GE(r.regret, -1e-9) << policy;
      EXPECT_DOUBLE_EQ(r.regret, r.v_off - r.v_on);
    }
  }
}

TEST(Replications, CommonRandomNumbersAcrossPolicies) {
  const auto inst = allocation_from_catalog("packing-1");
  const auto a = run_replications(inst, "bayes", options(10, 42));
  const auto b = run_replications(inst, "sr", options(10, 42));
  for (std::size_t r = 0; r < 10; ++r) {
    EXPECT_EQ(a.records[r].seed, b.records[r].seed);
    EXPECT_EQ(a.records[r].v_off, b.records[r].v_off);
  }
}

TEST(Replications, ThreadCountDoesNotChangeResults) {
  const auto inst = allocation_from_catalog("packing-1");
  auto one = options(12, 5), three = options(12, 5);
  three.threads = 3;
  const auto a = run_replications(inst, "rr", one);
  const auto b = run_replications(inst, "rr", three);
  std::ostringstream sa, sb;
  write_replications(sa, {a});
  write_replications(sb, {b});
  EXPECT_EQ(sa.str(), sb.str());
  EXPECT_EQ(a.mean_regret, b.mean_regret);
}

TEST(Replications, PoissonArrivalsRun) {
  auto inst = allocation_from_catalog("packing-1");
  std::vector<std::vector<double>> rates;
  for (double p : inst.arrival.probabilities()) rates.push_back({p});
  inst.arrival = ArrivalModel::poisson(200, {}, rates);
  const auto report = run_replications(inst, "bayes", options(5));
  EXPECT_TRUE(std::isfinite(report.mean_regret));
}

TEST(Replications, ConfigurationErrors) {
  const auto packing = allocation_from_catalog("packing-1");
  EXPECT_THROW(run_replications(packing, "competitive", options(3)), ConfigError);
  EXPECT_THROW(run_replications(packing, "bayes", options(0)), ConfigError);
  EXPECT_THROW(run_replications(packing, "nope", options(3)), ConfigError);
}

TEST(Replications, WorkerCountFromEnvironment) {
  EXPECT_EQ(worker_count(4), 4);
  setenv("PROPHET_THREADS", "3", 1);
  EXPECT_EQ(worker_count(0), 3);
  setenv("PROPHET_THREADS", "junk", 1);
  EXPECT_GE(worker_count(0), 1);
  unsetenv("PROPHET_THREADS");
}

TEST(Tail, SurvivalBoundsAndMonotonicity) {
  RegretReport report;
  for (double v : {0.0, 1.0, 1.0, 2.0, 5.0}) report.records.push_back({0, 0, v, 0, v, 0, 0});
  aggregate(report);
  const auto s = tail_report(report, {-1.0, 0.0, 1.0, 4.9, 5.0, 10.0});
  EXPECT_EQ(s, (std::vector<double>{1.0, 0.8, 0.4, 0.2, 0.0, 0.0}));
  const auto summary = tail_summary(report);
  EXPECT_TRUE(summary.non_increasing);
  EXPECT_DOUBLE_EQ(summary.survival_at_twice_mean, 0.2);  // mean 1.8
}

TEST(Tail, MultiSecretaryEnsembleIsLight) {
  const auto inst = allocation_from_catalog("multisecretary-demo");
  auto opts = options(2000, 3);
  opts.count_disagreements = false;
  const auto report = run_replications(inst, "bayes", opts);
  const auto summary = tail_summary(report);
  EXPECT_LT(summary.survival_at_twice_mean, 0.25);
  EXPECT_TRUE(summary.non_increasing);
}

TEST(Scaling, RoundsHalfUp) {
  EXPECT_EQ(round_half_up(2.5), 3);
  EXPECT_EQ(round_half_up(2.4999), 2);
  const ScalingRule rule = ScalingRule::parse("k-plus-k07");
  EXPECT_EQ(rule.scaled_horizon(200, 8), static_cast<int>(std::floor(200 * (8 + std::pow(8, 0.7)) + 0.5)));
  EXPECT_EQ(rule.scaled_horizon(200, 1), 400);
  EXPECT_EQ(rule.scaled_budget(40, 8), 320);
  EXPECT_THROW(ScalingRule::parse("quadratic"), ConfigError);
  const auto inst = rule.apply(allocation_from_catalog("packing-1"), 2);
  EXPECT_EQ(inst.budgets, (std::vector<int>{80, 80}));
}

TEST(Scaling, LinearRuleAtOneIsTheBaseInstance) {
  const auto base = allocation_from_catalog("matching-1");
  const ScalingRule rule = ScalingRule::parse("linear");
  const auto sweep = scaling_sweep(base, rule, {1}, {"bayes"}, options(8, 11));
  const auto direct = run_replications(base, "bayes", options(8, 11));
  EXPECT_EQ(sweep.at("bayes", 1).mean_regret, direct.mean_regret);
  EXPECT_THROW(sweep.at("bayes", 2), UsageError);
}

TEST(Scaling, PoissonWindowStretches) {
  auto base = allocation_from_catalog("packing-1");
  base.arrival = ArrivalModel::poisson(200, {}, std::vector<std::vector<double>>(6, {0.1}));
  const auto scaled = ScalingRule::parse("linear").apply(base, 3);
  EXPECT_DOUBLE_EQ(scaled.arrival.poisson_horizon(), 600);
}

TEST(Scaling, SweepRejectsBadLists) {
  const auto base = allocation_from_catalog("packing-1");
  const ScalingRule rule;
  EXPECT_THROW(scaling_sweep(base, rule, {}, {"bayes"}, options(2)), ConfigError);
  EXPECT_THROW(scaling_sweep(base, rule, {0}, {"bayes"}, options(2)), ConfigError);
  EXPECT_THROW(scaling_sweep(base, rule, {1}, {}, options(2)), ConfigError);
}

TEST(Statistics, Basics) {
  const std::vector<double> v = {1, 2, 3, 4};
  EXPECT_EQ(pairwise_sum(v), 10.0);
  EXPECT_EQ(mean(v), 2.5);
  EXPECT_NEAR(standard_error(v), std::sqrt(5.0 / 3.0 / 4.0), 1e-15);
  EXPECT_EQ(standard_error(std::vector<double>{7}), 0.0);
  const std::vector<double> x = {1, 2, 4, 8}, y = {3, 3 * std::sqrt(2.0), 6, 6 * std::sqrt(2.0)};
  EXPECT_NEAR(loglog_slope(x, y), 0.5, 1e-12);
  EXPECT_TRUE(std::isnan(loglog_slope(x, std::vector<double>{1, 0, 1, 1})));
  EXPECT_NEAR(pearson(x, x), 1.0, 1e-12);
  EXPECT_TRUE(std::isnan(pearson(x, std::vector<double>{1, 1, 1, 1})));
}

TEST(Statistics, PairwiseSumIsAccurate) {
  std::vector<double> v(1 << 20, 0.1);
  EXPECT_NEAR(pairwise_sum(v), 0.1 * (1 << 20), 1e-6);
}

TEST(Csv, HeadersAndNumberFormat) {
  RegretReport report;
  report.instance = "x";
  report.policy = "bayes";
  report.k = 2;
  report.records.push_back({0, 99, 10.0, 9.5, 0.5, 1, 0});
  report.records.push_back({1, 100, 1.0 / 3.0, 0.0, 1.0 / 3.0, 2, 1});
  aggregate(report);
  std::ostringstream reps, agg;
  write_replications(reps, {report});
  write_aggregate(agg, {report}, {{"bayes", 0.25}});
  EXPECT_EQ(reps.str(),
            "instance,policy,k,rep,seed,v_off,v_on,regret,disagreements,forced_rejects\n"
            "x,bayes,2,0,99,10,9.5,0.5,1,0\n"
            "x,bayes,2,1,100,0.3333333333,0,0.3333333333,2,1\n");
  EXPECT_EQ(agg.str().substr(0, agg.str().find('\n')), kAggregateHeader);
  EXPECT_NE(agg.str().find(",0.25\n"), std::string::npos);
}

TEST(Csv, AtomicWriteLeavesNoTemporary) {
  const auto path = std::filesystem::temp_directory_path() / "prophet_csv_test.csv";
  write_file_atomically(path, "a,b\n");
  EXPECT_TRUE(std::filesystem::exists(path));
  EXPECT_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove(path);
  EXPECT_THROW(write_file_atomically("/nonexistent-dir/x.csv", "a"), std::runtime_error);
}

}  // namespace
}  // namespace prophet::harness
