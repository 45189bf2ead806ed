#include "prophet/harness/replication.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "prophet/harness/simulate.h"
#include "prophet/offline/coupling.h"
#include "prophet/offline/offline_value.h"
#include "prophet/statistics.h"

namespace prophet::harness {

std::vector<double> RegretReport::regrets() const {
  std::vector<double> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.regret);
  return out;
}

int worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PROPHET_THREADS")) {
    const int value = std::atoi(env);
    if (value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

arrivals::SamplePath sample_arrivals(const AllocationInstance& instance, CounterRng& rng) {
  if (instance.arrival.kind() == arrivals::ArrivalKind::kPoisson) {
    return arrivals::poisson_discretize(instance.arrival, rng).path;
  }
  return instance.arrival.sample_path(instance.horizon, rng);
}

namespace {

ReplicationRecord run_one(const AllocationInstance& instance, const policies::Policy& prototype,
                          const RunOptions& options, int rep) {
  CounterRng arrivals_rng = make_stream(options.seed, rep, Stream::kArrivals);
  CounterRng policy_rng = make_stream(options.seed, rep, Stream::kPolicy);
  const auto path = sample_arrivals(instance, arrivals_rng);
  auto policy = prototype.clone();
  const auto trace = simulate(instance, path, *policy, policy_rng);

  ReplicationRecord rec;
  rec.rep = rep;
  rec.seed = derive_key(options.seed, rep);
  rec.v_on = trace.total_reward;
  rec.v_off = offline::offline_lp_value(instance, path.tail_counts(path.horizon()), instance.budgets);
  rec.regret = rec.v_off - rec.v_on;
  rec.forced_rejects = trace.forced_rejects;
  if (options.count_disagreements) {
    const double tol = 1e-7 * std::max(1.0, instance.max_reward());
    for (double c : offline::lp_compensations(instance, path, trace)) rec.disagreements += c > tol ? 1 : 0;
  }
  return rec;
}

}  // namespace

void aggregate(RegretReport& report) {
  const auto values = report.regrets();
  report.mean_regret = mean(values);
  report.stderr_regret = standard_error(values);
  report.ci90_lo = report.mean_regret - kZ90 * report.stderr_regret;
  report.ci90_hi = report.mean_regret + kZ90 * report.stderr_regret;
}

RegretReport run_replications(const AllocationInstance& instance, const std::string& policy, const RunOptions& options,
                              int k) {
  if (options.reps < 1) throw ConfigError("reps must be at least 1");
  instance.validate();
  const auto prototype = policies::make_policy(policy, instance, options.policy);

  RegretReport report;
  report.instance = instance.name;
  report.policy = policy;
  report.k = k;
  report.records.resize(options.reps);

  const int workers = std::min(worker_count(options.threads), options.reps);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (int rep = next++; rep < options.reps; rep = next++) {
      try {
        report.records[rep] = run_one(instance, *prototype, options, rep);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = options.reps;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  aggregate(report);
  return report;
}

std::vector<double> tail_report(const RegretReport& report, const std::vector<double>& thresholds) {
  return survival(report.regrets(), thresholds);
}

TailSummary tail_summary(const RegretReport& report) {
  TailSummary out;
  const auto values = report.regrets();
  const double m = mean(values);
  const double twice[] = {2.0 * m};
  out.survival_at_twice_mean = survival(values, twice)[0];

  std::vector<double> support = values;
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  const auto surv = survival(values, support);
  for (std::size_t i = 1; i < surv.size(); ++i) out.non_increasing = out.non_increasing && surv[i] <= surv[i - 1];

  std::vector<double> xs, logs;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i] >= m && surv[i] > 0.0) {
      xs.push_back(support[i]);
      logs.push_back(std::log(surv[i]));
    }
  }
  out.points = static_cast<int>(xs.size());
  out.log_survival_pearson = pearson(xs, logs);
  return out;
}

}  // namespace prophet::harness
