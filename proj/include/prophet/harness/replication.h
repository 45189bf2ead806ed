#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prophet/instance.h"
#include "prophet/policies/registry.h"

namespace prophet::harness {

struct RunOptions {
  int reps = 100;
  std::uint64_t seed = 1;
  policies::PolicyOptions policy;
  // Count periods with a positive ex-post LP compensation. Costs one
  // hindsight LP per period.
  bool count_disagreements = true;
  // 0 reads PROPHET_THREADS, then falls back to the hardware concurrency.
  int threads = 0;
};

struct ReplicationRecord {
  int rep = 0;
  std::uint64_t seed = 0;  // key of the replication's streams
  double v_off = 0.0;
  double v_on = 0.0;
  double regret = 0.0;
  int disagreements = 0;
  int forced_rejects = 0;
};

struct RegretReport {
  std::string instance;
  std::string policy;
  int k = 1;
  std::vector<ReplicationRecord> records;
  double mean_regret = 0.0;
  double stderr_regret = 0.0;
  double ci90_lo = 0.0;
  double ci90_hi = 0.0;

  std::vector<double> regrets() const;
};

inline constexpr double kZ90 = 1.6448536269514722;

int worker_count(int requested);

// One path of the instance's arrival model: `horizon` periods, or one per
// event for Poisson arrivals.
arrivals::SamplePath sample_arrivals(const AllocationInstance& instance, CounterRng& rng);

// Replication r draws its arrivals from make_stream(seed, r, kArrivals)
// and its coin flips from make_stream(seed, r, kPolicy), so every policy
// sees the same paths. Throws ConfigError for a bad policy or reps < 1.
RegretReport run_replications(const AllocationInstance& instance, const std::string& policy, const RunOptions& options,
                              int k = 1);

// Recomputes the aggregate fields from the records.
void aggregate(RegretReport& report);

struct TailSummary {
  double survival_at_twice_mean = 0.0;
  bool non_increasing = true;
  // Correlation of log Pr[Reg > x] with x over observed x above the mean.
  double log_survival_pearson = 0.0;
  int points = 0;
};

// Empirical Pr[Reg > x] at each threshold.
std::vector<double> tail_report(const RegretReport& report, const std::vector<double>& thresholds);

TailSummary tail_summary(const RegretReport& report);

}  // namespace prophet::harness
