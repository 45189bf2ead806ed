#pragma once

#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "prophet/common.h"

namespace prophet::arrivals {

// Types observed in one run, ordered by period. Period k (0-based) has
// time-to-go T - k, so the last period has time-to-go 1.
class SamplePath {
 public:
  SamplePath() = default;
  SamplePath(int num_types, std::vector<int> types, std::vector<double> clocks = {});

  int horizon() const { return static_cast<int>(types_.size()); }
  int num_types() const { return num_types_; }

  // Arrival type at time-to-go t, 1 <= t <= horizon().
  int type_at(int t) const { return types_[horizon() - t]; }
  // Continuous time-to-go of the arrival at t (Poisson paths); t otherwise.
  double clock_at(int t) const { return clocks_.empty() ? t : clocks_[horizon() - t]; }

  // Z(t): counts of the last t arrivals, 0 <= t <= horizon().
  std::span<const int> tail_counts(int t) const {
    return {tail_.data() + static_cast<std::size_t>(t) * num_types_, static_cast<std::size_t>(num_types_)};
  }

  const std::vector<int>& types() const { return types_; }
  const std::vector<double>& clocks() const { return clocks_; }

 private:
  int num_types_ = 0;
  std::vector<int> types_;
  std::vector<double> clocks_;
  std::vector<int> tail_;  // (horizon + 1) x num_types, row t is Z(t)
};

enum class ArrivalKind { kMultinomial, kPoisson, kMarkov };

const char* to_string(ArrivalKind kind);

// Immutable after construction. Copies share the lazily built Markov cache.
class ArrivalModel {
 public:
  ArrivalModel() = default;

  // Throws ConfigError unless p is a probability vector with p_j > 0.
  static ArrivalModel multinomial(std::vector<double> p);

  // Piecewise-constant rates over continuous time-to-go s in [0, horizon].
  // `breakpoints` are the interior piece boundaries in increasing order and
  // rates[j][k] is the rate of type j on piece k, piece 0 ending at s = 0.
  static ArrivalModel poisson(double horizon, std::vector<double> breakpoints,
                              std::vector<std::vector<double>> rates);

  static ArrivalModel markov(std::vector<std::vector<double>> transition, std::vector<double> initial);

  ArrivalKind kind() const { return kind_; }
  int num_types() const { return num_types_; }

  const std::vector<double>& probabilities() const { return p_; }
  double poisson_horizon() const { return horizon_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<std::vector<double>>& rates() const { return rates_; }
  const std::vector<std::vector<double>>& transition() const { return transition_; }
  const std::vector<double>& initial() const { return initial_; }

  // Poisson model with time stretched by `factor` (same rates, longer window).
  ArrivalModel stretched(double factor) const;

  // E[Z(t)] at time-to-go t. Multinomial: t * p. Poisson: the rate
  // integral over [0, t] with t a continuous clock. Markov: the expected
  // counts of the next t arrivals given that the previous one had type
  // `previous`, i.e. row `previous` of P + P^2 + ... + P^t; throws
  // UsageError when `previous` is missing.
  std::vector<double> expected_remaining(double t, std::optional<int> previous = std::nullopt) const;

  // Unconditional E[Z(horizon)] for a path of `horizon` periods (Poisson:
  // the full window, ignoring `horizon`).
  std::vector<double> expected_total(int horizon) const;

  // Unconditional E[Z(t)] inside a path of `horizon` periods.
  std::vector<double> expected_tail(int horizon, int t) const;

  // Draws a path. Poisson ignores `horizon` and produces one period per
  // event in its window.
  SamplePath sample_path(int horizon, CounterRng& rng) const;

  // Draws the type counts of the next t arrivals given the previous type
  // (Markov) or unconditionally.
  // For Poisson t is a continuous clock.
  std::vector<int> sample_future_counts(double t, std::optional<int> previous, CounterRng& rng) const;

  // Draws one type from a distribution.
  static int draw(std::span<const double> distribution, CounterRng& rng);

 private:
  void validate_markov() const;
  std::vector<double> markov_prefix_row(int t, int previous) const;

  ArrivalKind kind_ = ArrivalKind::kMultinomial;
  int num_types_ = 0;
  std::vector<double> p_;
  double horizon_ = 0.0;
  std::vector<double> breakpoints_;
  std::vector<std::vector<double>> rates_;
  std::vector<std::vector<double>> transition_;
  std::vector<double> initial_;

  struct MarkovCache {
    std::mutex mutex;
    // prefix[t] is the n x n matrix P + ... + P^t flattened per row;
    // power is P^t for the last computed t.
    std::deque<std::vector<std::vector<double>>> prefix;
    std::vector<std::vector<double>> power;
  };
  std::shared_ptr<MarkovCache> cache_;
};

struct PoissonSample {
  SamplePath path;
  std::vector<double> event_times;  // decreasing time-to-go
};

// One discrete period per Poisson event, each carrying its continuous
// time-to-go so expected_remaining can integrate the rates up to it.
PoissonSample poisson_discretize(const ArrivalModel& model, CounterRng& rng);

enum class DeviationNorm { kOne, kInfinity };

// For t = 1..horizon (row t-1) and each type j, the fraction of `trials`
// paths with ||Z(t) - E[Z(t)]|| >= E[Z_j(t)] / (2 kappa_j).
std::vector<std::vector<double>> all_time_deviation_probe(const ArrivalModel& model, int horizon,
                                                          std::span<const double> kappa, int trials,
                                                          DeviationNorm norm, std::uint64_t seed);

}  // namespace prophet::arrivals
