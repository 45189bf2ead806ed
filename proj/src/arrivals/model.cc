#include "prophet/arrivals/model.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace prophet::arrivals {
namespace {

constexpr double kStochasticTolerance = 1e-9;

void check_distribution(std::span<const double> p, const char* what, bool strictly_positive) {
  if (p.empty()) throw ConfigError(std::string(what) + " must be nonempty");
  double sum = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < 0.0 || (strictly_positive && v == 0.0)) {
      throw ConfigError(std::string(what) + (strictly_positive ? " entries must be positive" : " entries must be nonnegative"));
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kStochasticTolerance * 1e3) throw ConfigError(std::string(what) + " must sum to 1");
}

}  // namespace

SamplePath::SamplePath(int num_types, std::vector<int> types, std::vector<double> clocks)
    : num_types_(num_types), types_(std::move(types)), clocks_(std::move(clocks)) {
  if (!clocks_.empty() && clocks_.size() != types_.size()) throw ConfigError("clock count must match type count");
  const int horizon = static_cast<int>(types_.size());
  tail_.assign(static_cast<std::size_t>(horizon + 1) * num_types_, 0);
  for (int t = 1; t <= horizon; ++t) {
    const int j = types_[horizon - t];
    if (j < 0 || j >= num_types_) throw ConfigError("arrival type out of range");
    std::copy_n(tail_.begin() + static_cast<std::ptrdiff_t>(t - 1) * num_types_, num_types_,
                tail_.begin() + static_cast<std::ptrdiff_t>(t) * num_types_);
    ++tail_[static_cast<std::size_t>(t) * num_types_ + j];
  }
}

const char* to_string(ArrivalKind kind) {
  switch (kind) {
    case ArrivalKind::kMultinomial:
      return "multinomial";
    case ArrivalKind::kPoisson:
      return "poisson";
    case ArrivalKind::kMarkov:
      return "markov";
  }
  return "unknown";
}

ArrivalModel ArrivalModel::multinomial(std::vector<double> p) {
  check_distribution(p, "multinomial p", true);
  ArrivalModel m;
  m.kind_ = ArrivalKind::kMultinomial;
  m.num_types_ = static_cast<int>(p.size());
  m.p_ = std::move(p);
  return m;
}

ArrivalModel ArrivalModel::poisson(double horizon, std::vector<double> breakpoints,
                                   std::vector<std::vector<double>> rates) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) throw ConfigError("poisson horizon must be positive");
  if (rates.empty()) throw ConfigError("poisson rates must be nonempty");
  for (std::size_t k = 0; k < breakpoints.size(); ++k) {
    if (!(breakpoints[k] > (k == 0 ? 0.0 : breakpoints[k - 1])) || breakpoints[k] >= horizon) {
      throw ConfigError("poisson breakpoints must increase strictly inside (0, horizon)");
    }
  }
  for (const auto& row : rates) {
    if (row.size() != breakpoints.size() + 1) throw ConfigError("poisson rates need one value per piece");
    for (double v : row) {
      if (!std::isfinite(v) || v < 0.0) throw ConfigError("poisson rates must be nonnegative");
    }
  }
  ArrivalModel m;
  m.kind_ = ArrivalKind::kPoisson;
  m.num_types_ = static_cast<int>(rates.size());
  m.horizon_ = horizon;
  m.breakpoints_ = std::move(breakpoints);
  m.rates_ = std::move(rates);
  return m;
}

ArrivalModel ArrivalModel::markov(std::vector<std::vector<double>> transition, std::vector<double> initial) {
  ArrivalModel m;
  m.kind_ = ArrivalKind::kMarkov;
  m.num_types_ = static_cast<int>(transition.size());
  m.transition_ = std::move(transition);
  m.initial_ = std::move(initial);
  m.validate_markov();
  m.cache_ = std::make_shared<MarkovCache>();
  return m;
}

void ArrivalModel::validate_markov() const {
  if (num_types_ == 0) throw ConfigError("markov transition must be nonempty");
  for (const auto& row : transition_) {
    if (static_cast<int>(row.size()) != num_types_) throw ConfigError("markov transition must be square");
    check_distribution(row, "markov transition row", false);
  }
  if (static_cast<int>(initial_.size()) != num_types_) throw ConfigError("markov initial has wrong length");
  check_distribution(initial_, "markov initial", false);
}

ArrivalModel ArrivalModel::stretched(double factor) const {
  if (kind_ != ArrivalKind::kPoisson) throw UsageError("only Poisson models can be stretched");
  std::vector<double> bp = breakpoints_;
  for (double& b : bp) b *= factor;
  return poisson(horizon_ * factor, std::move(bp), rates_);
}

std::vector<double> ArrivalModel::markov_prefix_row(int t, int previous) const {
  std::lock_guard lock(cache_->mutex);
  auto& prefix = cache_->prefix;
  auto& power = cache_->power;
  const int n = num_types_;
  if (prefix.empty()) {
    prefix.emplace_back(n, std::vector<double>(n, 0.0));
    power.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) power[i][i] = 1.0;
  }
  while (static_cast<int>(prefix.size()) <= t) {
    std::vector<std::vector<double>> next(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        if (power[i][k] == 0.0) continue;
        for (int j = 0; j < n; ++j) next[i][j] += power[i][k] * transition_[k][j];
      }
    }
    power = next;
    auto sum = prefix.back();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) sum[i][j] += power[i][j];
    }
    prefix.push_back(std::move(sum));
  }
  return prefix[t][previous];
}

std::vector<double> ArrivalModel::expected_remaining(double t, std::optional<int> previous) const {
  if (t < 0.0) throw UsageError("time-to-go must be nonnegative");
  std::vector<double> out(num_types_, 0.0);
  switch (kind_) {
    case ArrivalKind::kMultinomial:
      for (int j = 0; j < num_types_; ++j) out[j] = t * p_[j];
      return out;
    case ArrivalKind::kPoisson: {
      const double s = std::min(t, horizon_);
      double lo = 0.0;
      for (std::size_t k = 0; k <= breakpoints_.size() && lo < s; ++k) {
        const double hi = std::min(s, k < breakpoints_.size() ? breakpoints_[k] : horizon_);
        for (int j = 0; j < num_types_; ++j) out[j] += rates_[j][k] * (hi - lo);
        lo = hi;
      }
      return out;
    }
    case ArrivalKind::kMarkov: {
      if (!previous) throw UsageError("markov expectation needs the previous arrival type");
      if (*previous < 0 || *previous >= num_types_) throw UsageError("conditioning type out of range");
      return markov_prefix_row(static_cast<int>(std::lround(t)), *previous);
    }
  }
  return out;
}

std::vector<double> ArrivalModel::expected_tail(int horizon, int t) const {
  if (t < 0 || t > horizon) throw UsageError("time-to-go outside the horizon");
  switch (kind_) {
    case ArrivalKind::kMultinomial:
      return expected_remaining(t);
    case ArrivalKind::kPoisson:
      return expected_remaining(std::min<double>(t, horizon_));
    case ArrivalKind::kMarkov: {
      // Distribution of the first type is `initial`; the tail of length t
      // starts at forward step horizon - t.
      std::vector<double> dist = initial_;
      std::vector<double> out(num_types_, 0.0);
      for (int step = 0; step < horizon; ++step) {
        if (step >= horizon - t) {
          for (int j = 0; j < num_types_; ++j) out[j] += dist[j];
        }
        std::vector<double> next(num_types_, 0.0);
        for (int i = 0; i < num_types_; ++i) {
          for (int j = 0; j < num_types_; ++j) next[j] += dist[i] * transition_[i][j];
        }
        dist = std::move(next);
      }
      return out;
    }
  }
  return {};
}

std::vector<double> ArrivalModel::expected_total(int horizon) const {
  if (kind_ == ArrivalKind::kPoisson) return expected_remaining(horizon_);
  return expected_tail(horizon, horizon);
}

int ArrivalModel::draw(std::span<const double> distribution, CounterRng& rng) {
  const double u = rng.uniform();
  double acc = 0.0;
  int last_positive = 0;
  for (std::size_t j = 0; j < distribution.size(); ++j) {
    if (distribution[j] <= 0.0) continue;
    acc += distribution[j];
    last_positive = static_cast<int>(j);
    if (u < acc) return last_positive;
  }
  return last_positive;
}

SamplePath ArrivalModel::sample_path(int horizon, CounterRng& rng) const {
  switch (kind_) {
    case ArrivalKind::kMultinomial: {
      if (horizon < 0) throw ConfigError("horizon must be nonnegative");
      std::vector<int> types(horizon);
      for (int& j : types) j = draw(p_, rng);
      return SamplePath(num_types_, std::move(types));
    }
    case ArrivalKind::kMarkov: {
      if (horizon < 0) throw ConfigError("horizon must be nonnegative");
      if (horizon == 0) return SamplePath(num_types_, {});
      std::vector<int> types(horizon);
      types[0] = draw(initial_, rng);
      for (int k = 1; k < horizon; ++k) types[k] = draw(transition_[types[k - 1]], rng);
      return SamplePath(num_types_, std::move(types));
    }
    case ArrivalKind::kPoisson:
      return poisson_discretize(*this, rng).path;
  }
  return {};
}

std::vector<int> ArrivalModel::sample_future_counts(double t, std::optional<int> previous, CounterRng& rng) const {
  std::vector<int> counts(num_types_, 0);
  switch (kind_) {
    case ArrivalKind::kMultinomial: {
      const int steps = static_cast<int>(std::lround(t));
      for (int k = 0; k < steps; ++k) ++counts[draw(p_, rng)];
      return counts;
    }
    case ArrivalKind::kMarkov: {
      if (!previous) throw UsageError("markov sampling needs the previous arrival type");
      const int steps = static_cast<int>(std::lround(t));
      int state = *previous;
      for (int k = 0; k < steps; ++k) {
        state = draw(transition_[state], rng);
        ++counts[state];
      }
      return counts;
    }
    case ArrivalKind::kPoisson: {
      const auto mean = expected_remaining(t);
      for (int j = 0; j < num_types_; ++j) {
        if (mean[j] > 0.0) counts[j] = std::poisson_distribution<int>(mean[j])(rng);
      }
      return counts;
    }
  }
  return counts;
}

PoissonSample poisson_discretize(const ArrivalModel& model, CounterRng& rng) {
  if (model.kind() != ArrivalKind::kPoisson) throw UsageError("poisson_discretize needs a Poisson model");
  struct Event {
    double clock;
    int type;
  };
  std::vector<Event> events;
  const auto& bp = model.breakpoints();
  for (int j = 0; j < model.num_types(); ++j) {
    double lo = 0.0;
    for (std::size_t k = 0; k <= bp.size(); ++k) {
      const double hi = k < bp.size() ? bp[k] : model.poisson_horizon();
      const double mean = model.rates()[j][k] * (hi - lo);
      if (mean > 0.0) {
        const int count = std::poisson_distribution<int>(mean)(rng);
        for (int e = 0; e < count; ++e) events.push_back({lo + (hi - lo) * rng.uniform(), j});
      }
      lo = hi;
    }
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    return a.clock != b.clock ? a.clock > b.clock : a.type < b.type;
  });
  PoissonSample out;
  std::vector<int> types;
  types.reserve(events.size());
  for (const auto& e : events) {
    types.push_back(e.type);
    out.event_times.push_back(e.clock);
  }
  out.path = SamplePath(model.num_types(), std::move(types), out.event_times);
  return out;
}

std::vector<std::vector<double>> all_time_deviation_probe(const ArrivalModel& model, int horizon,
                                                          std::span<const double> kappa, int trials,
                                                          DeviationNorm norm, std::uint64_t seed) {
  const int n = model.num_types();
  if (trials < 100) throw ConfigError("deviation probe needs at least 100 trials");
  if (static_cast<int>(kappa.size()) != n) throw ConfigError("kappa needs one entry per type");
  std::vector<std::vector<double>> expected(horizon + 1);
  for (int t = 0; t <= horizon; ++t) expected[t] = model.expected_tail(horizon, t);

  std::vector<std::vector<double>> freq(horizon, std::vector<double>(n, 0.0));
  std::vector<int> z(n);
  for (int trial = 0; trial < trials; ++trial) {
    auto rng = make_stream(seed, static_cast<std::uint64_t>(trial), Stream::kArrivals);
    const SamplePath path = model.sample_path(horizon, rng);
    for (int t = 1; t <= horizon; ++t) {
      if (model.kind() == ArrivalKind::kPoisson) {
        std::fill(z.begin(), z.end(), 0);
        for (int k = 0; k < path.horizon(); ++k) {
          if (path.clocks()[k] <= t) ++z[path.types()[k]];
        }
      } else {
        const auto tail = path.tail_counts(t);
        std::copy(tail.begin(), tail.end(), z.begin());
      }
      double dev = 0.0;
      for (int j = 0; j < n; ++j) {
        const double diff = std::abs(z[j] - expected[t][j]);
        dev = norm == DeviationNorm::kOne ? dev + diff : std::max(dev, diff);
      }
      for (int j = 0; j < n; ++j) {
        if (dev >= expected[t][j] / (2.0 * kappa[j])) freq[t - 1][j] += 1.0;
      }
    }
  }
  for (auto& row : freq) {
    for (double& v : row) v /= trials;
  }
  return freq;
}

}  // namespace prophet::arrivals
