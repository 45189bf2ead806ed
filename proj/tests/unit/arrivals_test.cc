#include <gtest/gtest.h>

#include <cmath>

#include "prophet/arrivals/model.h"
#include "prophet/statistics.h"

namespace prophet::arrivals {
namespace {

using Matrix = std::vector<std::vector<double>>;

// Row `from` of P + P^2 + ... + P^t by explicit matrix powers.
std::vector<double> power_sum_row(const Matrix& p, int from, int t) {
  const std::size_t n = p.size();
  std::vector<double> row(n, 0.0), power(n, 0.0), total(n, 0.0);
  power[from] = 1.0;
  for (int s = 0; s < t; ++s) {
    std::fill(row.begin(), row.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) row[j] += power[i] * p[i][j];
    }
    power = row;
    for (std::size_t j = 0; j < n; ++j) total[j] += power[j];
  }
  return total;
}

TEST(ArrivalModel, SingleTypePathIsConstant) {
  const auto model = ArrivalModel::multinomial({1.0});
  CounterRng rng(3);
  const auto path = model.sample_path(25, rng);
  for (int t = 1; t <= 25; ++t) EXPECT_EQ(path.type_at(t), 0);
  EXPECT_EQ(path.tail_counts(25)[0], 25);
}

TEST(ArrivalModel, LawOfLargeNumbersAcrossSeeds) {
  const auto model = ArrivalModel::multinomial({0.5, 0.5});
  double total_error = 0.0;
  for (int seed = 0; seed < 50; ++seed) {
    CounterRng rng = make_stream(11, seed, Stream::kArrivals);
    const auto path = model.sample_path(100000, rng);
    total_error += std::abs(path.tail_counts(100000)[0] / 1e5 - 0.5);
  }
  EXPECT_LT(total_error / 50, 0.01);
}

TEST(ArrivalModel, DeterministicChainAlternates) {
  const auto model = ArrivalModel::markov({{0, 1}, {1, 0}}, {1, 0});
  CounterRng rng(5);
  const auto path = model.sample_path(9, rng);
  for (int k = 0; k < 9; ++k) EXPECT_EQ(path.types()[k], k % 2);
}

TEST(ArrivalModel, MultinomialExpectation) {
  const auto model = ArrivalModel::multinomial({0.2, 0.2, 0.2, 0.2, 0.1, 0.1});
  const auto e = model.expected_remaining(200);
  const std::vector<double> want = {40, 40, 40, 40, 20, 20};
  for (int j = 0; j < 6; ++j) EXPECT_NEAR(e[j], want[j], 1e-12);
  for (double v : model.expected_remaining(0)) EXPECT_EQ(v, 0.0);
}

TEST(ArrivalModel, MarkovExpectationNeedsConditioning) {
  const auto uniform = ArrivalModel::markov({{0.5, 0.5}, {0.5, 0.5}}, {0.5, 0.5});
  for (int prev = 0; prev < 2; ++prev) {
    const auto e = uniform.expected_remaining(4, prev);
    EXPECT_NEAR(e[0], 2.0, 1e-12);
    EXPECT_NEAR(e[1], 2.0, 1e-12);
  }
  EXPECT_THROW(uniform.expected_remaining(4), UsageError);
  EXPECT_THROW(uniform.expected_remaining(4, 2), UsageError);
}

TEST(ArrivalModel, MarkovExpectationMatchesMatrixPowers) {
  const Matrix p = {{0.7, 0.2, 0.1}, {0.3, 0.3, 0.4}, {0.05, 0.15, 0.8}};
  const auto model = ArrivalModel::markov(p, {1.0 / 3, 1.0 / 3, 1.0 / 3});
  for (int prev = 0; prev < 3; ++prev) {
    for (int t : {1, 2, 7, 40, 3}) {
      const auto want = power_sum_row(p, prev, t);
      const auto got = model.expected_remaining(t, prev);
      for (int j = 0; j < 3; ++j) EXPECT_NEAR(got[j], want[j], 1e-10) << "t=" << t << " prev=" << prev;
    }
  }
}

TEST(ArrivalModel, PoissonExpectationIntegratesPiecewiseRates) {
  // Rate 2 near the deadline (s < 50), 1 before it.
  const auto model = ArrivalModel::poisson(100, {50}, {{2, 1}});
  EXPECT_NEAR(model.expected_remaining(75)[0], 2 * 50 + 25, 1e-12);
  EXPECT_NEAR(model.expected_remaining(10)[0], 20, 1e-12);
  EXPECT_NEAR(model.expected_total(0)[0], 150, 1e-12);
}

TEST(ArrivalModel, InvalidParametersAreConfigErrors) {
  EXPECT_THROW(ArrivalModel::multinomial({0.5, 0.4}), ConfigError);
  EXPECT_THROW(ArrivalModel::multinomial({1.0, 0.0}), ConfigError);
  EXPECT_THROW(ArrivalModel::multinomial({}), ConfigError);
  EXPECT_THROW(ArrivalModel::markov({{0.5, 0.6}, {0.5, 0.5}}, {1, 0}), ConfigError);
  EXPECT_THROW(ArrivalModel::markov({{1.0}}, {0.5, 0.5}), ConfigError);
  EXPECT_THROW(ArrivalModel::poisson(10, {}, {{-1}}), ConfigError);
  EXPECT_THROW(ArrivalModel::poisson(10, {12}, {{1, 1}}), ConfigError);
  EXPECT_THROW(ArrivalModel::poisson(10, {5}, {{1}}), ConfigError);
}

TEST(ArrivalModel, TailCountsStepByTheArrivingType) {
  const auto model = ArrivalModel::multinomial({0.3, 0.3, 0.4});
  CounterRng rng(77);
  const auto path = model.sample_path(60, rng);
  for (int t = 1; t <= 60; ++t) {
    const auto now = path.tail_counts(t), before = path.tail_counts(t - 1);
    for (int j = 0; j < 3; ++j) EXPECT_EQ(now[j] - before[j], j == path.type_at(t) ? 1 : 0);
  }
  for (int v : path.tail_counts(0)) EXPECT_EQ(v, 0);
}

TEST(ArrivalModel, SameSeedSamePath) {
  const auto model = ArrivalModel::markov({{0.9, 0.1}, {0.2, 0.8}}, {0.5, 0.5});
  CounterRng a = make_stream(9, 4, Stream::kArrivals), b = make_stream(9, 4, Stream::kArrivals);
  EXPECT_EQ(model.sample_path(300, a).types(), model.sample_path(300, b).types());
  CounterRng c = make_stream(9, 5, Stream::kArrivals);
  CounterRng d = make_stream(9, 4, Stream::kArrivals);
  EXPECT_NE(model.sample_path(300, c).types(), model.sample_path(300, d).types());
}

// Empirical mean of Z(t) over 10^4 paths within 3 standard errors.
void expect_mean_matches(const ArrivalModel& model, int horizon, int t) {
  const int paths = 10000;
  const int n = model.num_types();
  std::vector<std::vector<double>> samples(n, std::vector<double>(paths));
  for (int r = 0; r < paths; ++r) {
    CounterRng rng = make_stream(123, r, Stream::kArrivals);
    const auto path = model.sample_path(horizon, rng);
    for (int j = 0; j < n; ++j) samples[j][r] = path.tail_counts(t)[j];
  }
  const auto expected = model.expected_tail(horizon, t);
  for (int j = 0; j < n; ++j) {
    EXPECT_NEAR(mean(samples[j]), expected[j], 3 * standard_error(samples[j]) + 1e-12) << "type " << j;
  }
}

TEST(ArrivalModel, EmpiricalMeansMatchExpectations) {
  expect_mean_matches(ArrivalModel::multinomial({0.1, 0.6, 0.3}), 40, 17);
  expect_mean_matches(ArrivalModel::markov({{0.6, 0.4}, {0.1, 0.9}}, {1.0, 0.0}), 30, 12);
}

TEST(PoissonDiscretize, ConstantRateEventCount) {
  const auto model = ArrivalModel::poisson(100, {}, {{2}});
  std::vector<double> counts;
  for (int r = 0; r < 1000; ++r) {
    CounterRng rng = make_stream(1, r, Stream::kArrivals);
    counts.push_back(poisson_discretize(model, rng).path.horizon());
  }
  EXPECT_LT(std::abs(mean(counts) - 200.0) / 200.0, 0.05);
}

TEST(PoissonDiscretize, EventsCarryDecreasingClocks) {
  const auto model = ArrivalModel::poisson(50, {20}, {{1, 0.5}, {0.3, 0.3}});
  CounterRng rng(8);
  const auto sample = poisson_discretize(model, rng);
  const auto& path = sample.path;
  ASSERT_EQ(sample.event_times.size(), static_cast<std::size_t>(path.horizon()));
  for (int t = path.horizon(); t >= 1; --t) {
    EXPECT_EQ(path.clock_at(t), sample.event_times[path.horizon() - t]);
    if (t > 1) {
      EXPECT_GT(path.clock_at(t), path.clock_at(t - 1));
    }
    EXPECT_GT(path.clock_at(t), 0.0);
    EXPECT_LE(path.clock_at(t), 50.0);
  }
}

TEST(PoissonDiscretize, ZeroRatePieceHasNoEvents) {
  // Nothing arrives with more than 50 time units to go.
  const auto model = ArrivalModel::poisson(100, {50}, {{1, 0}});
  for (int r = 0; r < 200; ++r) {
    CounterRng rng = make_stream(2, r, Stream::kArrivals);
    for (double s : poisson_discretize(model, rng).event_times) EXPECT_LE(s, 50.0);
  }
}

TEST(PoissonDiscretize, DensityRisesNearTheDeadline) {
  const auto model = ArrivalModel::poisson(100, {50}, {{2, 1}});
  double early = 0, late = 0;
  for (int r = 0; r < 500; ++r) {
    CounterRng rng = make_stream(3, r, Stream::kArrivals);
    for (double s : poisson_discretize(model, rng).event_times) (s < 50 ? late : early) += 1;
  }
  EXPECT_NEAR(late / early, 2.0, 0.1);
}

TEST(PoissonDiscretize, TypeCountsAreUncorrelated) {
  const auto model = ArrivalModel::poisson(20, {}, {{1.5}, {0.7}});
  std::vector<double> a, b;
  for (int r = 0; r < 10000; ++r) {
    CounterRng rng = make_stream(4, r, Stream::kArrivals);
    const auto path = poisson_discretize(model, rng).path;
    a.push_back(path.tail_counts(path.horizon())[0]);
    b.push_back(path.tail_counts(path.horizon())[1]);
  }
  EXPECT_LT(std::abs(pearson(a, b)), 0.05);
  EXPECT_NEAR(mean(a), 30.0, 3 * standard_error(a));
}

TEST(PoissonDiscretize, RejectsOtherModels) {
  CounterRng rng(1);
  EXPECT_THROW(poisson_discretize(ArrivalModel::multinomial({1.0}), rng), UsageError);
}

TEST(DeviationProbe, MultinomialStaysBelowTheExponentialEnvelope) {
  const auto model = ArrivalModel::multinomial({0.5, 0.5});
  const std::vector<double> kappa = {1, 1};
  const auto freq = all_time_deviation_probe(model, 400, kappa, 2000, DeviationNorm::kOne, 17);
  ASSERT_EQ(freq.size(), 400u);
  const double envelope = std::exp(-400 * 0.25 * 0.25 / 25);
  EXPECT_LE(freq[399][0], envelope);
  EXPECT_LE(freq[399][1], envelope);
  // A single arrival always deviates by a full unit.
  EXPECT_EQ(freq[0][0], 1.0);
}

TEST(DeviationProbe, LazyChainFrequenciesDecay) {
  const auto model = ArrivalModel::markov({{0.8, 0.2}, {0.2, 0.8}}, {0.5, 0.5});
  const std::vector<double> kappa = {1, 1};
  const auto freq = all_time_deviation_probe(model, 300, kappa, 500, DeviationNorm::kInfinity, 5);
  EXPECT_GT(freq[4][0], freq[299][0]);
  EXPECT_LT(freq[299][0], 0.05);
}

TEST(DeviationProbe, NeedsEnoughTrials) {
  const auto model = ArrivalModel::multinomial({1.0});
  const std::vector<double> kappa = {1};
  EXPECT_THROW(all_time_deviation_probe(model, 10, kappa, 99, DeviationNorm::kOne, 1), ConfigError);
}

}  // namespace
}  // namespace prophet::arrivals
