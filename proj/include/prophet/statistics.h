#pragma once

#include <span>
#include <vector>

namespace prophet {

// Pairwise summation; the result does not depend on how work was split.
double pairwise_sum(std::span<const double> values);

double mean(std::span<const double> values);

// Standard error of the mean with the n - 1 sample deviation; 0 for n < 2.
double standard_error(std::span<const double> values);

// Least-squares slope of log(y) against log(x); NaN if any y <= 0 or
// fewer than two points.
double loglog_slope(std::span<const double> x, std::span<const double> y);

// Pearson correlation; NaN when either side is constant.
double pearson(std::span<const double> x, std::span<const double> y);

// Empirical Pr[value > x] for each threshold.
std::vector<double> survival(std::span<const double> values, std::span<const double> thresholds);

}  // namespace prophet
