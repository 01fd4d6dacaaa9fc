#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "judgekit/rating.hpp"

namespace judgekit::metrics {

// One benchmark item: the judge's score vs. the human label.
struct ScoredPair {
  int predicted = 0;
  int labeled = 0;
  std::string scenario;
};

// Soft-agreement parameters: window p (strict upper bound on |error|) and
// decay exponent q. p=1, q=0 degenerates to exact-match accuracy.
struct AgrParams {
  int p = 2;
  double q = 2.0;

  std::string label() const;  // e.g. "agr_2_2", "agr_1_0"
  bool operator==(const AgrParams&) const = default;
};

// Identifies a metric for baseline / normalization purposes.
struct MetricId {
  bool is_mae = false;
  AgrParams agr;  // ignored when is_mae

  static MetricId mae() { return {true, {}}; }
  static MetricId agreement(AgrParams p) { return {false, p}; }
};

// Per-pair agreement kernel: 1/(|d|+1)^q when |d| < p, else 0.
double agr_kernel(int predicted, int labeled, const AgrParams& params);

// Mean absolute error over pairs. EmptyInput on an empty span.
double mae(const std::vector<ScoredPair>& pairs);

// Mean agreement kernel over pairs. EmptyInput on an empty span.
double agr(const std::vector<ScoredPair>& pairs, const AgrParams& params);

// Count-weighted mean of per-group values; rows are (count, value).
// EmptyInput when rows are empty or total count is zero.
double weighted_overall(const std::vector<std::pair<std::int64_t, double>>& rows);

// Z-scores of the given values against their own sample mean and sample
// (n-1) standard deviation. The overall value takes part in the population
// alongside the per-scenario values. TooFewValues below 2 values; a zero
// standard deviation maps every z to 0.
std::vector<double> z_values(const std::vector<double>& values);

// Pearson correlation. LengthMismatch, TooFewValues (<2), ZeroVariance.
double pearson(const std::vector<double>& xs, const std::vector<double>& ys);

// Expected metric value of a judge that scores uniformly at random, against
// labels drawn from `label_hist` (one probability per score, min..max;
// must sum to 1 — InvalidHistogram). Pass an empty histogram for uniform
// labels.
double random_baseline(const MetricId& metric, const RatingSystem& rating,
                       const std::vector<double>& label_hist = {});

// Mean of ((value - baseline) / (best - baseline)) across metrics, where the
// best achievable value is 0 for MAE and 1 for agreement. A random judge
// normalizes to ~0, a perfect one to exactly 1. DegenerateBaseline when a
// baseline equals its best value; LengthMismatch when spans differ.
double aggregate_normalized(const std::vector<std::pair<MetricId, double>>& values,
                            const std::vector<double>& baselines);

}  // namespace judgekit::metrics
