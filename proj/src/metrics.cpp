#include "judgekit/metrics/metrics.hpp"

#include <cmath>
#include <cstdlib>

#include "judgekit/errors.hpp"

namespace judgekit::metrics {

namespace {

// Trims trailing zeros so q renders as "2", "0.5", not "2.000000".
std::string compact_double(double value) {
  if (value == static_cast<long long>(value))
    return std::to_string(static_cast<long long>(value));
  std::string s = std::to_string(value);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

std::string AgrParams::label() const {
  return "agr_" + std::to_string(p) + "_" + compact_double(q);
}

double agr_kernel(int predicted, int labeled, const AgrParams& params) {
  const int distance = std::abs(predicted - labeled);
  if (distance >= params.p) return 0.0;
  return 1.0 / std::pow(static_cast<double>(distance) + 1.0, params.q);
}

double mae(const std::vector<ScoredPair>& pairs) {
  if (pairs.empty()) raise(ErrorCode::EmptyInput, "mae over zero pairs");
  double total = 0.0;
  for (const auto& pair : pairs) total += std::abs(pair.predicted - pair.labeled);
  return total / static_cast<double>(pairs.size());
}

double agr(const std::vector<ScoredPair>& pairs, const AgrParams& params) {
  if (pairs.empty()) raise(ErrorCode::EmptyInput, "agr over zero pairs");
  double total = 0.0;
  for (const auto& pair : pairs) total += agr_kernel(pair.predicted, pair.labeled, params);
  return total / static_cast<double>(pairs.size());
}

double weighted_overall(const std::vector<std::pair<std::int64_t, double>>& rows) {
  if (rows.empty()) raise(ErrorCode::EmptyInput, "weighted overall of zero rows");
  double weighted_sum = 0.0;
  std::int64_t total_count = 0;
  for (const auto& [count, value] : rows) {
    if (count < 0) raise(ErrorCode::EmptyInput, "negative row count");
    weighted_sum += static_cast<double>(count) * value;
    total_count += count;
  }
  if (total_count == 0) raise(ErrorCode::EmptyInput, "weighted overall with zero total count");
  return weighted_sum / static_cast<double>(total_count);
}

std::vector<double> z_values(const std::vector<double>& values) {
  if (values.size() < 2)
    raise(ErrorCode::TooFewValues, "z-values need at least two observations");
  const double n = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double stddev = std::sqrt(ss / (n - 1.0));

  std::vector<double> zs(values.size(), 0.0);
  if (stddev > 0.0)
    for (std::size_t i = 0; i < values.size(); ++i) zs[i] = (values[i] - mean) / stddev;
  return zs;
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size())
    raise(ErrorCode::LengthMismatch, "pearson inputs differ in length");
  if (xs.size() < 2) raise(ErrorCode::TooFewValues, "pearson needs at least two points");
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    raise(ErrorCode::ZeroVariance, "pearson with a constant input");
  return sxy / std::sqrt(sxx * syy);
}

double random_baseline(const MetricId& metric, const RatingSystem& rating,
                       const std::vector<double>& label_hist) {
  const std::size_t classes = static_cast<std::size_t>(rating.size());
  std::vector<double> hist = label_hist;
  if (hist.empty()) hist.assign(classes, 1.0 / static_cast<double>(classes));
  if (hist.size() != classes)
    raise(ErrorCode::InvalidHistogram, "histogram needs one entry per score in " +
                                           rating.range_text());
  double sum = 0.0;
  for (double p : hist) {
    if (p < 0.0) raise(ErrorCode::InvalidHistogram, "negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    raise(ErrorCode::InvalidHistogram, "histogram does not sum to 1");

  // Exact expectation over (uniform prediction) x (label histogram).
  double expected = 0.0;
  for (int predicted = rating.min; predicted <= rating.max; ++predicted) {
    for (int labeled = rating.min; labeled <= rating.max; ++labeled) {
      const double p_pair = (1.0 / static_cast<double>(classes)) *
                            hist[static_cast<std::size_t>(labeled - rating.min)];
      const double value = metric.is_mae ? std::abs(predicted - labeled)
                                         : agr_kernel(predicted, labeled, metric.agr);
      expected += p_pair * value;
    }
  }
  return expected;
}

double aggregate_normalized(const std::vector<std::pair<MetricId, double>>& values,
                            const std::vector<double>& baselines) {
  if (values.empty()) raise(ErrorCode::EmptyInput, "nothing to aggregate");
  if (values.size() != baselines.size())
    raise(ErrorCode::LengthMismatch, "one baseline per metric value required");

  double total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double best = values[i].first.is_mae ? 0.0 : 1.0;
    const double baseline = baselines[i];
    if (std::abs(best - baseline) < 1e-12)
      raise(ErrorCode::DegenerateBaseline,
            "baseline equals the metric's best value; normalization undefined");
    total += (values[i].second - baseline) / (best - baseline);
  }
  return total / static_cast<double>(values.size());
}

}  // namespace judgekit::metrics
