#include "judgekit/forge/regression.hpp"

#include <cmath>
#include <vector>

#include "judgekit/errors.hpp"

namespace judgekit::forge {

namespace {

// Solves A x = b in place by Gaussian elimination with partial pivoting.
// A is symmetric positive definite here (ridge-regularized Gram matrix), so
// a vanishing pivot can only mean a malformed system.
std::vector<double> solve_linear(std::vector<std::vector<double>> a, std::vector<double> b) {
  std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row)
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    if (std::abs(a[pivot][col]) < 1e-12)
      raise(ErrorCode::ZeroVariance, "regression system is singular");
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t row = col + 1; row < n; ++row) {
      double factor = a[row][col] / a[col][col];
      if (factor == 0.0) continue;
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t row = n; row-- > 0;) {
    double sum = b[row];
    for (std::size_t k = row + 1; k < n; ++k) sum -= a[row][k] * x[k];
    x[row] = sum / a[row][row];
  }
  return x;
}

}  // namespace

double RegressionModel::predict_raw(const std::vector<std::optional<double>>& sub_scores) const {
  if (sub_scores.size() != weights.size())
    raise(ErrorCode::LengthMismatch, "prediction needs " + std::to_string(weights.size()) +
                                         " sub-scores, got " + std::to_string(sub_scores.size()));
  double value = intercept;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    double feature = sub_scores[j] ? *sub_scores[j] : feature_means[j];
    value += weights[j] * feature;
  }
  return value;
}

int RegressionModel::predict(const std::vector<std::optional<double>>& sub_scores,
                             const RatingSystem& rating) const {
  int rounded = round_half_up(predict_raw(sub_scores));
  return std::min(rating.max, std::max(rating.min, rounded));
}

RegressionModel fit_criteria_regression(const std::vector<RegressionRow>& rows,
                                        double ridge_lambda) {
  if (rows.empty()) raise(ErrorCode::EmptyInput, "regression needs at least one row");
  std::size_t features = rows[0].sub_scores.size();
  for (const RegressionRow& row : rows)
    if (row.sub_scores.size() != features)
      raise(ErrorCode::LengthMismatch, "regression rows disagree on feature count");

  RegressionModel model;
  model.weights.assign(features, 0.0);
  model.feature_means.assign(features, 0.0);

  // Column means over observed entries; a never-observed column imputes 0.
  for (std::size_t j = 0; j < features; ++j) {
    double sum = 0.0;
    std::size_t observed = 0;
    for (const RegressionRow& row : rows) {
      if (row.sub_scores[j]) {
        sum += *row.sub_scores[j];
        ++observed;
      }
    }
    model.feature_means[j] = observed > 0 ? sum / static_cast<double>(observed) : 0.0;
  }

  double y_mean = 0.0;
  for (const RegressionRow& row : rows) y_mean += row.overall;
  y_mean /= static_cast<double>(rows.size());

  if (features == 0) {
    model.intercept = y_mean;
    return model;
  }

  // Centered design (imputation first, so missing entries center to zero),
  // ridge on the weights only — the intercept stays unpenalized.
  std::vector<std::vector<double>> gram(features, std::vector<double>(features, 0.0));
  std::vector<double> moment(features, 0.0);
  for (const RegressionRow& row : rows) {
    std::vector<double> centered(features);
    for (std::size_t j = 0; j < features; ++j) {
      double feature = row.sub_scores[j] ? *row.sub_scores[j] : model.feature_means[j];
      centered[j] = feature - model.feature_means[j];
    }
    double y_centered = row.overall - y_mean;
    for (std::size_t j = 0; j < features; ++j) {
      moment[j] += centered[j] * y_centered;
      for (std::size_t k = 0; k <= j; ++k) gram[j][k] += centered[j] * centered[k];
    }
  }
  for (std::size_t j = 0; j < features; ++j) {
    for (std::size_t k = 0; k < j; ++k) gram[k][j] = gram[j][k];
    gram[j][j] += ridge_lambda;
  }

  model.weights = solve_linear(std::move(gram), std::move(moment));
  model.intercept = y_mean;
  for (std::size_t j = 0; j < features; ++j)
    model.intercept -= model.weights[j] * model.feature_means[j];
  return model;
}

}  // namespace judgekit::forge
