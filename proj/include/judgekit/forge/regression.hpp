#pragma once

#include <optional>
#include <vector>

#include "judgekit/rating.hpp"

namespace judgekit::forge {

// One training observation: per-criterion sub-scores (absent where the judge
// scored only some criteria) and the overall score they produced.
struct RegressionRow {
  std::vector<std::optional<double>> sub_scores;
  double overall = 0.0;
};

// Linear map from sub-scores to an overall score, fit with ridge-regularized
// least squares. Missing features are imputed with their training means, at
// fit and at prediction time.
struct RegressionModel {
  std::vector<double> weights;
  double intercept = 0.0;
  std::vector<double> feature_means;

  double predict_raw(const std::vector<std::optional<double>>& sub_scores) const;

  // Prediction clamped into the rating range and rounded half up.
  int predict(const std::vector<std::optional<double>>& sub_scores,
              const RatingSystem& rating) const;
};

// Fits on centered data with an unpenalized intercept. All rows must have the
// same feature count (LengthMismatch); at least one row (EmptyInput). A
// single row yields the degenerate exact fit (zero weights, that row's
// overall as intercept).
RegressionModel fit_criteria_regression(const std::vector<RegressionRow>& rows,
                                        double ridge_lambda = 1e-3);

}  // namespace judgekit::forge
