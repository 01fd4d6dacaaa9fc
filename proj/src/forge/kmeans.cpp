#include "judgekit/forge/kmeans.hpp"

#include <algorithm>
#include <limits>

#include "judgekit/detail/rng.hpp"
#include "judgekit/errors.hpp"

namespace judgekit::forge {

namespace {

double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    double diff = a[j] - b[j];
    sum += diff * diff;
  }
  return sum;
}

}  // namespace

KMeansResult kmeans(const std::vector<std::vector<double>>& rows, int k, std::uint64_t seed,
                    int max_iterations) {
  if (rows.empty()) raise(ErrorCode::EmptyInput, "clustering needs at least one row");
  std::size_t dims = rows[0].size();
  for (const auto& row : rows)
    if (row.size() != dims) raise(ErrorCode::LengthMismatch, "clustering rows are ragged");
  if (k < 1 || static_cast<std::size_t>(k) > rows.size())
    raise(ErrorCode::KTooLarge, "k must be between 1 and the row count, got " + std::to_string(k));

  detail::Rng rng(seed);
  std::size_t clusters = static_cast<std::size_t>(k);

  // k-means++ seeding: each next center drawn proportional to squared
  // distance from the nearest already-chosen center.
  std::vector<std::vector<double>> centroids;
  centroids.reserve(clusters);
  centroids.push_back(rows[rng.below(rows.size())]);
  std::vector<double> nearest(rows.size(), 0.0);
  while (centroids.size() < clusters) {
    double total = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& centroid : centroids)
        best = std::min(best, squared_distance(rows[i], centroid));
      nearest[i] = best;
      total += best;
    }
    std::size_t chosen;
    if (total > 0.0) {
      double roll = rng.unit() * total;
      chosen = rows.size() - 1;
      double accumulated = 0.0;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        accumulated += nearest[i];
        if (roll < accumulated) {
          chosen = i;
          break;
        }
      }
    } else {
      chosen = rng.below(rows.size());  // all rows coincide with a center
    }
    centroids.push_back(rows[chosen]);
  }

  KMeansResult result;
  result.centroids = std::move(centroids);
  result.assignment.assign(rows.size(), 0);

  for (int iteration = 1; iteration <= max_iterations; ++iteration) {
    result.iterations = iteration;

    std::vector<int> assignment(rows.size(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < clusters; ++c) {
        double d = squared_distance(rows[i], result.centroids[c]);
        if (d < best) {
          best = d;
          assignment[i] = static_cast<int>(c);
        }
      }
    }

    // An empty cluster steals the globally worst-fit point from a cluster
    // that can spare one.
    std::vector<std::size_t> sizes(clusters, 0);
    for (int c : assignment) ++sizes[static_cast<std::size_t>(c)];
    for (std::size_t c = 0; c < clusters; ++c) {
      if (sizes[c] > 0) continue;
      double worst = -1.0;
      std::size_t victim = rows.size();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        std::size_t home = static_cast<std::size_t>(assignment[i]);
        if (sizes[home] <= 1) continue;
        double d = squared_distance(rows[i], result.centroids[home]);
        if (d > worst) {
          worst = d;
          victim = i;
        }
      }
      if (victim == rows.size()) continue;  // everything is a singleton already
      --sizes[static_cast<std::size_t>(assignment[victim])];
      assignment[victim] = static_cast<int>(c);
      ++sizes[c];
    }

    bool converged = iteration > 1 && assignment == result.assignment;
    result.assignment = std::move(assignment);

    for (std::size_t c = 0; c < clusters; ++c) {
      std::vector<double> mean(dims, 0.0);
      std::size_t count = 0;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<std::size_t>(result.assignment[i]) != c) continue;
        for (std::size_t j = 0; j < dims; ++j) mean[j] += rows[i][j];
        ++count;
      }
      if (count == 0) continue;  // keep the old centroid
      for (double& value : mean) value /= static_cast<double>(count);
      result.centroids[c] = std::move(mean);
    }

    if (converged) break;
  }
  return result;
}

std::map<std::string, std::vector<std::string>> cluster_scenarios(
    const std::vector<std::string>& scenario_ids, const std::vector<std::vector<double>>& features,
    int k, std::uint64_t seed) {
  if (scenario_ids.size() != features.size())
    raise(ErrorCode::LengthMismatch, "scenario ids and feature rows disagree in length");
  KMeansResult result = kmeans(features, k, seed);

  std::map<std::string, std::vector<std::string>> groups;
  for (int c = 0; c < k; ++c) groups["c" + std::to_string(c)];
  for (std::size_t i = 0; i < scenario_ids.size(); ++i)
    groups["c" + std::to_string(result.assignment[i])].push_back(scenario_ids[i]);
  return groups;
}

}  // namespace judgekit::forge
