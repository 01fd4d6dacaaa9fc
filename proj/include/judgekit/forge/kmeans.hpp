#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace judgekit::forge {

struct KMeansResult {
  std::vector<int> assignment;                 // row index -> cluster index
  std::vector<std::vector<double>> centroids;  // k rows
  int iterations = 0;
};

// Lloyd's algorithm with k-means++ seeding. All randomness comes from the
// seed; iteration stops on a fixed assignment or after max_iterations. A
// cluster left empty by an assignment step is reseeded from the point
// farthest from its centroid. KTooLarge when k exceeds the row count or is
// not positive; LengthMismatch on ragged rows; EmptyInput on no rows.
KMeansResult kmeans(const std::vector<std::vector<double>>& rows, int k, std::uint64_t seed,
                    int max_iterations = 100);

// Groups scenarios by clustering their feature vectors; returns cluster id
// ("c0", "c1", ... in seeding order) -> member scenario ids (input order).
std::map<std::string, std::vector<std::string>> cluster_scenarios(
    const std::vector<std::string>& scenario_ids, const std::vector<std::vector<double>>& features,
    int k, std::uint64_t seed);

}  // namespace judgekit::forge
