#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace judgekit::forge {

// How to assemble a training mix: scenario clusters, per-cluster weights,
// and the total record count to draw.
struct CompositionPlan {
  std::map<std::string, std::vector<std::string>> clusters;  // cluster -> scenario ids
  std::map<std::string, double> weights;                     // cluster -> weight
  std::int64_t total = 0;

  void validate() const;
};

// Integer quotas for `total` split proportionally to `weights` via largest-
// remainder apportionment. Ties go to the larger remainder, then the larger
// weight, then the lexicographically smaller key; quotas always sum to total.
std::map<std::string, std::int64_t> apportion(const std::map<std::string, double>& weights,
                                              std::int64_t total);

// Draws record ids per the plan: cluster quotas by weight, spread evenly
// over each cluster's scenarios (largest remainder again), then a seeded
// order-preserving sample from each scenario's pool. A scenario whose pool
// is smaller than its quota raises PoolExhausted.
std::vector<std::string> sample_composition(
    const CompositionPlan& plan, const std::map<std::string, std::vector<std::string>>& pools,
    std::uint64_t seed);

}  // namespace judgekit::forge
