#include "judgekit/forge/compose.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "judgekit/detail/hash.hpp"
#include "judgekit/detail/rng.hpp"
#include "judgekit/errors.hpp"

namespace judgekit::forge {

void CompositionPlan::validate() const {
  if (total < 0) raise(ErrorCode::OutOfRange, "composition total must be non-negative");
  if (clusters.empty()) raise(ErrorCode::EmptyInput, "composition plan names no clusters");

  std::set<std::string> seen;
  for (const auto& [cluster, members] : clusters) {
    if (weights.find(cluster) == weights.end())
      raise(ErrorCode::ConfigError, "cluster '" + cluster + "' has no weight");
    if (members.empty())
      raise(ErrorCode::ConfigError, "cluster '" + cluster + "' has no scenarios");
    for (const std::string& scenario : members)
      if (!seen.insert(scenario).second)
        raise(ErrorCode::ConfigError, "scenario '" + scenario + "' appears in two clusters");
  }
  for (const auto& [cluster, weight] : weights) {
    if (clusters.find(cluster) == clusters.end())
      raise(ErrorCode::ConfigError, "weight names unknown cluster '" + cluster + "'");
    if (weight < 0.0)
      raise(ErrorCode::ConfigError, "cluster '" + cluster + "' has a negative weight");
  }
}

std::map<std::string, std::int64_t> apportion(const std::map<std::string, double>& weights,
                                              std::int64_t total) {
  if (weights.empty()) raise(ErrorCode::EmptyInput, "apportionment needs at least one weight");
  if (total < 0) raise(ErrorCode::OutOfRange, "apportionment total must be non-negative");
  double weight_sum = 0.0;
  for (const auto& [key, weight] : weights) {
    if (weight < 0.0) raise(ErrorCode::ConfigError, "weight for '" + key + "' is negative");
    weight_sum += weight;
  }
  if (weight_sum <= 0.0) raise(ErrorCode::ConfigError, "weights must sum to a positive value");

  struct Share {
    std::string key;
    double weight = 0.0;
    double remainder = 0.0;
    std::int64_t quota = 0;
  };
  std::vector<Share> shares;
  shares.reserve(weights.size());
  std::int64_t assigned = 0;
  for (const auto& [key, weight] : weights) {
    double exact = static_cast<double>(total) * weight / weight_sum;
    Share share;
    share.key = key;
    share.weight = weight;
    share.quota = static_cast<std::int64_t>(std::floor(exact));
    share.remainder = exact - static_cast<double>(share.quota);
    assigned += share.quota;
    shares.push_back(std::move(share));
  }

  std::int64_t leftover = total - assigned;
  std::sort(shares.begin(), shares.end(), [](const Share& a, const Share& b) {
    if (a.remainder != b.remainder) return a.remainder > b.remainder;
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.key < b.key;
  });
  for (std::int64_t i = 0; i < leftover; ++i) ++shares[static_cast<std::size_t>(i)].quota;

  std::map<std::string, std::int64_t> quotas;
  for (const Share& share : shares) quotas[share.key] = share.quota;
  return quotas;
}

std::vector<std::string> sample_composition(
    const CompositionPlan& plan, const std::map<std::string, std::vector<std::string>>& pools,
    std::uint64_t seed) {
  plan.validate();
  std::map<std::string, std::int64_t> cluster_quotas = apportion(plan.weights, plan.total);

  std::vector<std::string> drawn;
  drawn.reserve(static_cast<std::size_t>(plan.total));
  for (const auto& [cluster, members] : plan.clusters) {
    std::int64_t cluster_quota = cluster_quotas.at(cluster);

    // Spread the cluster's quota evenly over its scenarios with the same
    // largest-remainder rule (equal weights).
    std::map<std::string, double> member_weights;
    for (const std::string& scenario : members) member_weights[scenario] = 1.0;
    std::map<std::string, std::int64_t> scenario_quotas = apportion(member_weights, cluster_quota);

    for (const std::string& scenario : members) {
      std::int64_t quota = scenario_quotas.at(scenario);
      if (quota == 0) continue;
      auto pool = pools.find(scenario);
      if (pool == pools.end() || static_cast<std::int64_t>(pool->second.size()) < quota)
        raise(ErrorCode::PoolExhausted,
              "scenario '" + scenario + "' has " +
                  std::to_string(pool == pools.end() ? 0 : pool->second.size()) +
                  " records for a quota of " + std::to_string(quota));

      detail::Rng rng(detail::mix(seed, detail::fnv1a64(scenario)));
      for (std::size_t index :
           rng.sample_indices(pool->second.size(), static_cast<std::size_t>(quota)))
        drawn.push_back(pool->second[index]);
    }
  }
  return drawn;
}

}  // namespace judgekit::forge
