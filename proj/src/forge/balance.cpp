#include "judgekit/forge/balance.hpp"

#include <algorithm>

#include "judgekit/detail/hash.hpp"
#include "judgekit/detail/rng.hpp"
#include "judgekit/errors.hpp"

namespace judgekit::forge {

namespace {

int overall_of(const SftRecord& record) {
  if (!record.meta.overall)
    raise(ErrorCode::MissingScore,
          "record '" + record.meta.record_id + "' carries no overall score");
  return *record.meta.overall;
}

}  // namespace

std::map<int, std::size_t> score_histogram(const std::vector<SftRecord>& records) {
  std::map<int, std::size_t> histogram;
  for (const SftRecord& record : records) ++histogram[overall_of(record)];
  return histogram;
}

std::vector<SftRecord> balance_by_score(const std::vector<SftRecord>& records,
                                        const std::optional<std::map<int, std::size_t>>& target,
                                        std::uint64_t seed) {
  std::map<int, std::size_t> histogram = score_histogram(records);
  if (histogram.empty()) return {};

  // Per-score caps: the explicit histogram where given, otherwise the median
  // bucket count applied across the board.
  std::map<int, std::size_t> caps;
  if (target) {
    caps = *target;
  } else {
    std::vector<std::size_t> counts;
    counts.reserve(histogram.size());
    for (const auto& [score, count] : histogram) counts.push_back(count);
    std::sort(counts.begin(), counts.end());
    std::size_t median = counts.size() % 2 == 1
                             ? counts[counts.size() / 2]
                             : (counts[counts.size() / 2 - 1] + counts[counts.size() / 2]) / 2;
    for (const auto& [score, count] : histogram) caps[score] = median;
  }

  // Seeded order-preserving survivor pick per over-full bucket; the seed is
  // salted with the score so buckets draw independent sequences.
  std::map<int, std::vector<std::size_t>> bucket_members;
  for (std::size_t i = 0; i < records.size(); ++i)
    bucket_members[overall_of(records[i])].push_back(i);

  std::vector<char> keep(records.size(), 1);
  for (const auto& [score, members] : bucket_members) {
    auto cap = caps.find(score);
    if (cap == caps.end() || members.size() <= cap->second) continue;
    detail::Rng rng(detail::mix(seed, static_cast<std::uint64_t>(static_cast<std::int64_t>(score))));
    std::vector<std::size_t> survivors = rng.sample_indices(members.size(), cap->second);
    std::vector<char> bucket_keep(members.size(), 0);
    for (std::size_t position : survivors) bucket_keep[position] = 1;
    for (std::size_t position = 0; position < members.size(); ++position)
      if (!bucket_keep[position]) keep[members[position]] = 0;
  }

  std::vector<SftRecord> balanced;
  for (std::size_t i = 0; i < records.size(); ++i)
    if (keep[i]) balanced.push_back(records[i]);
  return balanced;
}

}  // namespace judgekit::forge
