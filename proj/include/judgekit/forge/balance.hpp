#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "judgekit/forge/sft.hpp"

namespace judgekit::forge {

// Down-samples over-represented overall scores. With no explicit target the
// cap for every score bucket is the median bucket count (even bucket counts:
// floor of the mean of the two middle values); an explicit histogram caps
// only the scores it lists. Selection within a bucket is a seeded
// order-preserving sample; records are never duplicated and the survivor
// order matches the input order. Every record must carry meta.overall
// (MissingScore).
std::vector<SftRecord> balance_by_score(const std::vector<SftRecord>& records,
                                        const std::optional<std::map<int, std::size_t>>& target,
                                        std::uint64_t seed);

// Bucket sizes by overall score, for reporting.
std::map<int, std::size_t> score_histogram(const std::vector<SftRecord>& records);

}  // namespace judgekit::forge
