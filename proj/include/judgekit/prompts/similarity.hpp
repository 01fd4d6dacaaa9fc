#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "judgekit/catalog.hpp"

namespace judgekit::prompts {

// Lowercased word tokens; punctuation is stripped, digits kept.
std::vector<std::string> similarity_tokens(std::string_view text);

// Token-set Jaccard similarity. EmptyText when either side has no tokens.
double jaccard_similarity(std::string_view a, std::string_view b);

// True when the candidate phrasing is textually far enough from the original
// to be worth using: Jaccard over the joint "name description" token sets is
// at most `threshold`.
bool similarity_gate(const Criterion& original, const std::string& candidate_name,
                     const std::string& candidate_description, double threshold = 0.4);

}  // namespace judgekit::prompts
