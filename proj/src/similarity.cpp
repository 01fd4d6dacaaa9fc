#include "judgekit/prompts/similarity.hpp"

#include <set>

#include "judgekit/errors.hpp"

namespace judgekit::prompts {

std::vector<std::string> similarity_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
    if (keep) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      current.push_back(c);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

double jaccard_similarity(std::string_view a, std::string_view b) {
  std::vector<std::string> tokens_a = similarity_tokens(a);
  std::vector<std::string> tokens_b = similarity_tokens(b);
  if (tokens_a.empty() || tokens_b.empty())
    raise(ErrorCode::EmptyText, "similarity needs word tokens on both sides");

  std::set<std::string> set_a(tokens_a.begin(), tokens_a.end());
  std::set<std::string> set_b(tokens_b.begin(), tokens_b.end());
  std::size_t intersection = 0;
  for (const std::string& token : set_a) intersection += set_b.count(token);
  std::size_t unions = set_a.size() + set_b.size() - intersection;
  return static_cast<double>(intersection) / static_cast<double>(unions);
}

bool similarity_gate(const Criterion& original, const std::string& candidate_name,
                     const std::string& candidate_description, double threshold) {
  std::string original_text = original.name + " " + original.description;
  std::string candidate_text = candidate_name + " " + candidate_description;
  return jaccard_similarity(original_text, candidate_text) <= threshold;
}

}  // namespace judgekit::prompts
