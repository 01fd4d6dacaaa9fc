#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "judgekit/rating.hpp"
#include "judgekit/types.hpp"

namespace judgekit::forge {

enum class SpanKind { sft, sim };

const char* span_kind_name(SpanKind kind);
SpanKind span_kind_from_name(const std::string& name);

// Half-open [start, end) byte range of the target text. A record's spans are
// sorted, disjoint, and cover the whole target.
struct TokenSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  SpanKind kind = SpanKind::sim;

  bool operator==(const TokenSpan&) const = default;
};

struct SftMeta {
  JudgeMode mode = JudgeMode::single;
  std::string scenario;
  RatingKind rating = RatingKind::five_tier;
  std::optional<int> overall;             // graded records
  std::optional<PairwiseWinner> winner;   // pairwise records
  std::string record_id;
  std::map<std::string, std::string> extra;
};

// One fine-tuning example: evaluation prompt, judge target text, and the
// span labeling that separates skeleton tokens (trained with the standard
// objective) from free-form rationale tokens (trained with the similarity
// objective).
struct SftRecord {
  std::string prompt;
  std::string target;
  std::vector<TokenSpan> spans;
  SftMeta meta;
};

// Labels the target: the opening verdict line, section headers, enumeration
// markers, and every bracketed score are skeleton (sft); whitespace bridging
// two skeleton stretches joins them; everything else — the judge's own prose
// — is rationale (sim). The target must parse under `rating` for the given
// mode (errors wrapped as ParseFailure).
std::vector<TokenSpan> label_token_spans(const std::string& target, JudgeMode mode,
                                         const RatingSystem& rating);

void validate_spans(const std::vector<TokenSpan>& spans, std::size_t target_size);

}  // namespace judgekit::forge
