#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "judgekit/catalog.hpp"
#include "judgekit/rating.hpp"
#include "judgekit/types.hpp"

namespace judgekit {

// Section header lines (normalized: lowercased, trimmed, trailing ':' and '.'
// stripped) that open the strengths / weaknesses lists in judge output.
// Judges paraphrase these; the defaults cover the phrasings seen in practice.
struct VerdictHeaders {
  std::vector<std::string> strengths;
  std::vector<std::string> weaknesses;

  static const VerdictHeaders& defaults();
};

// A `[[...]]` token found in judge output; [begin, end) covers the brackets.
struct BracketToken {
  std::string content;
  std::size_t begin = 0;
  std::size_t end = 0;
};

std::vector<BracketToken> scan_bracket_tokens(std::string_view text);

// Extracts the overall score and the per-point sub-scores from a graded
// evaluation. The first bracketed integer is the overall score; later ones
// attach to the enumerated strength/weakness item they appear in. Bracketed
// integers outside any enumerated item (e.g. a closing paragraph repeating
// the overall score) attach to nothing. Every bracketed value must be an
// integer (NotAnInteger) within the rating bounds (OutOfRange); text without
// any bracketed value raises MissingMarker.
GradedVerdict parse_graded_verdict(std::string_view raw, const RatingSystem& rating,
                                   const VerdictHeaders& headers = VerdictHeaders::defaults());

// Extracts the decision and both overall scores from a pairwise comparison.
// Exactly one of the three decision markers must appear (zero: MissingMarker;
// two or more distinct: AmbiguousVerdict). The two overall scores are the
// first two bracketed integers after the marker, attributed by the nearest
// preceding "Response 1" / "Response 2" mention (positional fallback).
// Enumerated items carrying two or more bracketed integers become rationale
// entries.
PairwiseVerdict parse_pairwise_verdict(std::string_view raw, const RatingSystem& rating);

// Canonical textual forms; parse_* round-trips them.
std::string render_graded_verdict(const GradedVerdict& verdict);
std::string render_pairwise_verdict(const PairwiseVerdict& verdict);

// Maps a scenario-classification reply onto a catalog scenario id, or the
// reserved default label. Matching is case- and whitespace-insensitive and
// exact; anything else raises UnknownScenario.
std::string parse_scenario_label(std::string_view raw, const ScenarioCatalog& catalog);

// Exact decision-marker strings used in pairwise judge output.
inline constexpr std::string_view kMarkerResponse1 = "[[Response 1 is better]]";
inline constexpr std::string_view kMarkerResponse2 = "[[Response 2 is better]]";
inline constexpr std::string_view kMarkerTie = "[[Both Responses are tied]]";

}  // namespace judgekit
