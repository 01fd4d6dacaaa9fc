#include <doctest.h>

#include <string>
#include <vector>

#include "fixtures.hpp"
#include "judgekit/catalog.hpp"
#include "judgekit/errors.hpp"
#include "judgekit/rating.hpp"
#include "judgekit/types.hpp"
#include "judgekit/verdict.hpp"

using namespace judgekit;

namespace {

const RatingSystem kFiveTier = RatingSystem::of(RatingKind::five_tier);

ErrorCode graded_error(const std::string& text,
                       const RatingSystem& rating = RatingSystem::of(RatingKind::five_tier)) {
  try {
    parse_graded_verdict(text, rating);
  } catch (const Error& error) {
    return error.code();
  }
  FAIL("expected parse_graded_verdict to throw");
  return ErrorCode::IoError;
}

ErrorCode pairwise_error(const std::string& text,
                         const RatingSystem& rating = RatingSystem::of(RatingKind::five_tier)) {
  try {
    parse_pairwise_verdict(text, rating);
  } catch (const Error& error) {
    return error.code();
  }
  FAIL("expected parse_pairwise_verdict to throw");
  return ErrorCode::IoError;
}

}  // namespace

TEST_SUITE("verdict") {

TEST_CASE("captured low-mark judge reply parses to the known scores") {
  GradedVerdict verdict = parse_graded_verdict(fixtures::kJudgeReplyLowMark, kFiveTier);

  CHECK(verdict.overall == 1);

  REQUIRE(verdict.strengths.size() == 1);
  CHECK(verdict.strengths[0].score == 3);
  CHECK(verdict.strengths[0].text ==
        "Clarity: The explanation process is relatively clear, comparing integer parts and "
        "decimal parts in steps, which is easy to understand.");

  REQUIRE(verdict.weaknesses.size() == 5);
  const int expected[] = {1, 1, 1, 2, 1};
  for (std::size_t i = 0; i < 5; ++i) CHECK(verdict.weaknesses[i].score == expected[i]);

  // Decimal literals inside the prose ("9.11", "9.9") must not be read as
  // enumeration markers or scores.
  CHECK(verdict.weaknesses[0].text.find("9.9 is greater than 9.11") != std::string::npos);
  // Multi-byte punctuation survives the whitespace-collapsing cleanup.
  CHECK(verdict.weaknesses[2].text.find("user’s request.") != std::string::npos);
  // The closing paragraph repeats "[[1]]" outside any enumerated item; it
  // must not have become a sixth weakness.
  CHECK(verdict.raw == fixtures::kJudgeReplyLowMark);
}

TEST_CASE("captured mid-mark judge reply parses under the alternate headers") {
  GradedVerdict verdict = parse_graded_verdict(fixtures::kJudgeReplyMidMark, kFiveTier);

  CHECK(verdict.overall == 3);
  REQUIRE(verdict.strengths.size() == 3);
  CHECK(verdict.strengths[0].score == 3);
  CHECK(verdict.strengths[1].score == 4);
  CHECK(verdict.strengths[2].score == 4);
  REQUIRE(verdict.weaknesses.size() == 3);
  CHECK(verdict.weaknesses[0].score == 1);
  CHECK(verdict.weaknesses[1].score == 2);
  CHECK(verdict.weaknesses[2].score == 2);
  CHECK(verdict.strengths[1].text.find("steps of the solution") != std::string::npos);
}

TEST_CASE("graded render/parse round-trips") {
  GradedVerdict original;
  original.overall = 4;
  original.strengths = {{"Covers every requested point", 5}, {"Reads cleanly", 4}};
  original.weaknesses = {{"One example is thin", 3}};

  std::string text = render_graded_verdict(original);
  GradedVerdict parsed = parse_graded_verdict(text, kFiveTier);

  CHECK(parsed.overall == original.overall);
  REQUIRE(parsed.strengths.size() == 2);
  REQUIRE(parsed.weaknesses.size() == 1);
  CHECK(parsed.strengths[0] == original.strengths[0]);
  CHECK(parsed.strengths[1] == original.strengths[1]);
  CHECK(parsed.weaknesses[0] == original.weaknesses[0]);
}

TEST_CASE("item attribution rules") {
  SUBCASE("an item keeps only its first bracketed integer") {
    std::string text =
        "I believe the overall rating of this response is [[4]].\n"
        "Strengths of the current response:\n"
        "1. Strong on facts [[5]] though the earlier draft scored [[3]]\n";
    GradedVerdict verdict = parse_graded_verdict(text, kFiveTier);
    REQUIRE(verdict.strengths.size() == 1);
    CHECK(verdict.strengths[0].score == 5);
    // Both bracket tokens are stripped from the cleaned text.
    CHECK(verdict.strengths[0].text == "Strong on facts though the earlier draft scored");
  }

  SUBCASE("an item without a bracketed integer contributes nothing") {
    std::string text =
        "I believe the overall rating of this response is [[4]].\n"
        "Strengths of the current response:\n"
        "1. Good start but unscored\n"
        "2. Scored properly [[4]]\n";
    GradedVerdict verdict = parse_graded_verdict(text, kFiveTier);
    REQUIRE(verdict.strengths.size() == 1);
    CHECK(verdict.strengths[0].score == 4);
  }

  SUBCASE("items continue across lines until a blank, marker, or header") {
    std::string text =
        "I believe the overall rating of this response is [[2]].\n"
        "Weaknesses of the current response:\n"
        "1. The argument wanders\n"
        "across two lines before its score lands. [[2]]\n"
        "2. Second point [[1]]\n";
    GradedVerdict verdict = parse_graded_verdict(text, kFiveTier);
    REQUIRE(verdict.weaknesses.size() == 2);
    CHECK(verdict.weaknesses[0].score == 2);
    CHECK(verdict.weaknesses[0].text ==
          "The argument wanders across two lines before its score lands.");
    CHECK(verdict.weaknesses[1].score == 1);
  }

  SUBCASE("bullet markers work like numbered markers") {
    std::string text =
        "I believe the overall rating of this response is [[3]].\n"
        "Strengths:\n"
        "- concise [[4]]\n"
        "* well ordered [[3]]\n";
    GradedVerdict verdict = parse_graded_verdict(text, kFiveTier);
    REQUIRE(verdict.strengths.size() == 2);
    CHECK(verdict.strengths[0].score == 4);
    CHECK(verdict.strengths[1].score == 3);
  }

  SUBCASE("a line opening with a decimal number is prose, not a marker") {
    std::string text =
        "I believe the overall rating of this response is [[2]].\n"
        "Weaknesses of the current response:\n"
        "1. The comparison is wrong:\n"
        "9.11 is treated as the larger number throughout. [[1]]\n";
    GradedVerdict verdict = parse_graded_verdict(text, kFiveTier);
    REQUIRE(verdict.weaknesses.size() == 1);
    CHECK(verdict.weaknesses[0].score == 1);
    CHECK(verdict.weaknesses[0].text.find("9.11 is treated") != std::string::npos);
  }
}

TEST_CASE("graded parsing error cases") {
  CHECK(graded_error("No scores anywhere in this text.") == ErrorCode::MissingMarker);
  CHECK(graded_error("Rating: [[great]]") == ErrorCode::NotAnInteger);
  CHECK(graded_error("Rating: [[4.5]]") == ErrorCode::NotAnInteger);
  CHECK(graded_error("Rating: [[9]]") == ErrorCode::OutOfRange);
  CHECK(graded_error("Rating: [[0]]") == ErrorCode::OutOfRange);
  CHECK(graded_error("Rating: [[-2]]") == ErrorCode::OutOfRange);

  // Bounds follow the rating system, not a fixed five-point assumption.
  RatingSystem ten = RatingSystem::of(RatingKind::ten_class);
  GradedVerdict verdict = parse_graded_verdict("Overall [[9]].", ten);
  CHECK(verdict.overall == 9);
  CHECK(graded_error("Overall [[11]].", ten) == ErrorCode::OutOfRange);

  // An unterminated bracket is plain text, so this reply has no score at all.
  CHECK(graded_error("Overall [[4") == ErrorCode::MissingMarker);
}

TEST_CASE("bracket token scanning") {
  auto tokens = scan_bracket_tokens("a [[1]] b [[two]] c [[3");
  REQUIRE(tokens.size() == 2);
  CHECK(tokens[0].content == "1");
  CHECK(tokens[0].begin == 2);
  CHECK(tokens[0].end == 7);
  CHECK(tokens[1].content == "two");
  CHECK(scan_bracket_tokens("no tokens").empty());
}

TEST_CASE("pairwise render/parse round-trips") {
  PairwiseVerdict original;
  original.winner = PairwiseWinner::response_2;
  original.score_1 = 2;
  original.score_2 = 4;
  original.rationale = {{"Accuracy of the core claims", 2, 4},
                        {"Clarity and organization of the answer", 3, 4}};

  std::string text = render_pairwise_verdict(original);
  PairwiseVerdict parsed = parse_pairwise_verdict(text, kFiveTier);

  CHECK(parsed.winner == PairwiseWinner::response_2);
  CHECK(parsed.score_1 == 2);
  CHECK(parsed.score_2 == 4);
  REQUIRE(parsed.rationale.size() == 2);
  CHECK(parsed.rationale[0] == original.rationale[0]);
  CHECK(parsed.rationale[1] == original.rationale[1]);
}

TEST_CASE("pairwise score attribution follows the label mentions") {
  // Scores given in reverse order: Response 2's score appears first.
  std::string text =
      "I believe [[Response 1 is better]]. The overall score for Response 2 "
      "being [[2]], and the overall score for Response 1 being [[5]].";
  PairwiseVerdict verdict = parse_pairwise_verdict(text, kFiveTier);
  CHECK(verdict.winner == PairwiseWinner::response_1);
  CHECK(verdict.score_1 == 5);
  CHECK(verdict.score_2 == 2);

  // No label mention at all: positional fallback (first score -> Response 1).
  std::string bare = "[[Both Responses are tied]] with [[3]] and [[3]]. Done.";
  PairwiseVerdict tied = parse_pairwise_verdict(bare, kFiveTier);
  CHECK(tied.winner == PairwiseWinner::tie);
  CHECK(tied.score_1 == 3);
  CHECK(tied.score_2 == 3);
}

TEST_CASE("pairwise parsing error cases") {
  CHECK(pairwise_error("Neither response text carries a decision.") ==
        ErrorCode::MissingMarker);
  CHECK(pairwise_error("[[Response 1 is better]] but also [[Response 2 is better]] "
                       "with [[3]] [[2]]") == ErrorCode::AmbiguousVerdict);
  CHECK(pairwise_error("[[Response 1 is better]] with only [[4]] given") ==
        ErrorCode::MissingMarker);
  CHECK(pairwise_error("[[Response 1 is better]] scored [[6]] to [[2]]") ==
        ErrorCode::OutOfRange);
  CHECK(pairwise_error("[[Response 1 is better]] scored [[x]] to [[2]]") ==
        ErrorCode::NotAnInteger);

  // A repeated identical marker is still one decision, not an ambiguity.
  std::string repeated =
      "[[Response 1 is better]] scored [[4]] and [[2]]; to restate, Response 1 is better.";
  CHECK(parse_pairwise_verdict(repeated, kFiveTier).winner == PairwiseWinner::response_1);
}

TEST_CASE("scenario classification replies resolve to catalog ids") {
  const ScenarioCatalog catalog =
      ScenarioCatalog::load_file(std::string(JUDGEKIT_TEST_DATA_DIR) + "/scenarios.json");

  CHECK(parse_scenario_label("Open QA", catalog) == "open_qa");
  CHECK(parse_scenario_label("  open   qa \n", catalog) == "open_qa");
  CHECK(parse_scenario_label("\"Open QA\"", catalog) == "open_qa");
  CHECK(parse_scenario_label("'Creative writing'", catalog) == "creative_writing");
  CHECK(parse_scenario_label("Open QA.", catalog) == "open_qa");
  CHECK(parse_scenario_label("default", catalog) == "default");
  CHECK(parse_scenario_label("Default.", catalog) == "default");

  auto label_error = [&](const char* reply) {
    try {
      parse_scenario_label(reply, catalog);
    } catch (const Error& error) {
      return error.code();
    }
    FAIL("expected parse_scenario_label to throw");
    return ErrorCode::IoError;
  };
  CHECK(label_error("philosophy") == ErrorCode::UnknownScenario);
  CHECK(label_error("") == ErrorCode::UnknownScenario);
  CHECK(label_error("   ") == ErrorCode::UnknownScenario);
  // Ids are not accepted in replies; judges answer with display names.
  CHECK(label_error("info_prof_writing") == ErrorCode::UnknownScenario);
}

}  // TEST_SUITE
