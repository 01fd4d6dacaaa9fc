#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "judgekit/catalog.hpp"
#include "judgekit/detail/rng.hpp"
#include "judgekit/errors.hpp"
#include "judgekit/forge/balance.hpp"
#include "judgekit/forge/pairwise.hpp"
#include "judgekit/forge/regression.hpp"
#include "judgekit/forge/sft.hpp"
#include "judgekit/prompts/library.hpp"
#include "judgekit/prompts/render.hpp"
#include "judgekit/verdict.hpp"

using namespace judgekit;
using namespace judgekit::forge;

namespace {

const RatingSystem kFiveTier = RatingSystem::of(RatingKind::five_tier);

const ScenarioCatalog& shipped_catalog() {
  static const ScenarioCatalog catalog =
      ScenarioCatalog::load_file(std::string(JUDGEKIT_TEST_DATA_DIR) + "/scenarios.json");
  return catalog;
}

const prompts::PromptLibrary& shipped_library() {
  static const prompts::PromptLibrary library =
      prompts::PromptLibrary::load(JUDGEKIT_TEST_DATA_DIR);
  return library;
}

std::string span_text(const std::string& target, const TokenSpan& span) {
  return target.substr(span.start, span.end - span.start);
}

GradedVerdict make_graded(int overall, std::vector<ScoredItem> strengths,
                          std::vector<ScoredItem> weaknesses) {
  GradedVerdict verdict;
  verdict.overall = overall;
  verdict.strengths = std::move(strengths);
  verdict.weaknesses = std::move(weaknesses);
  return verdict;
}

// A complete pairwise training record built through the real renderers.
SftRecord make_pairwise_record(const std::string& record_id, PairwiseWinner winner, int score_1,
                               int score_2, const std::string& rationale_text) {
  JudgeTask task;
  task.mode = JudgeMode::pairwise;
  task.instruction.id = "inst-" + record_id;
  task.instruction.scenario = "creative_writing";
  task.instruction.text = "Write a four-line poem about rain on a summer evening.";
  task.responses = {{task.instruction.id, "model-a", "First response body for " + record_id},
                    {task.instruction.id, "model-b", "Second response body for " + record_id}};
  task.rating = kFiveTier;

  PairwiseVerdict verdict;
  verdict.winner = winner;
  verdict.score_1 = score_1;
  verdict.score_2 = score_2;
  if (!rationale_text.empty()) verdict.rationale = {{rationale_text, score_1, score_2}};

  SftRecord record;
  record.prompt = prompts::render_judge_prompt(shipped_library(), task, shipped_catalog()).text;
  record.target = render_pairwise_verdict(verdict);
  record.spans = label_token_spans(record.target, JudgeMode::pairwise, kFiveTier);
  record.meta.mode = JudgeMode::pairwise;
  record.meta.scenario = "creative_writing";
  record.meta.rating = RatingKind::five_tier;
  record.meta.winner = winner;
  record.meta.record_id = record_id;
  return record;
}

SftRecord make_balance_record(const std::string& record_id, int overall) {
  SftRecord record;
  record.meta.record_id = record_id;
  record.meta.overall = overall;
  return record;
}

std::vector<std::string> ids_of(const std::vector<SftRecord>& records) {
  std::vector<std::string> ids;
  for (const SftRecord& record : records) ids.push_back(record.meta.record_id);
  return ids;
}

}  // namespace

TEST_SUITE("forge_data") {

TEST_CASE("span labeling separates skeleton from rationale in graded targets") {
  const GradedVerdict verdict = make_graded(
      4, {{"Clear structure throughout", 4}}, {{"Misses one edge case", 3}});
  const std::string target = render_graded_verdict(verdict);
  const std::vector<TokenSpan> spans = label_token_spans(target, JudgeMode::single, kFiveTier);

  // Alternating sft / sim spans: skeleton, prose, skeleton, prose, skeleton.
  REQUIRE(spans.size() == 5);
  CHECK(spans[0].kind == SpanKind::sft);
  CHECK(spans[1].kind == SpanKind::sim);
  CHECK(spans[2].kind == SpanKind::sft);
  CHECK(spans[3].kind == SpanKind::sim);
  CHECK(spans[4].kind == SpanKind::sft);

  // The prose spans are exactly the judge's free-form item texts.
  CHECK(span_text(target, spans[1]) == "Clear structure throughout ");
  CHECK(span_text(target, spans[3]) == "Misses one edge case ");

  // The first skeleton span covers the verdict line, the section header, and
  // the enumeration marker, including the layout whitespace between them.
  const std::string head = span_text(target, spans[0]);
  CHECK(head.find("I believe the overall rating of this response is [[4]]") == 0);
  CHECK(head.find("Strengths of the current response:") != std::string::npos);
  CHECK(head.rfind("1. ") == head.size() - 3);

  // The middle skeleton span joins a score, blank-line layout, the next
  // header, and the next enumeration marker.
  const std::string middle = span_text(target, spans[2]);
  CHECK(middle.find("[[4]]") == 0);
  CHECK(middle.find("Shortcomings of the current response:") != std::string::npos);
  CHECK(span_text(target, spans[4]) == "[[3]]");

  // Every bracketed score lies inside an sft span.
  for (const BracketToken& token : scan_bracket_tokens(target)) {
    bool inside_sft = false;
    for (const TokenSpan& span : spans)
      if (span.kind == SpanKind::sft && token.begin >= span.start && token.end <= span.end)
        inside_sft = true;
    CHECK(inside_sft);
  }

  validate_spans(spans, target.size());  // sorted, adjacent, covering
}

TEST_CASE("span labeling on pairwise targets") {
  const SftRecord record = make_pairwise_record(
      "pw-1", PairwiseWinner::response_1, 4, 2,
      "Response 1 stays on topic while Response 2 drifts");
  const std::vector<TokenSpan>& spans = record.spans;

  // Skeleton verdict line + marker, prose rationale, then the score pair —
  // including the space between the two scores, which is layout.
  REQUIRE(spans.size() == 3);
  CHECK(spans[0].kind == SpanKind::sft);
  CHECK(spans[1].kind == SpanKind::sim);
  CHECK(spans[2].kind == SpanKind::sft);
  CHECK(span_text(record.target, spans[1]) ==
        "Response 1 stays on topic while Response 2 drifts ");
  CHECK(span_text(record.target, spans[2]) == "[[4]] [[2]]");
  CHECK(span_text(record.target, spans[0]).find("[[Response 1 is better]]") !=
        std::string::npos);
}

TEST_CASE("span labeling rejects targets that do not parse") {
  try {
    label_token_spans("this is not judge output at all", JudgeMode::single, kFiveTier);
    FAIL("unparseable target must raise");
  } catch (const Error& error) {
    CHECK(error.code() == ErrorCode::ParseFailure);
    CHECK(std::string(error.what()).find("not valid single judge output") != std::string::npos);
  }
  try {
    const std::string graded = render_graded_verdict(make_graded(4, {}, {}));
    label_token_spans(graded, JudgeMode::pairwise, kFiveTier);
    FAIL("mode mismatch must raise");
  } catch (const Error& error) {
    CHECK(error.code() == ErrorCode::ParseFailure);
    CHECK(std::string(error.what()).find("not valid pairwise judge output") != std::string::npos);
  }
}

TEST_CASE("span validation catches malformed layouts") {
  validate_spans({}, 0);  // empty target, empty spans: fine
  validate_spans({{0, 4, SpanKind::sft}}, 4);

  auto code_of = [](const std::vector<TokenSpan>& spans, std::size_t size) {
    try {
      validate_spans(spans, size);
    } catch (const Error& error) {
      return error.code();
    }
    FAIL("expected span validation to raise");
    return ErrorCode::IoError;
  };
  CHECK(code_of({}, 3) == ErrorCode::ParseFailure);                              // nothing covers
  CHECK(code_of({{1, 4, SpanKind::sft}}, 4) == ErrorCode::ParseFailure);         // late start
  CHECK(code_of({{0, 0, SpanKind::sft}}, 0) == ErrorCode::ParseFailure);         // empty span
  CHECK(code_of({{0, 2, SpanKind::sft}, {3, 4, SpanKind::sim}}, 4) ==
        ErrorCode::ParseFailure);                                                // gap
  CHECK(code_of({{0, 2, SpanKind::sft}}, 4) == ErrorCode::ParseFailure);         // short cover
}

TEST_CASE("score balancing caps over-represented buckets") {
  std::vector<SftRecord> records;
  int counter = 0;
  for (int score : {5, 5, 5, 5, 1, 2, 2, 3})
    records.push_back(make_balance_record("r" + std::to_string(counter++), score));

  const std::map<int, std::size_t> histogram = score_histogram(records);
  CHECK(histogram == std::map<int, std::size_t>{{1, 1}, {2, 2}, {3, 1}, {5, 4}});

  SUBCASE("default cap is the median bucket count") {
    // Bucket counts 1, 2, 1, 4 -> sorted 1 1 2 4 -> floor of mean(1, 2) = 1.
    const std::vector<SftRecord> balanced = balance_by_score(records, std::nullopt, 11);
    const std::map<int, std::size_t> after = score_histogram(balanced);
    CHECK(after == std::map<int, std::size_t>{{1, 1}, {2, 1}, {3, 1}, {5, 1}});

    // Survivors keep their input order and identity.
    std::vector<std::string> ids = ids_of(balanced);
    std::vector<std::string> input_order;
    for (const SftRecord& record : records)
      for (const std::string& id : ids)
        if (record.meta.record_id == id) input_order.push_back(id);
    CHECK(ids == input_order);

    // Determinism: the same seed picks the same survivors.
    CHECK(ids_of(balance_by_score(records, std::nullopt, 11)) == ids);
  }

  SUBCASE("an explicit target caps only the scores it lists") {
    const std::map<int, std::size_t> target = {{5, 2}};
    const std::vector<SftRecord> balanced = balance_by_score(records, target, 11);
    CHECK(score_histogram(balanced) ==
          std::map<int, std::size_t>{{1, 1}, {2, 2}, {3, 1}, {5, 2}});
  }

  SUBCASE("odd bucket-count median") {
    records.push_back(make_balance_record("r8", 4));  // counts 1, 2, 1, 1, 4 -> median 1
    const std::vector<SftRecord> balanced = balance_by_score(records, std::nullopt, 11);
    for (const auto& [score, count] : score_histogram(balanced)) CHECK(count == 1);
  }

  SUBCASE("records without an overall score are rejected") {
    SftRecord unscored;
    unscored.meta.record_id = "r-none";
    records.push_back(unscored);
    try {
      balance_by_score(records, std::nullopt, 11);
      FAIL("missing overall must raise");
    } catch (const Error& error) {
      CHECK(error.code() == ErrorCode::MissingScore);
    }
    try {
      score_histogram(records);
      FAIL("missing overall must raise");
    } catch (const Error& error) {
      CHECK(error.code() == ErrorCode::MissingScore);
    }
  }
}

TEST_CASE("mirroring a pairwise record swaps every order-dependent part") {
  const SftRecord record = make_pairwise_record(
      "pw-7", PairwiseWinner::response_1, 4, 2,
      "Response 1 stays on topic while Response 2 drifts");
  const SftRecord twin = mirror_pairwise_record(record);

  CHECK(twin.meta.record_id == "pw-7-swapped");
  CHECK(twin.meta.winner == PairwiseWinner::response_2);

  // The twin's target parses to the mirrored verdict.
  const PairwiseVerdict twin_verdict = parse_pairwise_verdict(twin.target, kFiveTier);
  CHECK(twin_verdict.winner == PairwiseWinner::response_2);
  CHECK(twin_verdict.score_1 == 2);
  CHECK(twin_verdict.score_2 == 4);
  REQUIRE(twin_verdict.rationale.size() == 1);
  CHECK(twin_verdict.rationale[0].text ==
        "Response 2 stays on topic while Response 1 drifts");
  CHECK(twin_verdict.rationale[0].score_1 == 2);
  CHECK(twin_verdict.rationale[0].score_2 == 4);

  // The prompt presents the responses in the opposite order.
  CHECK(twin.prompt.find("[Response 1]: Second response body for pw-7") != std::string::npos);
  CHECK(twin.prompt.find("[Response 2]: First response body for pw-7") != std::string::npos);

  // The spans were recomputed for the new target.
  validate_spans(twin.spans, twin.target.size());
  CHECK(twin.spans == label_token_spans(twin.target, JudgeMode::pairwise, kFiveTier));

  SUBCASE("mirroring is an involution") {
    const SftRecord back = mirror_pairwise_record(twin);
    CHECK(back.prompt == record.prompt);
    CHECK(back.target == record.target);
    CHECK(back.spans == record.spans);
    CHECK(back.meta.record_id == record.meta.record_id);
    CHECK(back.meta.winner == record.meta.winner);
  }

  SUBCASE("a tie's twin still swaps scores and responses") {
    const SftRecord tie = make_pairwise_record("pw-tie", PairwiseWinner::tie, 3, 4,
                                               "Both cover the request adequately");
    const SftRecord tie_twin = mirror_pairwise_record(tie);
    CHECK(tie_twin.meta.winner == PairwiseWinner::tie);
    const PairwiseVerdict verdict = parse_pairwise_verdict(tie_twin.target, kFiveTier);
    CHECK(verdict.winner == PairwiseWinner::tie);
    CHECK(verdict.score_1 == 4);
    CHECK(verdict.score_2 == 3);
  }

  SUBCASE("non-pairwise records are rejected") {
    SftRecord graded;
    graded.target = render_graded_verdict(make_graded(4, {}, {}));
    graded.meta.mode = JudgeMode::single;
    try {
      mirror_pairwise_record(graded);
      FAIL("graded record must raise");
    } catch (const Error& error) {
      CHECK(error.code() == ErrorCode::NotPairwise);
    }
  }
}

TEST_CASE("pairwise doubling interleaves originals with their twins") {
  std::vector<SftRecord> records = {
      make_pairwise_record("a", PairwiseWinner::response_1, 5, 1, "Response 1 is complete"),
      make_pairwise_record("b", PairwiseWinner::tie, 3, 3, ""),
      make_pairwise_record("c", PairwiseWinner::response_2, 2, 4, "Response 2 rhymes properly"),
  };
  const std::vector<SftRecord> doubled = double_pairwise(records);
  REQUIRE(doubled.size() == 6);
  CHECK(ids_of(doubled) == std::vector<std::string>{"a", "a-swapped", "b", "b-swapped", "c",
                                                    "c-swapped"});
  CHECK(double_pairwise({}).empty());
}

TEST_CASE("criteria regression") {
  SUBCASE("noiseless data is recovered to machine precision") {
    detail::Rng rng(42);
    const std::vector<double> true_weights = {0.5, 0.3, 0.2};
    const double true_intercept = 0.4;
    std::vector<RegressionRow> rows;
    for (int i = 0; i < 40; ++i) {
      RegressionRow row;
      double overall = true_intercept;
      for (double weight : true_weights) {
        const double feature = 1.0 + 4.0 * rng.unit();
        row.sub_scores.push_back(feature);
        overall += weight * feature;
      }
      row.overall = overall;
      rows.push_back(row);
    }

    const RegressionModel model = fit_criteria_regression(rows, 0.0);
    REQUIRE(model.weights.size() == 3);
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(std::abs(model.weights[j] - true_weights[j]) <= 1e-8);
    CHECK(std::abs(model.intercept - true_intercept) <= 1e-8);

    double total_error = 0.0;
    for (const RegressionRow& row : rows)
      total_error += std::abs(model.predict_raw(row.sub_scores) - row.overall);
    CHECK(total_error / static_cast<double>(rows.size()) <= 1e-6);
  }

  SUBCASE("noisy data generalizes to held-out rows") {
    detail::Rng rng(2024);
    const std::vector<double> true_weights = {0.45, 0.35, 0.20};
    const double true_intercept = 0.5;
    auto make_row = [&](bool noisy) {
      RegressionRow row;
      double clean = true_intercept;
      for (double weight : true_weights) {
        const double feature = 1.0 + 4.0 * rng.unit();
        row.sub_scores.push_back(feature);
        clean += weight * feature;
      }
      row.overall = noisy ? clean + 0.1 * rng.normal() : clean;
      return row;
    };

    std::vector<RegressionRow> train;
    for (int i = 0; i < 60; ++i) train.push_back(make_row(true));
    const RegressionModel model = fit_criteria_regression(train);

    double held_out_error = 0.0;
    const int held_out = 40;
    for (int i = 0; i < held_out; ++i) {
      const RegressionRow row = make_row(false);  // clean ground truth
      held_out_error += std::abs(model.predict_raw(row.sub_scores) - row.overall);
    }
    CHECK(held_out_error / held_out <= 0.15);
  }

  SUBCASE("a single row fits exactly through the intercept") {
    const RegressionModel model =
        fit_criteria_regression({RegressionRow{{3.0, 4.0}, 3.5}});
    CHECK(model.weights == std::vector<double>{0.0, 0.0});
    CHECK(model.intercept == 3.5);
    CHECK(model.predict_raw({{1.0}, {5.0}}) == 3.5);
  }

  SUBCASE("missing sub-scores are imputed with the training means") {
    RegressionModel model;
    model.weights = {1.0, 2.0};
    model.intercept = 0.0;
    model.feature_means = {3.0, 6.0};
    CHECK(model.predict_raw({std::nullopt, std::nullopt}) == 15.0);  // 1*3 + 2*6
    CHECK(model.predict_raw({{5.0}, std::nullopt}) == 17.0);         // 1*5 + 2*6

    // Fitting with gaps uses observed-only means per feature.
    std::vector<RegressionRow> rows = {
        RegressionRow{{2.0, std::nullopt}, 2.0},
        RegressionRow{{4.0, 6.0}, 4.0},
        RegressionRow{{6.0, 6.0}, 6.0},
    };
    const RegressionModel fitted = fit_criteria_regression(rows);
    CHECK(std::abs(fitted.feature_means[0] - 4.0) <= 1e-12);
    CHECK(std::abs(fitted.feature_means[1] - 6.0) <= 1e-12);
  }

  SUBCASE("prediction clamps and rounds into the rating scale") {
    RegressionModel model;
    model.weights = {1.0};
    model.intercept = 0.0;
    model.feature_means = {0.0};
    CHECK(model.predict({{4.6}}, kFiveTier) == 5);
    CHECK(model.predict({{3.5}}, kFiveTier) == 4);   // half rounds up
    CHECK(model.predict({{7.2}}, kFiveTier) == 5);   // clamped high
    CHECK(model.predict({{0.2}}, kFiveTier) == 1);   // clamped low
    CHECK(model.predict({{-3.0}}, kFiveTier) == 1);
  }

  SUBCASE("error cases") {
    CHECK_THROWS_AS(fit_criteria_regression({}), Error);

    try {
      fit_criteria_regression({RegressionRow{{1.0, 2.0}, 1.0}, RegressionRow{{1.0}, 2.0}});
      FAIL("ragged rows must raise");
    } catch (const Error& error) {
      CHECK(error.code() == ErrorCode::LengthMismatch);
    }

    RegressionModel model;
    model.weights = {1.0, 1.0};
    model.feature_means = {0.0, 0.0};
    CHECK_THROWS_AS(model.predict_raw({{1.0}}), Error);

    // A constant feature makes the unregularized system singular.
    std::vector<RegressionRow> degenerate = {
        RegressionRow{{1.0, 1.0}, 1.0},
        RegressionRow{{1.0, 2.0}, 2.0},
        RegressionRow{{1.0, 3.0}, 3.0},
    };
    try {
      fit_criteria_regression(degenerate, 0.0);
      FAIL("singular system must raise");
    } catch (const Error& error) {
      CHECK(error.code() == ErrorCode::ZeroVariance);
    }
    // The default ridge makes the same data fit cleanly.
    const RegressionModel ridged = fit_criteria_regression(degenerate);
    CHECK(std::abs(ridged.predict_raw({{1.0}, {2.0}}) - 2.0) <= 0.01);
  }
}

}  // TEST_SUITE
