#include "judgekit/prompts/render.hpp"

#include <map>

#include "judgekit/detail/strings.hpp"
#include "judgekit/errors.hpp"

namespace judgekit::prompts {

namespace {

// Criteria render as consecutive numbered lines, most important first.
std::string criteria_block(const std::vector<Criterion>& criteria) {
  std::string out;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (i > 0) out += '\n';
    out += std::to_string(i + 1);
    out += ". ";
    out += criteria[i].name;
    out += ": ";
    out += criteria[i].description;
  }
  return out;
}

// Every anchor phrase must survive rendering exactly once; a miss means the
// template was edited out from under us, a duplicate means injected data
// collided with the skeleton.
void enforce_anchors(const PromptBundle& bundle) {
  for (const std::string& anchor : bundle.anchors) {
    std::size_t first = bundle.text.find(anchor);
    if (first == std::string::npos)
      raise(ErrorCode::ConfigError, bundle.family + " prompt lost required phrase: " + anchor);
    if (bundle.text.find(anchor, first + anchor.size()) != std::string::npos)
      raise(ErrorCode::ConfigError, bundle.family + " prompt repeats required phrase: " + anchor);
  }
}

const std::vector<std::string>& graded_base_anchors() {
  static const std::vector<std::string> anchors = {
      "Your task is to evaluate the quality of AI responses",
      "[Criteria Begin]",
      "[Criteria End]",
      "[Grading Tiers Begin]",
      "[Grading Tiers End]",
      "[Data Begin]",
      "[Data End]",
      "keep the `[[' and `]]' symbols",
  };
  return anchors;
}

}  // namespace

PromptBundle render_judge_prompt(const PromptLibrary& lib, const JudgeTask& task,
                                 const ScenarioCatalog& catalog) {
  task.validate(catalog);
  const Scenario& scenario = catalog.by_id(task.instruction.scenario);

  std::vector<Criterion> chosen;
  if (task.effective_criteria.empty()) {
    chosen = scenario.criteria;
  } else {
    for (const std::string& name : task.effective_criteria) {
      for (const Criterion& criterion : scenario.criteria) {
        if (criterion.name == name) {
          chosen.push_back(criterion);
          break;
        }
      }
    }
  }

  std::map<std::string, std::string> values = {
      {"scenario_name", scenario.name},
      {"scenario_description", scenario.description},
      {"criteria_block", criteria_block(chosen)},
      {"rating_label", task.rating.label()},
      {"rating_range", task.rating.range_text()},
      {"grading_tiers", lib.tiers.render_block(task.rating)},
      {"instruction", task.instruction.text},
  };

  PromptBundle bundle;
  bundle.anchors = graded_base_anchors();
  switch (task.mode) {
    case JudgeMode::single:
      values["response"] = task.responses[0].text;
      bundle.family = "judge/single";
      bundle.anchors.push_back("I believe the overall rating of this response is");
      bundle.anchors.push_back("Strengths of the current response:");
      bundle.anchors.push_back("Shortcomings of the current response:");
      bundle.text = lib.judge_single.render(values);
      break;
    case JudgeMode::reference_guided:
      values["response"] = task.responses[0].text;
      values["reference_answer"] = *task.instruction.reference_answer;
      values["reference_tier"] =
          ordinal(TierTable::reference_tier(task.rating));
      bundle.family = "judge/reference";
      bundle.anchors.push_back("[Reference answer]: ");
      bundle.anchors.push_back("the reference answer may not be the only possible one");
      bundle.anchors.push_back("I believe the overall rating of this response is");
      bundle.anchors.push_back("Strengths of the current response:");
      bundle.anchors.push_back("Shortcomings of the current response:");
      bundle.text = lib.judge_reference.render(values);
      break;
    case JudgeMode::pairwise:
      values["response_1"] = task.responses[0].text;
      values["response_2"] = task.responses[1].text;
      values["rating_range_words"] = task.rating.range_words();
      bundle.family = "judge/pairwise";
      bundle.anchors.push_back("[Response 1]: ");
      bundle.anchors.push_back("[Response 2]: ");
      bundle.anchors.push_back("[[Response 1 is better]]");
      bundle.anchors.push_back("[[Response 2 is better]]");
      bundle.anchors.push_back("[[Both Responses are tied]]");
      bundle.text = lib.judge_pairwise.render(values);
      break;
  }
  enforce_anchors(bundle);
  return bundle;
}

PromptBundle render_classification_prompt(const PromptLibrary& lib, const std::string& instruction,
                                          const ScenarioCatalog& catalog) {
  if (detail::trim(instruction).empty())
    raise(ErrorCode::EmptyInstruction, "cannot classify an empty instruction");

  std::string listing;
  const auto& scenarios = catalog.scenarios();
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    if (i > 0) listing += "\n\n";
    listing += std::to_string(i + 1);
    listing += ". ";
    listing += scenarios[i].name;
    listing += ": ";
    listing += scenarios[i].description;
  }

  PromptBundle bundle;
  bundle.family = "classification";
  bundle.text = lib.classification.render({
      {"scenario_count", std::to_string(scenarios.size())},
      {"scenario_list", listing},
      {"instruction", instruction},
  });
  bundle.anchors = {
      "Please determine which scenario this query belongs to",
      "you can classify it as \"default\"",
      "Please directly provide the name of the scenario.",
  };
  enforce_anchors(bundle);
  return bundle;
}

PromptBundle render_questioning_prompt(const PromptLibrary& lib, const Scenario& scenario,
                                       const std::string& reference_text,
                                       const std::vector<std::string>& seed_examples,
                                       int batch_count) {
  if (seed_examples.size() != 3)
    raise(ErrorCode::WrongSeedCount, "questioning needs exactly 3 seed examples, got " +
                                         std::to_string(seed_examples.size()));
  if (detail::trim(reference_text).empty())
    raise(ErrorCode::MissingReference, "questioning needs a non-empty reference text");
  if (batch_count < 1)
    raise(ErrorCode::OutOfRange,
          "questioning batch count must be positive, got " + std::to_string(batch_count));

  PromptBundle bundle;
  bundle.family = "questioning";
  bundle.text = lib.questioning.render({
      {"scenario_name", scenario.name},
      {"scenario_description", scenario.description},
      {"reference_text", reference_text},
      {"example_1", seed_examples[0]},
      {"example_2", seed_examples[1]},
      {"example_3", seed_examples[2]},
      {"batch_count", std::to_string(batch_count)},
  });
  bundle.anchors = {
      "sets of question-answer pairs that meet the requirements:",
      "does not contain enough information related to",
      "[END OF QA PAIR]",
  };
  enforce_anchors(bundle);
  return bundle;
}

const char* quiz_kind_name(QuizKind kind) {
  switch (kind) {
    case QuizKind::math:
      return "math";
    case QuizKind::programming:
      return "programming";
    case QuizKind::reading:
      return "reading";
  }
  return "math";
}

QuizKind quiz_kind_from_name(const std::string& name) {
  if (name == "math") return QuizKind::math;
  if (name == "programming") return QuizKind::programming;
  if (name == "reading") return QuizKind::reading;
  raise(ErrorCode::ConfigError, "unknown quiz kind: " + name);
}

PromptBundle render_quiz_prompt(const PromptLibrary& lib, const QuizSpec& spec) {
  if (spec.count < 1)
    raise(ErrorCode::OutOfRange, "quiz count must be positive, got " + std::to_string(spec.count));

  PromptBundle bundle;
  switch (spec.kind) {
    case QuizKind::math:
      if (spec.audience.empty()) raise(ErrorCode::MissingField, "math quiz needs an audience");
      if (spec.subject.empty()) raise(ErrorCode::MissingField, "math quiz needs a subject");
      bundle.family = "quiz/math";
      bundle.text = lib.quiz_math.render({
          {"count", std::to_string(spec.count)},
          {"difficulty", spec.difficulty},
          {"audience", spec.audience},
          {"subject", spec.subject},
          {"language", spec.language},
      });
      bundle.anchors = {
          "proficiency in mathematics",
          "strictly follow my instructions regarding the number of questions",
          "jsonl format",
      };
      break;
    case QuizKind::programming:
      if (!spec.company || spec.company->empty())
        raise(ErrorCode::MissingField, "programming quiz needs a company");
      if (spec.audience.empty())
        raise(ErrorCode::MissingField, "programming quiz needs an audience");
      if (spec.subject.empty()) raise(ErrorCode::MissingField, "programming quiz needs a topic");
      bundle.family = "quiz/programming";
      bundle.text = lib.quiz_programming.render({
          {"count", std::to_string(spec.count)},
          {"difficulty", spec.difficulty},
          {"audience", spec.audience},
          {"topic", spec.subject},
          {"language", spec.language},
          {"company", *spec.company},
      });
      bundle.anchors = {
          "programming or code analysis questions",
          "ranging from 30 to 50 lines",
          "Stick strictly to your role",
          "jsonl format",
      };
      break;
    case QuizKind::reading:
      if (!spec.reading_material || detail::trim(*spec.reading_material).empty())
        raise(ErrorCode::MissingField, "reading quiz needs reading material");
      bundle.family = "quiz/reading";
      bundle.text = lib.quiz_reading.render({
          {"count", std::to_string(spec.count)},
          {"language", spec.language},
          {"reading_material", *spec.reading_material},
      });
      bundle.anchors = {
          "You are now a language expert",
          "The reading material is as follows:",
          "jsonl format",
      };
      break;
  }
  enforce_anchors(bundle);
  return bundle;
}

namespace {

// replace_all that reports how many times it fired.
std::size_t count_replace(std::string& text, const std::string& from, const std::string& to) {
  if (from.empty()) return 0;
  std::size_t count = 0;
  std::size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
    ++count;
  }
  return count;
}

std::string scale_header(const RatingSystem& rating) {
  return "The grading uses a " + rating.label() + " system (" + rating.range_text() +
         "), the meanings of each tier are:";
}

}  // namespace

std::string retarget_prompt_rating(const std::string& prompt, const RatingSystem& from,
                                   const RatingSystem& to, const TierTable& tiers) {
  if (from == to) return prompt;

  std::string out = prompt;

  // Tier block: swap everything between the begin/end markers.
  const std::string begin_marker = "[Grading Tiers Begin]\n\n";
  const std::string end_marker = "\n\n[Grading Tiers End]";
  std::size_t block_begin = out.find(begin_marker);
  std::size_t block_end =
      block_begin == std::string::npos ? std::string::npos : out.find(end_marker, block_begin);
  if (block_begin == std::string::npos || block_end == std::string::npos)
    raise(ErrorCode::ParseFailure, "prompt has no grading-tier block to retarget");
  std::size_t content_begin = block_begin + begin_marker.size();
  out.replace(content_begin, block_end - content_begin, tiers.render_block(to));

  // Scale header sentence; its absence means the prompt was not rendered
  // under `from` in the first place.
  if (count_replace(out, scale_header(from), scale_header(to)) != 1)
    raise(ErrorCode::ParseFailure, "prompt does not carry the expected " + from.label() + " (" +
                                       from.range_text() + ") scale header");

  // Output skeletons and step wording. Which of these appear depends on the
  // prompt family, so only the overall count is enforced.
  std::size_t skeletons = 0;
  skeletons += count_replace(out, "[[a score between " + from.range_text() + "]]",
                             "[[a score between " + to.range_text() + "]]");
  skeletons += count_replace(out, "[[a score between " + from.range_words() + "]]",
                             "[[a score between " + to.range_words() + "]]");
  if (skeletons == 0)
    raise(ErrorCode::ParseFailure, "prompt has no bracketed score skeleton to retarget");

  count_replace(out, "assign scores (" + from.range_text() + ")",
                "assign scores (" + to.range_text() + ")");
  count_replace(out, "assign scores (between " + from.range_text() + ")",
                "assign scores (between " + to.range_text() + ")");
  count_replace(out, "(specifically, at the " + ordinal(TierTable::reference_tier(from)) + " tier)",
                "(specifically, at the " + ordinal(TierTable::reference_tier(to)) + " tier)");

  return out;
}

}  // namespace judgekit::prompts
