#pragma once

#include <optional>
#include <string>
#include <vector>

#include "judgekit/catalog.hpp"
#include "judgekit/prompts/library.hpp"
#include "judgekit/types.hpp"

namespace judgekit::prompts {

// A finished prompt plus the phrases that must appear in it exactly once;
// renderers enforce the invariant, tests pin it.
struct PromptBundle {
  std::string text;
  std::vector<std::string> anchors;
  std::string family;  // e.g. "judge/single", "quiz/math"
};

// Scenario-routed evaluation prompt for a judge task (all three modes).
PromptBundle render_judge_prompt(const PromptLibrary& lib, const JudgeTask& task,
                                 const ScenarioCatalog& catalog);

// Scenario-classification prompt enumerating every catalog scenario.
PromptBundle render_classification_prompt(const PromptLibrary& lib, const std::string& instruction,
                                          const ScenarioCatalog& catalog);

// Reference-based questioning prompt. Exactly three seed examples
// (WrongSeedCount); non-empty reference text (MissingReference); batch >= 1.
PromptBundle render_questioning_prompt(const PromptLibrary& lib, const Scenario& scenario,
                                       const std::string& reference_text,
                                       const std::vector<std::string>& seed_examples,
                                       int batch_count = 5);

enum class QuizKind { math, programming, reading };

const char* quiz_kind_name(QuizKind kind);
QuizKind quiz_kind_from_name(const std::string& name);

struct QuizSpec {
  QuizKind kind = QuizKind::math;
  std::string difficulty = "medium";
  std::string audience;
  std::string subject;  // subject (math) or theme/topic (programming)
  std::string language = "English";
  std::optional<std::string> company;           // programming only
  std::optional<std::string> reading_material;  // reading only
  int count = 10;
};

// Role-playing quiz prompt. programming requires company, reading requires
// reading_material (MissingField).
PromptBundle render_quiz_prompt(const PromptLibrary& lib, const QuizSpec& spec);

// Rewrites a graded evaluation prompt in place from one rating scale to
// another: tier block, scale header, step wording, and the bracketed output
// skeletons. The prompt must have been rendered under `from`.
std::string retarget_prompt_rating(const std::string& prompt, const RatingSystem& from,
                                   const RatingSystem& to, const TierTable& tiers);

}  // namespace judgekit::prompts
