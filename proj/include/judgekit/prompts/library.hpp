#pragma once

#include <array>
#include <string>

#include "judgekit/prompts/template.hpp"
#include "judgekit/rating.hpp"

namespace judgekit::prompts {

// Tier wording shared by all graded prompts. The five descriptions anchor a
// five-point scale; other scales borrow the nearest anchor per tier (affine
// interpolation, round half up). The reference sentence goes on the tier a
// reference answer exemplifies (the five-tier-4 equivalent under the target
// scale); the superior sentence goes on the top tier when that is a
// different tier.
struct TierTable {
  std::array<std::string, 5> descriptions;
  std::string reference_sentence;
  std::string superior_sentence;

  static TierTable load_file(const std::string& path);

  std::string render_block(const RatingSystem& rating) const;

  // Tier exemplified by a reference answer under `rating`.
  static int reference_tier(const RatingSystem& rating);
};

// English ordinal ("1st", "2nd", "3rd", "4th", ...).
std::string ordinal(int n);

// All prompt templates plus the tier table, loaded from a data directory
// (see default_data_dir()).
struct PromptLibrary {
  TemplateText judge_single;
  TemplateText judge_reference;
  TemplateText judge_pairwise;
  TemplateText classification;
  TemplateText questioning;
  TemplateText quiz_math;
  TemplateText quiz_programming;
  TemplateText quiz_reading;
  TierTable tiers;

  static PromptLibrary load(const std::string& data_dir);
};

}  // namespace judgekit::prompts
