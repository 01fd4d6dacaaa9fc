#include "judgekit/prompts/library.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "judgekit/errors.hpp"
#include "judgekit/rating.hpp"

namespace judgekit::prompts {

TierTable TierTable::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::IoError, "cannot read tier table " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::ConfigError, std::string("tier table is not valid JSON: ") + e.what());
  }
  const auto descriptions = doc.value("descriptions", nlohmann::json::array());
  if (descriptions.size() != 5)
    raise(ErrorCode::ConfigError, "tier table needs exactly five descriptions");
  TierTable table;
  for (std::size_t i = 0; i < 5; ++i) table.descriptions[i] = descriptions[i].get<std::string>();
  table.reference_sentence = doc.value("reference_sentence", "");
  table.superior_sentence = doc.value("superior_sentence", "");
  if (table.reference_sentence.empty() || table.superior_sentence.empty())
    raise(ErrorCode::ConfigError, "tier table needs reference and superior sentences");
  return table;
}

int TierTable::reference_tier(const RatingSystem& rating) {
  return remap_rating(4, RatingSystem::of(RatingKind::five_tier), rating);
}

std::string TierTable::render_block(const RatingSystem& rating) const {
  const int tiers = rating.size();
  const int ref_tier = reference_tier(rating);
  std::string out;
  for (int i = 0; i < tiers; ++i) {
    const int tier = rating.min + i;
    // Nearest five-point anchor for this tier (affine, round half up).
    const int anchor =
        tiers == 1 ? 5
                   : 1 + round_half_up(static_cast<double>(i) * 4.0 / (tiers - 1));
    if (i > 0) out += "\n\n";
    out += std::to_string(tier) + " " + descriptions[static_cast<std::size_t>(anchor - 1)];
    if (tier == ref_tier) out += " " + reference_sentence;
    if (tier == rating.max && ref_tier != rating.max) out += " " + superior_sentence;
  }
  return out;
}

std::string ordinal(int n) {
  const int mod100 = n % 100;
  const char* suffix = "th";
  if (mod100 < 11 || mod100 > 13) {
    switch (n % 10) {
      case 1: suffix = "st"; break;
      case 2: suffix = "nd"; break;
      case 3: suffix = "rd"; break;
      default: break;
    }
  }
  return std::to_string(n) + suffix;
}

PromptLibrary PromptLibrary::load(const std::string& data_dir) {
  const std::string base = data_dir + "/templates/";
  PromptLibrary lib;
  lib.judge_single = TemplateText::load_file(base + "judge_single.tmpl");
  lib.judge_reference = TemplateText::load_file(base + "judge_reference.tmpl");
  lib.judge_pairwise = TemplateText::load_file(base + "judge_pairwise.tmpl");
  lib.classification = TemplateText::load_file(base + "classification.tmpl");
  lib.questioning = TemplateText::load_file(base + "questioning.tmpl");
  lib.quiz_math = TemplateText::load_file(base + "quiz_math.tmpl");
  lib.quiz_programming = TemplateText::load_file(base + "quiz_programming.tmpl");
  lib.quiz_reading = TemplateText::load_file(base + "quiz_reading.tmpl");
  lib.tiers = TierTable::load_file(base + "grading_tiers.json");
  return lib;
}

}  // namespace judgekit::prompts
