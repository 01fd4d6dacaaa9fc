#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "judgekit/catalog.hpp"
#include "judgekit/forge/regression.hpp"
#include "judgekit/forge/sft.hpp"
#include "judgekit/prompts/library.hpp"
#include "judgekit/rating.hpp"

namespace judgekit::forge {

struct AugmentOptions {
  // Relative weights of the four per-record transforms:
  // [0] criteria rephrasing, [1] criteria down-sampling + regressed overall,
  // [2] rating-scale remap, [3] identity.
  std::array<double, 4> mix_weights{1.0, 1.0, 1.0, 1.0};

  // Chance that an individual criterion is swapped for an alias (given the
  // rephrase transform was drawn and a gate-passing alias exists).
  double rephrase_prob = 1.0;

  // Inclusive bounds on the surviving criteria count for down-sampling.
  int downsample_min = 2;
  int downsample_max = 5;

  // Candidate scales for the remap transform; the current scale is skipped.
  std::vector<RatingSystem> rating_targets;

  // Maps sub-scores to a replacement overall after down-sampling; without it
  // the down-sample transform raises NoRegressionModel.
  std::optional<RegressionModel> regression;

  // Jaccard acceptance bound for aliases (see prompts::similarity_gate).
  double similarity_threshold = 0.4;
};

// One output record per input record, transformed by a seeded weighted draw
// from the four transforms above. Records keep their prompt/target coupled:
// every rewrite is applied to both sides and spans are recomputed, so each
// output still parses under its (possibly new) rating scale.
std::vector<SftRecord> augment_custom_prompts(const std::vector<SftRecord>& records,
                                              const AugmentOptions& options,
                                              const ScenarioCatalog& catalog,
                                              const prompts::PromptLibrary& lib,
                                              std::uint64_t seed);

}  // namespace judgekit::forge
