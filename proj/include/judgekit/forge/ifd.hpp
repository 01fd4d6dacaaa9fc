#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "judgekit/gateway/scorer.hpp"

namespace judgekit::forge {

// Instruction-following difficulty of one (question, answer) pair:
// the ratio of the answer's conditioned loss to its unconditioned loss.
// Values near 1 mean the question barely helps predict the answer; values
// above 1 mean it actively hurts (hallucination suspect).
struct IfdScore {
  std::string record_id;
  std::string scenario;
  double conditioned_loss = 0.0;    // -sum log P(token | question, prefix)
  double unconditioned_loss = 0.0;  // -sum log P(token | prefix)
  double ifd = 0.0;
  double scenario_z = 0.0;  // filled by fill_scenario_z
};

// Scores one pair through the given scorer. EmptyText on an empty answer,
// DegenerateAnswer when the unconditioned loss is zero, ScorerFailure when
// the scorer itself fails.
IfdScore ifd_score(const std::string& question, const std::string& answer,
                   gateway::TokenScorer& scorer, const std::string& record_id = "",
                   const std::string& scenario = "");

// Computes each score's z-value within its own scenario (sample std; a
// scenario with fewer than two records or zero variance gets all-zero z).
void fill_scenario_z(std::vector<IfdScore>& scores);

struct SelectionPolicy {
  enum class Kind {
    drop_above_one,  // drop ifd > 1 (hallucination filter)
    scenario_z,      // additionally drop scenario_z > z_threshold
  };

  Kind kind = Kind::drop_above_one;
  double z_threshold = 3.0;
};

// Record ids that survive the policy filter, ordered by descending IFD
// (hardest first), truncated to `budget`. EmptyAfterFilter when the filter
// leaves nothing.
std::vector<std::string> select_by_ifd(const std::vector<IfdScore>& scores, std::size_t budget,
                                       const SelectionPolicy& policy = {});

}  // namespace judgekit::forge
