#include "judgekit/types.hpp"

#include <set>

#include "judgekit/errors.hpp"

namespace judgekit {

const char* instruction_source_name(InstructionSource source) {
  switch (source) {
    case InstructionSource::reference_questioning: return "reference_questioning";
    case InstructionSource::role_play_quiz: return "role_play_quiz";
    case InstructionSource::benchmark: return "benchmark";
    case InstructionSource::manual: return "manual";
  }
  return "manual";
}

InstructionSource instruction_source_from_name(const std::string& name) {
  if (name == "reference_questioning") return InstructionSource::reference_questioning;
  if (name == "role_play_quiz") return InstructionSource::role_play_quiz;
  if (name == "benchmark") return InstructionSource::benchmark;
  if (name == "manual") return InstructionSource::manual;
  raise(ErrorCode::ConfigError, "unknown instruction source '" + name + "'");
}

const char* judge_mode_name(JudgeMode mode) {
  switch (mode) {
    case JudgeMode::single: return "single";
    case JudgeMode::reference_guided: return "reference_guided";
    case JudgeMode::pairwise: return "pairwise";
  }
  return "single";
}

JudgeMode judge_mode_from_name(const std::string& name) {
  if (name == "single") return JudgeMode::single;
  if (name == "reference_guided") return JudgeMode::reference_guided;
  if (name == "pairwise") return JudgeMode::pairwise;
  raise(ErrorCode::ConfigError, "unknown judge mode '" + name + "'");
}

const char* pairwise_winner_name(PairwiseWinner winner) {
  switch (winner) {
    case PairwiseWinner::response_1: return "response_1";
    case PairwiseWinner::response_2: return "response_2";
    case PairwiseWinner::tie: return "tie";
  }
  return "tie";
}

PairwiseWinner pairwise_winner_from_name(const std::string& name) {
  if (name == "response_1") return PairwiseWinner::response_1;
  if (name == "response_2") return PairwiseWinner::response_2;
  if (name == "tie") return PairwiseWinner::tie;
  raise(ErrorCode::ConfigError, "unknown pairwise winner '" + name + "'");
}

void JudgeTask::validate(const ScenarioCatalog& catalog) const {
  const Scenario& scenario = catalog.by_id(instruction.scenario);

  const std::size_t expected = mode == JudgeMode::pairwise ? 2 : 1;
  if (responses.size() != expected)
    raise(ErrorCode::WrongResponseCount,
          std::string(judge_mode_name(mode)) + " grading takes " + std::to_string(expected) +
              " response(s), got " + std::to_string(responses.size()));

  if (mode == JudgeMode::reference_guided &&
      (!instruction.reference_answer || instruction.reference_answer->empty()))
    raise(ErrorCode::MissingReference,
          "reference-guided grading needs instruction.reference_answer");

  if (!effective_criteria.empty()) {
    std::set<std::string> known;
    for (const auto& c : scenario.criteria) known.insert(c.name);
    for (const auto& name : effective_criteria)
      if (!known.count(name))
        raise(ErrorCode::MissingField,
              "criterion '" + name + "' is not part of scenario " + scenario.id);
  }

  for (const auto& response : responses)
    if (response.instruction_id != instruction.id)
      raise(ErrorCode::IdMismatch, "response for '" + response.instruction_id +
                                       "' attached to instruction '" + instruction.id + "'");

  if (!rating.contains(rating.min) || rating.min > rating.max)
    raise(ErrorCode::ConfigError, "rating system bounds are inverted");
}

}  // namespace judgekit
