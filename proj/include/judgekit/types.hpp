#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "judgekit/catalog.hpp"
#include "judgekit/rating.hpp"

namespace judgekit {

enum class InstructionSource { reference_questioning, role_play_quiz, benchmark, manual };

const char* instruction_source_name(InstructionSource source);
InstructionSource instruction_source_from_name(const std::string& name);

struct Instruction {
  std::string id;
  std::string scenario;  // scenario id from the catalog
  std::string text;
  InstructionSource source = InstructionSource::manual;
  std::optional<std::string> reference_answer;
  std::map<std::string, std::string> meta;  // e.g. difficulty level, subject
};

struct ResponseRecord {
  std::string instruction_id;
  std::string model;
  std::string text;
};

enum class JudgeMode { single, reference_guided, pairwise };

const char* judge_mode_name(JudgeMode mode);
JudgeMode judge_mode_from_name(const std::string& name);

// One evaluation unit: an instruction plus the response(s) to grade.
// single / reference_guided take exactly one response; pairwise exactly two.
// reference_guided additionally needs instruction.reference_answer.
struct JudgeTask {
  JudgeMode mode = JudgeMode::single;
  Instruction instruction;
  std::vector<ResponseRecord> responses;
  RatingSystem rating;
  // Criterion names to include in the prompt; empty means the full scenario
  // list. Must name criteria of the instruction's scenario.
  std::vector<std::string> effective_criteria;

  void validate(const ScenarioCatalog& catalog) const;
};

struct ScoredItem {
  std::string text;
  int score = 0;

  bool operator==(const ScoredItem&) const = default;
};

struct GradedVerdict {
  int overall = 0;
  std::vector<ScoredItem> strengths;
  std::vector<ScoredItem> weaknesses;
  std::string raw;  // the judge text this verdict was parsed from (if any)
};

enum class PairwiseWinner { response_1, response_2, tie };

const char* pairwise_winner_name(PairwiseWinner winner);
PairwiseWinner pairwise_winner_from_name(const std::string& name);

struct PairwiseRationale {
  std::string text;
  int score_1 = 0;
  int score_2 = 0;

  bool operator==(const PairwiseRationale&) const = default;
};

struct PairwiseVerdict {
  PairwiseWinner winner = PairwiseWinner::tie;
  int score_1 = 0;
  int score_2 = 0;
  std::vector<PairwiseRationale> rationale;
  std::string raw;
};

}  // namespace judgekit
