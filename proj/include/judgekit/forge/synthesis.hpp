#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "judgekit/catalog.hpp"
#include "judgekit/gateway/gateway.hpp"
#include "judgekit/prompts/render.hpp"
#include "judgekit/types.hpp"

namespace judgekit::forge {

// Where synthesized instructions come from: reference-based questioning
// (reference text + three seed examples) or a role-playing quiz spec.
struct SynthesisSource {
  enum class Kind { reference, quiz };

  Kind kind = Kind::reference;
  std::string reference_text;
  std::vector<std::string> seed_examples;
  prompts::QuizSpec quiz;
  int batch_count = 5;  // questioning pairs requested per call
};

struct SynthesisResult {
  std::vector<Instruction> instructions;
  // True when the model could not produce `requested` distinct instructions
  // (refusals, duplicates); the caller decides whether that is fatal.
  bool underproduced = false;
  int requested = 0;
};

// Asks the model for instructions in batches until `count` distinct ones are
// collected or the batch budget runs out. Replies that match the refusal
// sentence contribute zero items; structurally unparseable replies raise
// ParseFailure. Instruction ids are "<prefix>-<n>" with n counting from 1.
SynthesisResult synthesize_instructions(const Scenario& scenario, const SynthesisSource& source,
                                        int count, gateway::Gateway& gateway,
                                        const prompts::PromptLibrary& lib,
                                        const std::string& model, const std::string& id_prefix);

// Parses "QUESTION: ... ANSWER: ... LEVEL: ... [END OF QA PAIR]" blocks.
// A refusal reply yields an empty list; a non-refusal reply with no valid
// block raises ParseFailure.
std::vector<Instruction> parse_qa_blocks(const std::string& reply, const Scenario& scenario);

// Parses one-JSON-object-per-line quiz replies. "question" is required per
// line; "answer" (reading quizzes) becomes the reference answer; other fields
// land in meta. A reply with no valid line raises ParseFailure.
std::vector<Instruction> parse_quiz_lines(const std::string& reply, const Scenario& scenario);

struct CollectFailure {
  std::string instruction_id;
  std::string model;
  std::string error;
};

struct CollectOutcome {
  std::vector<ResponseRecord> responses;
  std::vector<CollectFailure> failures;
};

// Fans each instruction out to every model through the gateway; failures are
// collected, not thrown, so one dead model cannot sink a batch.
CollectOutcome collect_responses(const std::vector<Instruction>& instructions,
                                 const std::vector<std::string>& models,
                                 gateway::Gateway& gateway, int parallelism = 0);

}  // namespace judgekit::forge
