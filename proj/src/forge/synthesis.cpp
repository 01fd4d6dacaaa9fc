#include "judgekit/forge/synthesis.hpp"

#include <json.hpp>

#include <set>

#include "judgekit/detail/strings.hpp"
#include "judgekit/errors.hpp"

namespace judgekit::forge {

namespace {

constexpr std::string_view kRefusalOpening =
    "Sorry, this article does not contain enough information";
constexpr std::string_view kBlockEnd = "[END OF QA PAIR]";

bool is_refusal(std::string_view reply) {
  return detail::starts_with(detail::trim(reply), kRefusalOpening);
}

// Text of `field` within `block`, running to the next of `stops` (or the
// block's end). Fields may span lines.
std::optional<std::string> block_field(std::string_view block, std::string_view field,
                                       const std::vector<std::string_view>& stops) {
  std::size_t begin = block.find(field);
  if (begin == std::string_view::npos) return std::nullopt;
  begin += field.size();
  std::size_t end = block.size();
  for (std::string_view stop : stops) {
    std::size_t at = block.find(stop, begin);
    if (at != std::string_view::npos) end = std::min(end, at);
  }
  return std::string(detail::trim(block.substr(begin, end - begin)));
}

}  // namespace

std::vector<Instruction> parse_qa_blocks(const std::string& reply, const Scenario& scenario) {
  if (is_refusal(reply)) return {};

  std::vector<Instruction> instructions;
  std::size_t cursor = 0;
  while (cursor < reply.size()) {
    std::size_t end = reply.find(kBlockEnd, cursor);
    std::string_view block{reply.data() + cursor,
                           (end == std::string::npos ? reply.size() : end) - cursor};
    cursor = end == std::string::npos ? reply.size() : end + kBlockEnd.size();

    auto question = block_field(block, "QUESTION:", {"ANSWER:", "LEVEL:"});
    auto answer = block_field(block, "ANSWER:", {"LEVEL:"});
    auto level = block_field(block, "LEVEL:", {});
    if (!question || question->empty() || !answer || answer->empty()) continue;

    Instruction instruction;
    instruction.scenario = scenario.id;
    instruction.text = *question;
    instruction.source = InstructionSource::reference_questioning;
    instruction.reference_answer = *answer;
    if (level && !level->empty()) instruction.meta["level"] = *level;
    instructions.push_back(std::move(instruction));
  }

  if (instructions.empty())
    raise(ErrorCode::ParseFailure, "reply contains no complete question-answer block");
  return instructions;
}

std::vector<Instruction> parse_quiz_lines(const std::string& reply, const Scenario& scenario) {
  using json = nlohmann::json;
  std::vector<Instruction> instructions;
  for (const std::string& line : detail::split(reply, '\n')) {
    if (detail::trim(line).empty()) continue;
    json parsed = json::parse(line, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object()) continue;
    if (!parsed.contains("question") || !parsed["question"].is_string()) continue;

    Instruction instruction;
    instruction.scenario = scenario.id;
    instruction.text = parsed["question"].get<std::string>();
    instruction.source = InstructionSource::role_play_quiz;
    for (const auto& [key, value] : parsed.items()) {
      if (key == "question") continue;
      std::string text = value.is_string() ? value.get<std::string>() : value.dump();
      if (key == "answer")
        instruction.reference_answer = text;
      else
        instruction.meta[key] = text;
    }
    if (instruction.text.empty()) continue;
    instructions.push_back(std::move(instruction));
  }

  if (instructions.empty())
    raise(ErrorCode::ParseFailure, "reply contains no parseable quiz line");
  return instructions;
}

SynthesisResult synthesize_instructions(const Scenario& scenario, const SynthesisSource& source,
                                        int count, gateway::Gateway& gateway,
                                        const prompts::PromptLibrary& lib,
                                        const std::string& model, const std::string& id_prefix) {
  if (count < 0) raise(ErrorCode::OutOfRange, "cannot synthesize a negative count");

  SynthesisResult result;
  result.requested = count;
  if (count == 0) return result;

  std::string prompt;
  int per_batch = 0;
  if (source.kind == SynthesisSource::Kind::reference) {
    prompt = prompts::render_questioning_prompt(lib, scenario, source.reference_text,
                                                source.seed_examples, source.batch_count)
                 .text;
    per_batch = source.batch_count;
  } else {
    prompt = prompts::render_quiz_prompt(lib, source.quiz).text;
    per_batch = source.quiz.count;
  }

  // Refusals and duplicates waste batches; allow twice the minimum plus
  // slack before declaring the source exhausted.
  int max_batches = 2 * ((count + per_batch - 1) / per_batch) + 2;

  std::set<std::string> seen;
  for (int batch = 1; batch <= max_batches; ++batch) {
    if (static_cast<int>(result.instructions.size()) >= count) break;

    gateway::ChatRequest request;
    request.model = model;
    request.messages = {{"user", prompt}};
    request.request_id = id_prefix + "-b" + std::to_string(batch);
    std::string reply = gateway.chat_complete(request);

    std::vector<Instruction> parsed = source.kind == SynthesisSource::Kind::reference
                                          ? parse_qa_blocks(reply, scenario)
                                          : parse_quiz_lines(reply, scenario);
    for (Instruction& instruction : parsed) {
      if (static_cast<int>(result.instructions.size()) >= count) break;
      if (!seen.insert(detail::normalize_label(instruction.text)).second) continue;
      instruction.id = id_prefix + "-" + std::to_string(result.instructions.size() + 1);
      result.instructions.push_back(std::move(instruction));
    }
    if (parsed.empty() && source.kind == SynthesisSource::Kind::reference)
      break;  // the model refuses this reference text; more batches won't help
  }

  result.underproduced = static_cast<int>(result.instructions.size()) < count;
  return result;
}

CollectOutcome collect_responses(const std::vector<Instruction>& instructions,
                                 const std::vector<std::string>& models,
                                 gateway::Gateway& gateway, int parallelism) {
  std::vector<gateway::ChatRequest> requests;
  requests.reserve(instructions.size() * models.size());
  for (const Instruction& instruction : instructions) {
    for (const std::string& model : models) {
      gateway::ChatRequest request;
      request.model = model;
      request.messages = {{"user", instruction.text}};
      request.request_id = "resp::" + instruction.id + "::" + model;
      requests.push_back(std::move(request));
    }
  }

  std::vector<gateway::CompletionOutcome> outcomes =
      gateway.chat_complete_many(requests, parallelism);

  CollectOutcome collected;
  std::size_t cursor = 0;
  for (const Instruction& instruction : instructions) {
    for (const std::string& model : models) {
      const gateway::CompletionOutcome& outcome = outcomes[cursor++];
      if (outcome.ok())
        collected.responses.push_back({instruction.id, model, *outcome.content});
      else
        collected.failures.push_back({instruction.id, model, *outcome.error});
    }
  }
  return collected;
}

}  // namespace judgekit::forge
