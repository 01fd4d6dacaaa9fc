#include "judgekit/harness/runner.hpp"

#include "judgekit/errors.hpp"
#include "judgekit/prompts/render.hpp"
#include "judgekit/verdict.hpp"

namespace judgekit::harness {

namespace {

std::string responder_label(const JudgeTask& task) {
  std::string label;
  for (const ResponseRecord& response : task.responses) {
    if (!label.empty()) label += "+";
    label += response.model;
  }
  return label;
}

}  // namespace

std::vector<JudgmentRecord> run_judgments(const std::vector<JudgeTask>& tasks,
                                          const std::string& judge_model,
                                          gateway::Gateway& gateway,
                                          const prompts::PromptLibrary& lib,
                                          const ScenarioCatalog& catalog, int parallelism,
                                          const std::set<std::string>& skip_keys) {
  std::vector<JudgmentRecord> records;
  records.reserve(tasks.size());

  // Requests still needing a model call, with the record slot and rating
  // bounds each reply parses under.
  struct Pending {
    std::size_t record_index;
    RatingSystem rating;
  };
  std::vector<Pending> pending;
  std::vector<gateway::ChatRequest> requests;

  for (const JudgeTask& task : tasks) {
    JudgmentRecord record;
    record.instruction_id = task.instruction.id;
    record.model = responder_label(task);
    record.mode = task.mode;
    record.judge_model = judge_model;
    if (skip_keys.count(record.key())) continue;

    try {
      task.validate(catalog);
      prompts::PromptBundle bundle = prompts::render_judge_prompt(lib, task, catalog);
      gateway::ChatRequest request;
      request.model = judge_model;
      request.messages.push_back({"user", std::move(bundle.text)});
      request.request_id = record.key();
      pending.push_back({records.size(), task.rating});
      requests.push_back(std::move(request));
    } catch (const Error& e) {
      record.error = e.what();
    }
    records.push_back(std::move(record));
  }

  const std::vector<gateway::CompletionOutcome> outcomes =
      gateway.chat_complete_many(requests, parallelism);

  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    JudgmentRecord& record = records[pending[i].record_index];
    const gateway::CompletionOutcome& outcome = outcomes[i];
    if (!outcome.ok()) {
      record.error = outcome.error.value_or("request failed");
      continue;
    }
    record.raw_output = *outcome.content;
    try {
      if (record.mode == JudgeMode::pairwise)
        record.pair_verdict = parse_pairwise_verdict(record.raw_output, pending[i].rating);
      else
        record.verdict = parse_graded_verdict(record.raw_output, pending[i].rating);
    } catch (const Error& e) {
      record.error = e.what();
    }
  }

  return records;
}

int exit_code_for(const std::vector<JudgmentRecord>& records) {
  for (const JudgmentRecord& record : records)
    if (!record.ok()) return 2;
  return 0;
}

}  // namespace judgekit::harness
