#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "judgekit/catalog.hpp"
#include "judgekit/gateway/gateway.hpp"
#include "judgekit/harness/jsonl.hpp"
#include "judgekit/prompts/library.hpp"
#include "judgekit/types.hpp"

namespace judgekit::harness {

// Renders each task's prompt, sends it through the gateway, and parses the
// reply. Tasks whose key is in `skip_keys` (a previous run's output) are not
// sent at all; per-task failures become error records rather than aborting
// the batch. Output order matches task order.
std::vector<JudgmentRecord> run_judgments(const std::vector<JudgeTask>& tasks,
                                          const std::string& judge_model,
                                          gateway::Gateway& gateway,
                                          const prompts::PromptLibrary& lib,
                                          const ScenarioCatalog& catalog, int parallelism = 0,
                                          const std::set<std::string>& skip_keys = {});

// CLI exit code for a finished batch: 0 all parsed, 2 when any record
// carries an error (partial results were still written).
int exit_code_for(const std::vector<JudgmentRecord>& records);

}  // namespace judgekit::harness
