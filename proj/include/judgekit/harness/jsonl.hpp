#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "judgekit/forge/sft.hpp"
#include "judgekit/metrics/report.hpp"
#include "judgekit/types.hpp"

namespace judgekit::harness {

using ordered_json = nlohmann::ordered_json;

// One human-labeled benchmark item. Graded benches carry label_score;
// pairwise benches carry label_winner.
struct BenchRecord {
  std::string instruction_id;
  std::string scenario;
  std::string instruction;
  std::string response;                       // graded: the response under test
  std::optional<std::string> response_2;      // pairwise second response
  std::optional<std::string> reference;
  std::optional<int> label_score;
  std::optional<PairwiseWinner> label_winner;
};

// One judging outcome. Exactly one of verdict/pair_verdict/error is set;
// records with an error are excluded from metrics but kept in the file so
// failures stay visible and resumable runs stay complete.
struct JudgmentRecord {
  std::string instruction_id;
  std::string model;  // judged responder model(s), "+"-joined for pairwise
  JudgeMode mode = JudgeMode::single;
  std::string judge_model;
  std::string raw_output;
  std::optional<GradedVerdict> verdict;
  std::optional<PairwiseVerdict> pair_verdict;
  std::optional<std::string> error;

  bool ok() const { return !error.has_value(); }
  // Resume/duplicate key: one judgment per (instruction, responder, mode).
  std::string key() const;
};

// JSONL I/O. Serialized field order is fixed (ordered_json) so identical
// data always produces identical bytes; writes land via temp file + rename.
std::vector<ordered_json> read_jsonl(const std::string& path);
void write_jsonl(const std::string& path, const std::vector<ordered_json>& rows);
void append_jsonl(const std::string& path, const std::vector<ordered_json>& rows);

ordered_json to_json(const Instruction& v);
ordered_json to_json(const ResponseRecord& v);
ordered_json to_json(const GradedVerdict& v);
ordered_json to_json(const PairwiseVerdict& v);
ordered_json to_json(const JudgmentRecord& v);
ordered_json to_json(const BenchRecord& v);
ordered_json to_json(const forge::SftRecord& v);
ordered_json to_json(const metrics::ReportRow& v);
ordered_json to_json(const metrics::MetricReport& v);  // one object, rows inline

Instruction instruction_from_json(const ordered_json& j);
ResponseRecord response_from_json(const ordered_json& j);
GradedVerdict graded_verdict_from_json(const ordered_json& j);
PairwiseVerdict pairwise_verdict_from_json(const ordered_json& j);
JudgmentRecord judgment_from_json(const ordered_json& j);
BenchRecord bench_from_json(const ordered_json& j);
forge::SftRecord sft_from_json(const ordered_json& j);
metrics::ReportRow report_row_from_json(const ordered_json& j);
metrics::MetricReport report_from_json(const ordered_json& j);

template <typename T, typename Fn>
std::vector<T> read_records(const std::string& path, Fn&& from_json_fn) {
  std::vector<T> out;
  for (const auto& row : read_jsonl(path)) out.push_back(from_json_fn(row));
  return out;
}

}  // namespace judgekit::harness
