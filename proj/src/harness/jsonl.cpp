#include "judgekit/harness/jsonl.hpp"

#include <filesystem>
#include <fstream>

#include "judgekit/errors.hpp"

namespace judgekit::harness {

namespace fs = std::filesystem;

std::string JudgmentRecord::key() const {
  return instruction_id + "::" + model + "::" + judge_mode_name(mode);
}

std::vector<ordered_json> read_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) raise(ErrorCode::IoError, "cannot open " + path);
  std::vector<ordered_json> rows;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    ordered_json row = ordered_json::parse(line, nullptr, false);
    if (row.is_discarded())
      raise(ErrorCode::ParseFailure, path + ":" + std::to_string(line_number) + " is not JSON");
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_jsonl(const std::string& path, const std::vector<ordered_json>& rows) {
  fs::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
  }
  std::string temp = path + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out.is_open()) raise(ErrorCode::IoError, "cannot write " + temp);
    for (const ordered_json& row : rows) out << row.dump() << '\n';
    if (!out.good()) raise(ErrorCode::IoError, "short write to " + temp);
  }
  std::error_code ec;
  fs::rename(temp, path, ec);
  if (ec) raise(ErrorCode::IoError, "cannot finalize " + path + ": " + ec.message());
}

void append_jsonl(const std::string& path, const std::vector<ordered_json>& rows) {
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out.is_open()) raise(ErrorCode::IoError, "cannot append to " + path);
  for (const ordered_json& row : rows) out << row.dump() << '\n';
  if (!out.good()) raise(ErrorCode::IoError, "short append to " + path);
}

namespace {

const ordered_json& need(const ordered_json& j, const char* key) {
  auto hit = j.find(key);
  if (hit == j.end()) raise(ErrorCode::MissingField, std::string("record lacks '") + key + "'");
  return *hit;
}

std::string need_string(const ordered_json& j, const char* key) {
  const ordered_json& value = need(j, key);
  if (!value.is_string())
    raise(ErrorCode::ParseFailure, std::string("field '") + key + "' is not a string");
  return value.get<std::string>();
}

}  // namespace

ordered_json to_json(const Instruction& v) {
  ordered_json j{{"id", v.id},
                 {"scenario", v.scenario},
                 {"text", v.text},
                 {"source", instruction_source_name(v.source)}};
  if (v.reference_answer) j["reference_answer"] = *v.reference_answer;
  if (!v.meta.empty()) j["meta"] = v.meta;
  return j;
}

Instruction instruction_from_json(const ordered_json& j) {
  Instruction v;
  v.id = need_string(j, "id");
  v.scenario = need_string(j, "scenario");
  v.text = need_string(j, "text");
  v.source = instruction_source_from_name(need_string(j, "source"));
  if (j.contains("reference_answer") && !j["reference_answer"].is_null())
    v.reference_answer = j["reference_answer"].get<std::string>();
  if (j.contains("meta"))
    v.meta = j["meta"].get<std::map<std::string, std::string>>();
  return v;
}

ordered_json to_json(const ResponseRecord& v) {
  return {{"instruction_id", v.instruction_id}, {"model", v.model}, {"text", v.text}};
}

ResponseRecord response_from_json(const ordered_json& j) {
  return {need_string(j, "instruction_id"), need_string(j, "model"), need_string(j, "text")};
}

ordered_json to_json(const GradedVerdict& v) {
  ordered_json strengths = ordered_json::array();
  for (const ScoredItem& item : v.strengths)
    strengths.push_back({{"text", item.text}, {"score", item.score}});
  ordered_json weaknesses = ordered_json::array();
  for (const ScoredItem& item : v.weaknesses)
    weaknesses.push_back({{"text", item.text}, {"score", item.score}});
  return {{"overall", v.overall}, {"strengths", strengths}, {"weaknesses", weaknesses}};
}

GradedVerdict graded_verdict_from_json(const ordered_json& j) {
  GradedVerdict v;
  v.overall = need(j, "overall").get<int>();
  for (const auto& item : need(j, "strengths"))
    v.strengths.push_back({item.at("text").get<std::string>(), item.at("score").get<int>()});
  for (const auto& item : need(j, "weaknesses"))
    v.weaknesses.push_back({item.at("text").get<std::string>(), item.at("score").get<int>()});
  return v;
}

ordered_json to_json(const PairwiseVerdict& v) {
  ordered_json rationale = ordered_json::array();
  for (const PairwiseRationale& reason : v.rationale)
    rationale.push_back(
        {{"text", reason.text}, {"score_1", reason.score_1}, {"score_2", reason.score_2}});
  return {{"winner", pairwise_winner_name(v.winner)},
          {"score_1", v.score_1},
          {"score_2", v.score_2},
          {"rationale", rationale}};
}

PairwiseVerdict pairwise_verdict_from_json(const ordered_json& j) {
  PairwiseVerdict v;
  v.winner = pairwise_winner_from_name(need_string(j, "winner"));
  v.score_1 = need(j, "score_1").get<int>();
  v.score_2 = need(j, "score_2").get<int>();
  for (const auto& reason : need(j, "rationale"))
    v.rationale.push_back({reason.at("text").get<std::string>(),
                           reason.at("score_1").get<int>(), reason.at("score_2").get<int>()});
  return v;
}

ordered_json to_json(const JudgmentRecord& v) {
  ordered_json j{{"instruction_id", v.instruction_id},
                 {"model", v.model},
                 {"mode", judge_mode_name(v.mode)},
                 {"judge_model", v.judge_model},
                 {"raw_output", v.raw_output}};
  if (v.error)
    j["error"] = *v.error;
  else if (v.mode == JudgeMode::pairwise && v.pair_verdict)
    j["pair_verdict"] = to_json(*v.pair_verdict);
  else if (v.verdict)
    j["verdict"] = to_json(*v.verdict);
  return j;
}

JudgmentRecord judgment_from_json(const ordered_json& j) {
  JudgmentRecord v;
  v.instruction_id = need_string(j, "instruction_id");
  v.model = need_string(j, "model");
  v.mode = judge_mode_from_name(need_string(j, "mode"));
  v.judge_model = need_string(j, "judge_model");
  v.raw_output = need_string(j, "raw_output");
  if (j.contains("error") && !j["error"].is_null())
    v.error = j["error"].get<std::string>();
  else if (j.contains("pair_verdict"))
    v.pair_verdict = pairwise_verdict_from_json(j["pair_verdict"]);
  else if (j.contains("verdict"))
    v.verdict = graded_verdict_from_json(j["verdict"]);
  else
    raise(ErrorCode::MissingField, "judgment carries neither a verdict nor an error");
  return v;
}

ordered_json to_json(const BenchRecord& v) {
  ordered_json j{{"instruction_id", v.instruction_id},
                 {"scenario", v.scenario},
                 {"instruction", v.instruction},
                 {"response", v.response}};
  if (v.response_2) j["response_2"] = *v.response_2;
  if (v.reference) j["reference"] = *v.reference;
  if (v.label_score) j["label_score"] = *v.label_score;
  if (v.label_winner) j["label_winner"] = pairwise_winner_name(*v.label_winner);
  return j;
}

BenchRecord bench_from_json(const ordered_json& j) {
  BenchRecord v;
  v.instruction_id = need_string(j, "instruction_id");
  v.scenario = need_string(j, "scenario");
  v.instruction = need_string(j, "instruction");
  v.response = need_string(j, "response");
  if (j.contains("response_2") && !j["response_2"].is_null())
    v.response_2 = j["response_2"].get<std::string>();
  if (j.contains("reference") && !j["reference"].is_null())
    v.reference = j["reference"].get<std::string>();
  if (j.contains("label_score") && !j["label_score"].is_null())
    v.label_score = j["label_score"].get<int>();
  if (j.contains("label_winner") && !j["label_winner"].is_null())
    v.label_winner = pairwise_winner_from_name(j["label_winner"].get<std::string>());
  return v;
}

ordered_json to_json(const forge::SftRecord& v) {
  ordered_json spans = ordered_json::array();
  for (const forge::TokenSpan& span : v.spans)
    spans.push_back(
        {{"start", span.start}, {"end", span.end}, {"kind", forge::span_kind_name(span.kind)}});

  ordered_json meta{{"mode", judge_mode_name(v.meta.mode)},
                    {"scenario", v.meta.scenario},
                    {"rating", RatingSystem::of(v.meta.rating).name()}};
  if (v.meta.overall) meta["overall"] = *v.meta.overall;
  if (v.meta.winner) meta["winner"] = pairwise_winner_name(*v.meta.winner);
  meta["record_id"] = v.meta.record_id;
  if (!v.meta.extra.empty()) meta["extra"] = v.meta.extra;

  return {{"prompt", v.prompt}, {"target", v.target}, {"spans", spans}, {"meta", meta}};
}

forge::SftRecord sft_from_json(const ordered_json& j) {
  forge::SftRecord v;
  v.prompt = need_string(j, "prompt");
  v.target = need_string(j, "target");
  for (const auto& span : need(j, "spans"))
    v.spans.push_back({span.at("start").get<std::size_t>(), span.at("end").get<std::size_t>(),
                       forge::span_kind_from_name(span.at("kind").get<std::string>())});

  const ordered_json& meta = need(j, "meta");
  v.meta.mode = judge_mode_from_name(need_string(meta, "mode"));
  v.meta.scenario = need_string(meta, "scenario");
  v.meta.rating = RatingSystem::from_name(need_string(meta, "rating")).kind;
  if (meta.contains("overall") && !meta["overall"].is_null())
    v.meta.overall = meta["overall"].get<int>();
  if (meta.contains("winner") && !meta["winner"].is_null())
    v.meta.winner = pairwise_winner_from_name(meta["winner"].get<std::string>());
  v.meta.record_id = need_string(meta, "record_id");
  if (meta.contains("extra"))
    v.meta.extra = meta["extra"].get<std::map<std::string, std::string>>();

  forge::validate_spans(v.spans, v.target.size());
  return v;
}

ordered_json to_json(const metrics::ReportRow& v) {
  ordered_json j{{"scenario", v.scenario}, {"count", v.count}};
  if (v.mae_value) j["mae"] = *v.mae_value;
  ordered_json agr = ordered_json::object();
  for (const auto& [label, value] : v.agr_values) agr[label] = value;
  j["agr"] = agr;
  if (v.avg_label) j["avg_label"] = *v.avg_label;
  j["z"] = v.z_value;
  if (v.delta_reference) j["delta_reference"] = *v.delta_reference;
  return j;
}

metrics::ReportRow report_row_from_json(const ordered_json& j) {
  metrics::ReportRow v;
  v.scenario = need_string(j, "scenario");
  v.count = need(j, "count").get<std::int64_t>();
  if (j.contains("mae") && !j["mae"].is_null()) v.mae_value = j["mae"].get<double>();
  if (j.contains("agr"))
    for (const auto& [label, value] : j["agr"].items())
      v.agr_values[label] = value.get<double>();
  if (j.contains("avg_label") && !j["avg_label"].is_null())
    v.avg_label = j["avg_label"].get<double>();
  if (j.contains("z")) v.z_value = j["z"].get<double>();
  if (j.contains("delta_reference") && !j["delta_reference"].is_null())
    v.delta_reference = j["delta_reference"].get<double>();
  return v;
}

ordered_json to_json(const metrics::MetricReport& v) {
  ordered_json rows = ordered_json::array();
  for (const metrics::ReportRow& row : v.rows) rows.push_back(to_json(row));
  ordered_json params = ordered_json::array();
  for (const metrics::AgrParams& p : v.params) params.push_back(p.label());
  ordered_json j{{"rows", rows},
                 {"overall", to_json(v.overall)},
                 {"params", params},
                 {"coverage", v.coverage}};
  if (v.aggregated) j["aggregated"] = *v.aggregated;
  return j;
}

metrics::MetricReport report_from_json(const ordered_json& j) {
  metrics::MetricReport v;
  for (const auto& row : need(j, "rows")) v.rows.push_back(report_row_from_json(row));
  v.overall = report_row_from_json(need(j, "overall"));
  if (j.contains("params"))
    for (const auto& label : j["params"]) {
      const std::string text = label.get<std::string>();
      // labels look like "mae", "agr_1_0", "agr_2_2", "accuracy"
      if (text.rfind("agr_", 0) == 0) {
        std::size_t mid = text.find('_', 4);
        if (mid != std::string::npos) {
          metrics::AgrParams p;
          p.p = std::stoi(text.substr(4, mid - 4));
          p.q = std::stod(text.substr(mid + 1));
          v.params.push_back(p);
        }
      }
    }
  if (j.contains("coverage")) v.coverage = j["coverage"].get<double>();
  if (j.contains("aggregated") && !j["aggregated"].is_null())
    v.aggregated = j["aggregated"].get<double>();
  return v;
}

}  // namespace judgekit::harness
