// judgekit: command-line front end for the judge development pipeline.
//
// Subcommands cover the full loop: synthesize instructions (gen), route them
// to scenarios (classify), collect model responses (respond), grade them
// (judge), turn judgments into fine-tuning records (build-sft), then shape
// the training set (balance / augment / select / cluster / compose) and
// measure judge quality against a labeled benchmark (bench / report).

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "judgekit/errors.hpp"
#include "judgekit/forge/augment.hpp"
#include "judgekit/forge/balance.hpp"
#include "judgekit/forge/compose.hpp"
#include "judgekit/forge/ifd.hpp"
#include "judgekit/forge/kmeans.hpp"
#include "judgekit/forge/pairwise.hpp"
#include "judgekit/forge/regression.hpp"
#include "judgekit/forge/sft.hpp"
#include "judgekit/forge/synthesis.hpp"
#include "judgekit/gateway/scorer.hpp"
#include "judgekit/harness/bench.hpp"
#include "judgekit/harness/config.hpp"
#include "judgekit/harness/jsonl.hpp"
#include "judgekit/harness/runner.hpp"
#include "judgekit/metrics/report.hpp"
#include "judgekit/prompts/render.hpp"
#include "judgekit/verdict.hpp"

namespace {

using judgekit::Error;
using judgekit::ErrorCode;
using judgekit::raise;
using ordered_json = nlohmann::ordered_json;
namespace harness = judgekit::harness;
namespace forge = judgekit::forge;
namespace prompts = judgekit::prompts;
namespace metrics = judgekit::metrics;
namespace gateway = judgekit::gateway;

// Options shared by every subcommand; explicit flags beat the config file.
struct Shared {
  std::string config_path;
  std::uint64_t seed = 0;
  int parallelism = 0;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* parallelism_opt = nullptr;

  harness::Config load() const {
    std::optional<std::string> path;
    if (!config_path.empty()) path = config_path;
    harness::Config cfg = harness::Config::load(path);
    if (seed_opt != nullptr && seed_opt->count() > 0) cfg.seed = seed;
    if (parallelism_opt != nullptr && parallelism_opt->count() > 0)
      cfg.parallelism = parallelism;
    return cfg;
  }
};

ordered_json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) raise(ErrorCode::IoError, "cannot open " + path);
  ordered_json j = ordered_json::parse(in, nullptr, false);
  if (j.is_discarded()) raise(ErrorCode::ParseFailure, path + " is not valid JSON");
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out.is_open()) raise(ErrorCode::IoError, "cannot write " + path);
  out << text;
  if (!out.good()) raise(ErrorCode::IoError, "short write to " + path);
}

std::vector<judgekit::Instruction> load_instructions(const std::string& path) {
  return harness::read_records<judgekit::Instruction>(path, harness::instruction_from_json);
}

std::vector<judgekit::ResponseRecord> load_responses(const std::string& path) {
  return harness::read_records<judgekit::ResponseRecord>(path, harness::response_from_json);
}

std::vector<harness::JudgmentRecord> load_judgments(const std::string& path) {
  return harness::read_records<harness::JudgmentRecord>(path, harness::judgment_from_json);
}

std::vector<forge::SftRecord> load_sft(const std::string& path) {
  return harness::read_records<forge::SftRecord>(path, harness::sft_from_json);
}

template <typename T>
void write_records(const std::string& path, const std::vector<T>& records) {
  std::vector<ordered_json> rows;
  rows.reserve(records.size());
  for (const T& record : records) rows.push_back(harness::to_json(record));
  harness::write_jsonl(path, rows);
}

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream stream(text);
  while (std::getline(stream, part, sep)) parts.push_back(part);
  return parts;
}

metrics::AgrParams parse_agr_label(const std::string& label) {
  // "agr_2_2" / "agr_1_0.5" style, matching AgrParams::label().
  if (label.rfind("agr_", 0) == 0) {
    const std::size_t mid = label.find('_', 4);
    if (mid != std::string::npos) {
      try {
        metrics::AgrParams p;
        p.p = std::stoi(label.substr(4, mid - 4));
        p.q = std::stod(label.substr(mid + 1));
        return p;
      } catch (const std::exception&) {
        // fall through to the error below
      }
    }
  }
  raise(ErrorCode::ConfigError, "metric label must look like agr_<p>_<q>, got '" + label + "'");
}

// Fallback seed examples for reference-based generation when the spec line
// does not provide its own.
std::vector<std::string> default_seed_examples() {
  return {
      "What key claim does the passage make, and what evidence supports it?",
      "Summarize the passage's position on its central topic in two sentences.",
      "Which detail in the passage would change the conclusion if it were removed?",
  };
}

// ---------------------------------------------------------------------------
// gen

int run_gen(const Shared& shared, const std::string& spec_path, const std::string& out_path,
            bool append, const std::string& model_override) {
  const harness::Config cfg = shared.load();
  const judgekit::ScenarioCatalog catalog = cfg.load_catalog();
  const prompts::PromptLibrary lib = cfg.load_prompts();
  auto gw = cfg.make_gateway();
  const std::string model = model_override.empty() ? cfg.judge_model : model_override;

  bool partial = false;
  std::vector<ordered_json> rows;
  for (const ordered_json& line : harness::read_jsonl(spec_path)) {
    const std::string kind = line.at("kind").get<std::string>();
    const judgekit::Scenario& scenario =
        catalog.resolve(line.at("scenario").get<std::string>());
    const int count = line.at("count").get<int>();

    forge::SynthesisSource source;
    if (kind == "reference") {
      source.kind = forge::SynthesisSource::Kind::reference;
      source.reference_text = line.at("reference").get<std::string>();
      source.seed_examples = line.contains("seeds")
                                 ? line["seeds"].get<std::vector<std::string>>()
                                 : default_seed_examples();
      if (line.contains("batch")) source.batch_count = line["batch"].get<int>();
    } else if (kind == "quiz") {
      source.kind = forge::SynthesisSource::Kind::quiz;
      prompts::QuizSpec quiz;
      quiz.kind = prompts::quiz_kind_from_name(line.at("quiz").get<std::string>());
      if (line.contains("difficulty")) quiz.difficulty = line["difficulty"].get<std::string>();
      if (line.contains("audience")) quiz.audience = line["audience"].get<std::string>();
      if (line.contains("subject")) quiz.subject = line["subject"].get<std::string>();
      if (line.contains("language")) quiz.language = line["language"].get<std::string>();
      if (line.contains("company")) quiz.company = line["company"].get<std::string>();
      if (line.contains("reading_material"))
        quiz.reading_material = line["reading_material"].get<std::string>();
      quiz.count = line.contains("batch") ? line["batch"].get<int>() : std::max(count, 1);
      source.quiz = quiz;
    } else {
      raise(ErrorCode::ConfigError, "unknown generation kind '" + kind + "'");
    }

    const std::string prefix =
        line.contains("prefix") ? line["prefix"].get<std::string>() : scenario.id;
    forge::SynthesisResult result =
        forge::synthesize_instructions(scenario, source, count, *gw, lib, model, prefix);
    if (result.underproduced) {
      partial = true;
      std::cerr << "warning: " << scenario.id << " produced "
                << result.instructions.size() << "/" << result.requested
                << " instructions\n";
    }
    for (const judgekit::Instruction& instruction : result.instructions)
      rows.push_back(harness::to_json(instruction));
  }

  if (append)
    harness::append_jsonl(out_path, rows);
  else
    harness::write_jsonl(out_path, rows);
  std::cout << "wrote " << rows.size() << " instructions to " << out_path << "\n";
  return partial ? 2 : 0;
}

// ---------------------------------------------------------------------------
// classify

int run_classify(const Shared& shared, const std::string& in_path, const std::string& out_path) {
  const harness::Config cfg = shared.load();
  const judgekit::ScenarioCatalog catalog = cfg.load_catalog();
  const prompts::PromptLibrary lib = cfg.load_prompts();
  auto gw = cfg.make_gateway();

  std::vector<judgekit::Instruction> instructions = load_instructions(in_path);
  std::vector<gateway::ChatRequest> requests;
  requests.reserve(instructions.size());
  for (const judgekit::Instruction& instruction : instructions) {
    prompts::PromptBundle bundle =
        prompts::render_classification_prompt(lib, instruction.text, catalog);
    gateway::ChatRequest request;
    request.model = cfg.judge_model;
    request.messages.push_back({"user", std::move(bundle.text)});
    request.request_id = "cls::" + instruction.id;
    requests.push_back(std::move(request));
  }

  const std::vector<gateway::CompletionOutcome> outcomes =
      gw->chat_complete_many(requests, cfg.parallelism);

  bool partial = false;
  for (std::size_t i = 0; i < instructions.size(); ++i) {
    if (!outcomes[i].ok()) {
      std::cerr << "warning: " << instructions[i].id << ": "
                << outcomes[i].error.value_or("request failed") << "\n";
      partial = true;
      continue;
    }
    try {
      instructions[i].scenario = judgekit::parse_scenario_label(*outcomes[i].content, catalog);
    } catch (const Error& e) {
      std::cerr << "warning: " << instructions[i].id << ": " << e.what() << "\n";
      partial = true;
    }
  }

  write_records(out_path, instructions);
  std::cout << "classified " << instructions.size() << " instructions to " << out_path << "\n";
  return partial ? 2 : 0;
}

// ---------------------------------------------------------------------------
// respond

int run_respond(const Shared& shared, const std::string& in_path, const std::string& out_path,
                const std::vector<std::string>& model_override) {
  const harness::Config cfg = shared.load();
  auto gw = cfg.make_gateway();
  const std::vector<std::string> models =
      model_override.empty() ? cfg.responder_models : model_override;

  const std::vector<judgekit::Instruction> instructions = load_instructions(in_path);
  forge::CollectOutcome outcome =
      forge::collect_responses(instructions, models, *gw, cfg.parallelism);

  for (const forge::CollectFailure& failure : outcome.failures)
    std::cerr << "warning: " << failure.instruction_id << " x " << failure.model << ": "
              << failure.error << "\n";

  write_records(out_path, outcome.responses);
  std::cout << "wrote " << outcome.responses.size() << " responses to " << out_path << "\n";
  return outcome.failures.empty() ? 0 : 2;
}

// ---------------------------------------------------------------------------
// judge

std::vector<judgekit::JudgeTask> build_tasks(const std::vector<judgekit::Instruction>& instructions,
                                             const std::vector<judgekit::ResponseRecord>& responses,
                                             judgekit::JudgeMode mode,
                                             const judgekit::RatingSystem& rating) {
  std::map<std::string, std::vector<judgekit::ResponseRecord>> by_instruction;
  std::set<std::string> known_ids;
  for (const judgekit::Instruction& instruction : instructions) known_ids.insert(instruction.id);
  for (const judgekit::ResponseRecord& response : responses) {
    if (!known_ids.count(response.instruction_id))
      raise(ErrorCode::IdMismatch,
            "response references unknown instruction '" + response.instruction_id + "'");
    by_instruction[response.instruction_id].push_back(response);
  }

  std::vector<judgekit::JudgeTask> tasks;
  for (const judgekit::Instruction& instruction : instructions) {
    auto hit = by_instruction.find(instruction.id);
    if (hit == by_instruction.end()) continue;
    const std::vector<judgekit::ResponseRecord>& group = hit->second;
    if (mode == judgekit::JudgeMode::pairwise) {
      for (std::size_t a = 0; a < group.size(); ++a)
        for (std::size_t b = a + 1; b < group.size(); ++b) {
          judgekit::JudgeTask task;
          task.mode = mode;
          task.instruction = instruction;
          task.responses = {group[a], group[b]};
          task.rating = rating;
          tasks.push_back(std::move(task));
        }
    } else {
      for (const judgekit::ResponseRecord& response : group) {
        judgekit::JudgeTask task;
        task.mode = mode;
        task.instruction = instruction;
        task.responses = {response};
        task.rating = rating;
        tasks.push_back(std::move(task));
      }
    }
  }
  return tasks;
}

int run_judge(const Shared& shared, const std::string& instructions_path,
              const std::string& responses_path, const std::string& out_path,
              const std::string& mode_name, bool resume, const std::string& rating_name,
              const std::string& judge_model_override) {
  const harness::Config cfg = shared.load();
  const judgekit::ScenarioCatalog catalog = cfg.load_catalog();
  const prompts::PromptLibrary lib = cfg.load_prompts();
  auto gw = cfg.make_gateway();

  const judgekit::JudgeMode mode = judgekit::judge_mode_from_name(mode_name);
  const judgekit::RatingSystem rating =
      rating_name.empty() ? cfg.rating : judgekit::RatingSystem::from_name(rating_name);
  const std::string judge_model =
      judge_model_override.empty() ? cfg.judge_model : judge_model_override;

  const std::vector<judgekit::JudgeTask> tasks =
      build_tasks(load_instructions(instructions_path), load_responses(responses_path), mode,
                  rating);

  std::set<std::string> skip_keys;
  if (resume && std::filesystem::exists(out_path))
    for (const harness::JudgmentRecord& existing : load_judgments(out_path))
      skip_keys.insert(existing.key());

  const std::vector<harness::JudgmentRecord> records =
      harness::run_judgments(tasks, judge_model, *gw, lib, catalog, cfg.parallelism, skip_keys);

  std::vector<ordered_json> rows;
  rows.reserve(records.size());
  for (const harness::JudgmentRecord& record : records) rows.push_back(harness::to_json(record));
  if (resume && std::filesystem::exists(out_path))
    harness::append_jsonl(out_path, rows);
  else
    harness::write_jsonl(out_path, rows);

  std::size_t failed = 0;
  for (const harness::JudgmentRecord& record : records)
    if (!record.ok()) ++failed;
  std::cout << "judged " << records.size() << " tasks (" << skip_keys.size() << " resumed, "
            << failed << " failed) to " << out_path << "\n";
  return harness::exit_code_for(records);
}

// ---------------------------------------------------------------------------
// build-sft

int run_build_sft(const Shared& shared, const std::string& instructions_path,
                  const std::string& responses_path, const std::string& judgments_path,
                  const std::string& out_path, bool double_pairs,
                  const std::string& rating_name) {
  const harness::Config cfg = shared.load();
  const judgekit::ScenarioCatalog catalog = cfg.load_catalog();
  const prompts::PromptLibrary lib = cfg.load_prompts();
  const judgekit::RatingSystem rating =
      rating_name.empty() ? cfg.rating : judgekit::RatingSystem::from_name(rating_name);

  std::map<std::string, judgekit::Instruction> instructions;
  for (judgekit::Instruction& instruction : load_instructions(instructions_path))
    instructions.emplace(instruction.id, std::move(instruction));

  // First stored response wins per (instruction, model).
  std::map<std::pair<std::string, std::string>, judgekit::ResponseRecord> responses;
  for (judgekit::ResponseRecord& response : load_responses(responses_path))
    responses.emplace(std::make_pair(response.instruction_id, response.model),
                      std::move(response));

  const auto response_for = [&](const std::string& instruction_id,
                                const std::string& model) -> const judgekit::ResponseRecord& {
    auto hit = responses.find({instruction_id, model});
    if (hit == responses.end())
      raise(ErrorCode::IdMismatch,
            "no stored response for '" + instruction_id + "' by '" + model + "'");
    return hit->second;
  };

  std::vector<forge::SftRecord> records;
  std::size_t skipped = 0;
  for (const harness::JudgmentRecord& judgment : load_judgments(judgments_path)) {
    if (!judgment.ok()) {
      ++skipped;
      continue;
    }
    auto instruction_hit = instructions.find(judgment.instruction_id);
    if (instruction_hit == instructions.end())
      raise(ErrorCode::IdMismatch,
            "judgment references unknown instruction '" + judgment.instruction_id + "'");

    judgekit::JudgeTask task;
    task.mode = judgment.mode;
    task.instruction = instruction_hit->second;
    task.rating = rating;
    if (judgment.mode == judgekit::JudgeMode::pairwise) {
      const std::vector<std::string> models = split_on(judgment.model, '+');
      if (models.size() != 2)
        raise(ErrorCode::ParseFailure,
              "pairwise judgment model '" + judgment.model + "' is not two '+'-joined names");
      task.responses = {response_for(judgment.instruction_id, models[0]),
                        response_for(judgment.instruction_id, models[1])};
    } else {
      task.responses = {response_for(judgment.instruction_id, judgment.model)};
    }

    forge::SftRecord record;
    record.prompt = prompts::render_judge_prompt(lib, task, catalog).text;
    record.target = judgment.raw_output;
    record.spans = forge::label_token_spans(record.target, judgment.mode, rating);
    record.meta.mode = judgment.mode;
    record.meta.scenario = task.instruction.scenario;
    record.meta.rating = rating.kind;
    if (judgment.verdict) record.meta.overall = judgment.verdict->overall;
    if (judgment.pair_verdict) record.meta.winner = judgment.pair_verdict->winner;
    record.meta.record_id = judgment.key();

    records.push_back(std::move(record));
    if (double_pairs && judgment.mode == judgekit::JudgeMode::pairwise)
      records.push_back(forge::mirror_pairwise_record(records.back()));
  }

  write_records(out_path, records);
  std::cout << "wrote " << records.size() << " training records to " << out_path << " ("
            << skipped << " failed judgments skipped)\n";
  return 0;
}

// ---------------------------------------------------------------------------
// balance

int run_balance(const Shared& shared, const std::string& in_path, const std::string& out_path,
                const std::string& target_text) {
  const harness::Config cfg = shared.load();
  const std::vector<forge::SftRecord> records = load_sft(in_path);

  std::optional<std::map<int, std::size_t>> target;
  if (!target_text.empty()) {
    std::map<int, std::size_t> caps;
    for (const std::string& part : split_on(target_text, ',')) {
      const std::vector<std::string> pair = split_on(part, ':');
      if (pair.size() != 2)
        raise(ErrorCode::ConfigError, "--target expects score:cap pairs, got '" + part + "'");
      caps[std::stoi(pair[0])] = static_cast<std::size_t>(std::stoul(pair[1]));
    }
    target = std::move(caps);
  }

  const std::vector<forge::SftRecord> kept = forge::balance_by_score(records, target, cfg.seed);
  const std::map<int, std::size_t> before = forge::score_histogram(records);
  const std::map<int, std::size_t> after = forge::score_histogram(kept);
  for (const auto& [score, count] : before) {
    const auto hit = after.find(score);
    std::cout << "score " << score << ": " << count << " -> "
              << (hit == after.end() ? 0 : hit->second) << "\n";
  }

  write_records(out_path, kept);
  std::cout << "kept " << kept.size() << "/" << records.size() << " records to " << out_path
            << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// augment

forge::RegressionModel fit_regression_from(const std::vector<forge::SftRecord>& records) {
  std::vector<std::vector<double>> raw_rows;
  std::vector<double> overall;
  std::size_t width = 0;
  for (const forge::SftRecord& record : records) {
    if (record.meta.mode == judgekit::JudgeMode::pairwise) continue;
    const judgekit::GradedVerdict verdict = judgekit::parse_graded_verdict(
        record.target, judgekit::RatingSystem::of(record.meta.rating));
    std::vector<double> features;
    for (const judgekit::ScoredItem& item : verdict.strengths)
      features.push_back(static_cast<double>(item.score));
    for (const judgekit::ScoredItem& item : verdict.weaknesses)
      features.push_back(static_cast<double>(item.score));
    width = std::max(width, features.size());
    raw_rows.push_back(std::move(features));
    overall.push_back(static_cast<double>(verdict.overall));
  }
  if (raw_rows.empty())
    raise(ErrorCode::EmptyInput, "no graded records to fit the score regression on");

  std::vector<forge::RegressionRow> rows;
  rows.reserve(raw_rows.size());
  for (std::size_t i = 0; i < raw_rows.size(); ++i) {
    forge::RegressionRow row;
    row.sub_scores.assign(width, std::nullopt);
    for (std::size_t f = 0; f < raw_rows[i].size(); ++f) row.sub_scores[f] = raw_rows[i][f];
    row.overall = overall[i];
    rows.push_back(std::move(row));
  }
  return forge::fit_criteria_regression(rows);
}

int run_augment(const Shared& shared, const std::string& in_path, const std::string& out_path,
                const std::string& weights_text, double rephrase_prob, int downsample_min,
                int downsample_max, const std::string& targets_text, double threshold) {
  const harness::Config cfg = shared.load();
  const judgekit::ScenarioCatalog catalog = cfg.load_catalog();
  const prompts::PromptLibrary lib = cfg.load_prompts();
  const std::vector<forge::SftRecord> records = load_sft(in_path);

  forge::AugmentOptions options;
  if (!weights_text.empty()) {
    const std::vector<std::string> parts = split_on(weights_text, ',');
    if (parts.size() != 4)
      raise(ErrorCode::ConfigError, "--weights expects four comma-separated numbers");
    for (std::size_t i = 0; i < 4; ++i) options.mix_weights[i] = std::stod(parts[i]);
  }
  options.rephrase_prob = rephrase_prob;
  options.downsample_min = downsample_min;
  options.downsample_max = downsample_max;
  options.similarity_threshold = threshold;
  for (const std::string& name : split_on(targets_text, ','))
    if (!name.empty()) options.rating_targets.push_back(judgekit::RatingSystem::from_name(name));

  // The sub-score -> overall map is fit from the input itself; skip the fit
  // when down-sampling can never be drawn.
  if (options.mix_weights[1] > 0.0) options.regression = fit_regression_from(records);

  const std::vector<forge::SftRecord> out =
      forge::augment_custom_prompts(records, options, catalog, lib, cfg.seed);
  write_records(out_path, out);
  std::cout << "augmented " << out.size() << " records to " << out_path << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// select

int run_select(const Shared& shared, const std::string& in_path, const std::string& out_path,
               std::size_t budget, const std::string& policy_name, double z_threshold,
               const std::string& scores_path) {
  const harness::Config cfg = shared.load();
  auto gw = cfg.make_gateway();
  gateway::GatewayScorer scorer(gw, cfg.scorer_model);

  const std::vector<forge::SftRecord> records = load_sft(in_path);
  std::vector<forge::IfdScore> scores;
  scores.reserve(records.size());
  for (const forge::SftRecord& record : records)
    scores.push_back(forge::ifd_score(record.prompt, record.target, scorer,
                                      record.meta.record_id, record.meta.scenario));
  forge::fill_scenario_z(scores);

  forge::SelectionPolicy policy;
  if (policy_name == "drop")
    policy.kind = forge::SelectionPolicy::Kind::drop_above_one;
  else if (policy_name == "z")
    policy.kind = forge::SelectionPolicy::Kind::scenario_z;
  else
    raise(ErrorCode::ConfigError, "--policy must be 'drop' or 'z', got '" + policy_name + "'");
  policy.z_threshold = z_threshold;

  const std::vector<std::string> selected_ids = forge::select_by_ifd(scores, budget, policy);

  if (!scores_path.empty()) {
    std::vector<ordered_json> rows;
    for (const forge::IfdScore& score : scores)
      rows.push_back({{"record_id", score.record_id},
                      {"scenario", score.scenario},
                      {"conditioned_loss", score.conditioned_loss},
                      {"unconditioned_loss", score.unconditioned_loss},
                      {"ifd", score.ifd},
                      {"scenario_z", score.scenario_z}});
    harness::write_jsonl(scores_path, rows);
  }

  // Emit survivors hardest-first, the order select_by_ifd returns.
  std::map<std::string, std::size_t> index_by_id;
  for (std::size_t i = 0; i < records.size(); ++i)
    index_by_id.emplace(records[i].meta.record_id, i);
  std::vector<forge::SftRecord> selected;
  selected.reserve(selected_ids.size());
  for (const std::string& id : selected_ids) selected.push_back(records[index_by_id.at(id)]);

  write_records(out_path, selected);
  std::cout << "selected " << selected.size() << "/" << records.size() << " records to "
            << out_path << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// cluster

int run_cluster(const Shared& shared, const std::string& features_path, int k,
                const std::string& out_path) {
  const harness::Config cfg = shared.load();

  std::vector<std::string> ids;
  std::vector<std::vector<double>> features;
  for (const ordered_json& row : harness::read_jsonl(features_path)) {
    ids.push_back(row.at("scenario").get<std::string>());
    features.push_back(row.at("features").get<std::vector<double>>());
  }

  const std::map<std::string, std::vector<std::string>> groups =
      forge::cluster_scenarios(ids, features, k, cfg.seed);

  std::vector<ordered_json> rows;
  for (const auto& [cluster, members] : groups)
    rows.push_back({{"cluster", cluster}, {"scenarios", members}});
  harness::write_jsonl(out_path, rows);
  std::cout << "clustered " << ids.size() << " scenarios into " << groups.size() << " groups\n";
  return 0;
}

// ---------------------------------------------------------------------------
// compose

int run_compose(const Shared& shared, const std::string& plan_path, const std::string& in_path,
                const std::string& out_path) {
  const harness::Config cfg = shared.load();
  const ordered_json plan_json = read_json_file(plan_path);

  forge::CompositionPlan plan;
  plan.clusters =
      plan_json.at("clusters").get<std::map<std::string, std::vector<std::string>>>();
  plan.weights = plan_json.at("weights").get<std::map<std::string, double>>();
  plan.total = plan_json.at("total").get<std::int64_t>();

  const std::vector<forge::SftRecord> records = load_sft(in_path);
  std::map<std::string, std::vector<std::string>> pools;
  for (const forge::SftRecord& record : records)
    pools[record.meta.scenario].push_back(record.meta.record_id);

  const std::vector<std::string> selected_ids =
      forge::sample_composition(plan, pools, cfg.seed);
  const std::set<std::string> wanted(selected_ids.begin(), selected_ids.end());

  std::vector<forge::SftRecord> selected;
  for (const forge::SftRecord& record : records)
    if (wanted.count(record.meta.record_id)) selected.push_back(record);

  write_records(out_path, selected);
  std::cout << "composed " << selected.size() << " records to " << out_path << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// bench / report

int run_bench(const Shared& shared, const std::string& bench_path,
              const std::string& judgments_path, bool pairwise, const std::string& model_filter,
              const std::string& out_path, const std::string& format, bool aggregate) {
  const harness::Config cfg = shared.load();
  const std::vector<harness::BenchRecord> bench =
      harness::read_records<harness::BenchRecord>(bench_path, harness::bench_from_json);

  std::vector<harness::JudgmentRecord> judgments = load_judgments(judgments_path);
  if (!model_filter.empty()) {
    std::vector<harness::JudgmentRecord> kept;
    for (harness::JudgmentRecord& judgment : judgments)
      if (judgment.model == model_filter) kept.push_back(std::move(judgment));
    judgments = std::move(kept);
  }

  metrics::MetricReport report =
      pairwise ? harness::evaluate_pairwise_benchmark(judgments, bench)
               : harness::evaluate_benchmark(judgments, bench, cfg.agr_params);

  if (aggregate && !pairwise) {
    std::vector<std::pair<metrics::MetricId, double>> values;
    std::vector<double> baselines;
    values.push_back({metrics::MetricId::mae(), report.overall.mae_value.value()});
    baselines.push_back(metrics::random_baseline(metrics::MetricId::mae(), cfg.rating));
    for (const metrics::AgrParams& p : cfg.agr_params) {
      values.push_back(
          {metrics::MetricId::agreement(p), report.overall.agr_values.at(p.label())});
      baselines.push_back(metrics::random_baseline(metrics::MetricId::agreement(p), cfg.rating));
    }
    report.aggregated = metrics::aggregate_normalized(values, baselines);
  }

  std::cout << harness::emit_report(report, format);
  if (!out_path.empty()) write_text_file(out_path, harness::to_json(report).dump(2) + "\n");
  return 0;
}

int run_report(const Shared& shared, const std::string& single_path,
               const std::string& guided_path, const std::string& metric_label,
               const std::string& format, const std::string& out_path) {
  (void)shared;
  const metrics::MetricReport single_report =
      harness::report_from_json(read_json_file(single_path));
  metrics::MetricReport guided_report = harness::report_from_json(read_json_file(guided_path));

  metrics::AgrParams params;
  if (!metric_label.empty()) {
    params = parse_agr_label(metric_label);
  } else if (!guided_report.params.empty()) {
    params = guided_report.params.front();
  } else {
    raise(ErrorCode::ConfigError, "report carries no agreement metric; pass --metric");
  }

  metrics::attach_reference_delta(guided_report, single_report, params);
  std::cout << harness::emit_report(guided_report, format);
  if (!out_path.empty())
    write_text_file(out_path, harness::to_json(guided_report).dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LLM-as-a-judge development pipeline"};
  app.require_subcommand(1);

  Shared shared;
  app.add_option("--config", shared.config_path, "JSON config file (defaults when absent)");
  shared.seed_opt = app.add_option("--seed", shared.seed, "override the config seed");
  shared.parallelism_opt =
      app.add_option("--parallelism", shared.parallelism, "override worker thread count");

  int exit_code = 0;

  // gen
  auto* gen = app.add_subcommand("gen", "synthesize instructions from a generation spec");
  std::string gen_spec, gen_out, gen_model;
  bool gen_append = false;
  gen->add_option("--spec", gen_spec, "generation spec (jsonl)")->required();
  gen->add_option("--out", gen_out, "output instructions (jsonl)")->required();
  gen->add_option("--model", gen_model, "generator model (default: judge model)");
  gen->add_flag("--append", gen_append, "append to the output file");
  gen->callback([&] { exit_code = run_gen(shared, gen_spec, gen_out, gen_append, gen_model); });

  // classify
  auto* classify = app.add_subcommand("classify", "route instructions to catalog scenarios");
  std::string cls_in, cls_out;
  classify->add_option("--in", cls_in, "instructions (jsonl)")->required();
  classify->add_option("--out", cls_out, "output instructions (jsonl)")->required();
  classify->callback([&] { exit_code = run_classify(shared, cls_in, cls_out); });

  // respond
  auto* respond = app.add_subcommand("respond", "collect model responses to instructions");
  std::string rsp_in, rsp_out;
  std::vector<std::string> rsp_models;
  respond->add_option("--in", rsp_in, "instructions (jsonl)")->required();
  respond->add_option("--out", rsp_out, "output responses (jsonl)")->required();
  respond->add_option("--model", rsp_models, "responder model (repeatable)");
  respond->callback([&] { exit_code = run_respond(shared, rsp_in, rsp_out, rsp_models); });

  // judge
  auto* judge = app.add_subcommand("judge", "grade responses with the judge model");
  std::string jdg_instructions, jdg_responses, jdg_out, jdg_mode = "single";
  std::string jdg_rating, jdg_model;
  bool jdg_resume = false;
  judge->add_option("--instructions", jdg_instructions, "instructions (jsonl)")->required();
  judge->add_option("--responses", jdg_responses, "responses (jsonl)")->required();
  judge->add_option("--out", jdg_out, "output judgments (jsonl)")->required();
  judge->add_option("--mode", jdg_mode, "single | reference_guided | pairwise");
  judge->add_option("--rating", jdg_rating, "rating scale name (default from config)");
  judge->add_option("--judge-model", jdg_model, "judge model (default from config)");
  judge->add_flag("--resume", jdg_resume, "skip tasks already present in --out");
  judge->callback([&] {
    exit_code = run_judge(shared, jdg_instructions, jdg_responses, jdg_out, jdg_mode, jdg_resume,
                          jdg_rating, jdg_model);
  });

  // build-sft
  auto* build = app.add_subcommand("build-sft", "turn judgments into fine-tuning records");
  std::string bld_instructions, bld_responses, bld_judgments, bld_out, bld_rating;
  bool bld_double = false;
  build->add_option("--instructions", bld_instructions, "instructions (jsonl)")->required();
  build->add_option("--responses", bld_responses, "responses (jsonl)")->required();
  build->add_option("--judgments", bld_judgments, "judgments (jsonl)")->required();
  build->add_option("--out", bld_out, "output training records (jsonl)")->required();
  build->add_option("--rating", bld_rating, "rating scale name (default from config)");
  build->add_flag("--double", bld_double, "append the order-swapped twin of each pairwise record");
  build->callback([&] {
    exit_code = run_build_sft(shared, bld_instructions, bld_responses, bld_judgments, bld_out,
                              bld_double, bld_rating);
  });

  // balance
  auto* balance = app.add_subcommand("balance", "down-sample over-represented overall scores");
  std::string bal_in, bal_out, bal_target;
  balance->add_option("--in", bal_in, "training records (jsonl)")->required();
  balance->add_option("--out", bal_out, "output records (jsonl)")->required();
  balance->add_option("--target", bal_target,
                      "explicit caps as score:cap[,score:cap...] (default: median bucket)");
  balance->callback([&] { exit_code = run_balance(shared, bal_in, bal_out, bal_target); });

  // augment
  auto* augment = app.add_subcommand("augment", "diversify prompts: rephrase / down-sample / remap");
  std::string aug_in, aug_out, aug_weights, aug_targets;
  double aug_rephrase = 1.0, aug_threshold = 0.4;
  int aug_min = 2, aug_max = 5;
  augment->add_option("--in", aug_in, "training records (jsonl)")->required();
  augment->add_option("--out", aug_out, "output records (jsonl)")->required();
  augment->add_option("--weights", aug_weights,
                      "rephrase,downsample,remap,identity mix weights (default 1,1,1,1)");
  augment->add_option("--rephrase-prob", aug_rephrase, "per-criterion alias swap chance");
  augment->add_option("--downsample-min", aug_min, "minimum surviving criteria");
  augment->add_option("--downsample-max", aug_max, "maximum surviving criteria");
  augment->add_option("--targets", aug_targets,
                      "comma-separated rating scales for the remap transform");
  augment->add_option("--threshold", aug_threshold, "alias similarity gate (jaccard)");
  augment->callback([&] {
    exit_code = run_augment(shared, aug_in, aug_out, aug_weights, aug_rephrase, aug_min, aug_max,
                            aug_targets, aug_threshold);
  });

  // select
  auto* select = app.add_subcommand("select", "keep the hardest records by following difficulty");
  std::string sel_in, sel_out, sel_policy = "drop", sel_scores;
  std::size_t sel_budget = 0;
  double sel_z = 3.0;
  select->add_option("--in", sel_in, "training records (jsonl)")->required();
  select->add_option("--out", sel_out, "output records (jsonl)")->required();
  select->add_option("--budget", sel_budget, "maximum records to keep")->required();
  select->add_option("--policy", sel_policy, "drop (ratio > 1) or z (adds outlier removal)");
  select->add_option("--z-threshold", sel_z, "scenario z cutoff for --policy z");
  select->add_option("--scores", sel_scores, "also write per-record difficulty scores (jsonl)");
  select->callback([&] {
    exit_code = run_select(shared, sel_in, sel_out, sel_budget, sel_policy, sel_z, sel_scores);
  });

  // cluster
  auto* cluster = app.add_subcommand("cluster", "group scenarios by feature vectors");
  std::string clu_features, clu_out;
  int clu_k = 2;
  cluster->add_option("--features", clu_features, "scenario feature rows (jsonl)")->required();
  cluster->add_option("--k", clu_k, "cluster count")->required();
  cluster->add_option("--out", clu_out, "output clusters (jsonl)")->required();
  cluster->callback([&] { exit_code = run_cluster(shared, clu_features, clu_k, clu_out); });

  // compose
  auto* compose = app.add_subcommand("compose", "sample a training mix per a composition plan");
  std::string cmp_plan, cmp_in, cmp_out;
  compose->add_option("--plan", cmp_plan, "composition plan (json)")->required();
  compose->add_option("--in", cmp_in, "training records (jsonl)")->required();
  compose->add_option("--out", cmp_out, "output records (jsonl)")->required();
  compose->callback([&] { exit_code = run_compose(shared, cmp_plan, cmp_in, cmp_out); });

  // bench
  auto* bench = app.add_subcommand("bench", "score judgments against a labeled benchmark");
  std::string bch_bench, bch_judgments, bch_model, bch_out, bch_format = "table";
  bool bch_pairwise = false, bch_aggregate = false;
  bench->add_option("--bench", bch_bench, "benchmark labels (jsonl)")->required();
  bench->add_option("--judgments", bch_judgments, "judgments (jsonl)")->required();
  bench->add_option("--model", bch_model, "only judgments of this responder model");
  bench->add_option("--out", bch_out, "also write the full report (json)");
  bench->add_option("--format", bch_format, "table | jsonl");
  bench->add_flag("--pairwise", bch_pairwise, "three-way pairwise accuracy instead of grading");
  bench->add_flag("--aggregate", bch_aggregate,
                  "add the baseline-normalized multi-metric aggregate");
  bench->callback([&] {
    exit_code = run_bench(shared, bch_bench, bch_judgments, bch_pairwise, bch_model, bch_out,
                          bch_format, bch_aggregate);
  });

  // report
  auto* report = app.add_subcommand("report", "merge single and reference-guided reports");
  std::string rpt_single, rpt_guided, rpt_metric, rpt_format = "table", rpt_out;
  report->add_option("--single", rpt_single, "single-answer report (json)")->required();
  report->add_option("--guided", rpt_guided, "reference-guided report (json)")->required();
  report->add_option("--metric", rpt_metric, "agreement label to diff (default: first)");
  report->add_option("--format", rpt_format, "table | jsonl");
  report->add_option("--out", rpt_out, "also write the merged report (json)");
  report->callback([&] {
    exit_code = run_report(shared, rpt_single, rpt_guided, rpt_metric, rpt_format, rpt_out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
