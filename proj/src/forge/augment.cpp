#include "judgekit/forge/augment.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "judgekit/detail/hash.hpp"
#include "judgekit/detail/rng.hpp"
#include "judgekit/detail/strings.hpp"
#include "judgekit/errors.hpp"
#include "judgekit/prompts/render.hpp"
#include "judgekit/prompts/similarity.hpp"
#include "judgekit/verdict.hpp"

namespace judgekit::forge {

namespace {

constexpr std::string_view kCriteriaBegin = "[Criteria Begin]\n\n";
constexpr std::string_view kCriteriaEnd = "\n\n[Criteria End]";

struct CriteriaEntry {
  std::string name;
  std::string description;
};

struct CriteriaSection {
  std::size_t content_begin = 0;
  std::size_t content_end = 0;
  std::vector<CriteriaEntry> entries;
};

CriteriaSection parse_criteria_section(const std::string& prompt) {
  CriteriaSection section;
  std::size_t begin = prompt.find(kCriteriaBegin);
  std::size_t end = begin == std::string::npos ? std::string::npos
                                               : prompt.find(kCriteriaEnd, begin);
  if (end == std::string::npos)
    raise(ErrorCode::ParseFailure, "prompt carries no criteria block");
  section.content_begin = begin + kCriteriaBegin.size();
  section.content_end = end;

  std::string_view block{prompt.data() + section.content_begin,
                         section.content_end - section.content_begin};
  for (const auto& span : detail::split_lines(block)) {
    std::string_view line = block.substr(span.begin, span.end - span.begin);
    if (detail::trim(line).empty()) continue;
    std::size_t digits = 0;
    while (digits < line.size() && line[digits] >= '0' && line[digits] <= '9') ++digits;
    if (digits == 0 || !detail::starts_with(line.substr(digits), ". "))
      raise(ErrorCode::ParseFailure, "criteria line is not numbered: " + std::string(line));
    std::string_view rest = line.substr(digits + 2);
    std::size_t colon = rest.find(": ");
    if (colon == std::string::npos || colon == 0)
      raise(ErrorCode::ParseFailure, "criteria line has no name: " + std::string(line));
    section.entries.push_back(
        {std::string(rest.substr(0, colon)), std::string(rest.substr(colon + 2))});
  }
  if (section.entries.empty())
    raise(ErrorCode::ParseFailure, "criteria block lists no criteria");
  return section;
}

std::string render_entries(const std::vector<CriteriaEntry>& entries) {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out += '\n';
    out += std::to_string(i + 1);
    out += ". ";
    out += entries[i].name;
    out += ": ";
    out += entries[i].description;
  }
  return out;
}

void splice_entries(std::string& prompt, const CriteriaSection& section,
                    const std::vector<CriteriaEntry>& entries) {
  prompt.replace(section.content_begin, section.content_end - section.content_begin,
                 render_entries(entries));
}

// A criterion as listed in a prompt may already be an alias phrasing; gate
// comparisons always run against the catalog's original criterion.
const Criterion* find_criterion(const Scenario& scenario, const std::string& listed_name) {
  for (const Criterion& criterion : scenario.criteria) {
    if (criterion.name == listed_name) return &criterion;
    for (const CriterionAlias& alias : criterion.aliases)
      if (alias.name == listed_name) return &criterion;
  }
  return nullptr;
}

std::optional<long long> parse_integer_token(std::string_view content) {
  std::string_view body = detail::trim(content);
  if (body.empty()) return std::nullopt;
  std::size_t i = body[0] == '+' || body[0] == '-' ? 1 : 0;
  if (i == body.size()) return std::nullopt;
  for (std::size_t j = i; j < body.size(); ++j)
    if (body[j] < '0' || body[j] > '9') return std::nullopt;
  return std::stoll(std::string(body));
}

void apply_rephrase(SftRecord& record, detail::Rng& rng, const AugmentOptions& options,
                    const ScenarioCatalog& catalog) {
  CriteriaSection section = parse_criteria_section(record.prompt);
  const Scenario& scenario = catalog.by_id(record.meta.scenario);

  bool changed = false;
  for (CriteriaEntry& entry : section.entries) {
    const Criterion* criterion = find_criterion(scenario, entry.name);
    if (criterion == nullptr || criterion->aliases.empty()) continue;
    if (rng.unit() >= options.rephrase_prob) continue;
    std::size_t start = rng.below(criterion->aliases.size());
    for (std::size_t offset = 0; offset < criterion->aliases.size(); ++offset) {
      const CriterionAlias& alias =
          criterion->aliases[(start + offset) % criterion->aliases.size()];
      if (alias.name == entry.name) continue;
      if (!prompts::similarity_gate(*criterion, alias.name, alias.description,
                                    options.similarity_threshold))
        continue;
      entry.name = alias.name;
      entry.description = alias.description;
      changed = true;
      break;
    }
  }
  if (changed) splice_entries(record.prompt, section, section.entries);
}

void apply_downsample(SftRecord& record, detail::Rng& rng, const AugmentOptions& options,
                      const RatingSystem& rating) {
  if (!options.regression)
    raise(ErrorCode::NoRegressionModel,
          "criteria down-sampling needs a fitted sub-score regression");

  CriteriaSection section = parse_criteria_section(record.prompt);
  std::size_t available = section.entries.size();
  std::size_t span = static_cast<std::size_t>(options.downsample_max - options.downsample_min);
  std::size_t drawn = static_cast<std::size_t>(options.downsample_min) + rng.below(span + 1);
  std::size_t keep = std::clamp<std::size_t>(drawn, 1, available);

  std::vector<std::size_t> picked = rng.sample_indices(available, keep);
  std::vector<CriteriaEntry> survivors;
  survivors.reserve(picked.size());
  for (std::size_t index : picked) survivors.push_back(section.entries[index]);
  splice_entries(record.prompt, section, survivors);

  // Graded targets get their overall re-derived from the judge's sub-scores;
  // pairwise targets keep their scores (there is no single overall to move).
  if (record.meta.mode == JudgeMode::pairwise) return;

  GradedVerdict verdict = parse_graded_verdict(record.target, rating);
  std::vector<std::optional<double>> features(options.regression->weights.size(), std::nullopt);
  std::size_t slot = 0;
  for (const ScoredItem& item : verdict.strengths)
    if (slot < features.size()) features[slot++] = static_cast<double>(item.score);
  for (const ScoredItem& item : verdict.weaknesses)
    if (slot < features.size()) features[slot++] = static_cast<double>(item.score);

  int overall = options.regression->predict(features, rating);
  std::vector<BracketToken> tokens = scan_bracket_tokens(record.target);
  // parse_graded_verdict guarantees at least the overall token.
  const BracketToken& first = tokens.front();
  record.target = record.target.substr(0, first.begin) + "[[" + std::to_string(overall) + "]]" +
                  record.target.substr(first.end);
  record.meta.overall = overall;
}

void apply_remap(SftRecord& record, detail::Rng& rng, const AugmentOptions& options,
                 const prompts::PromptLibrary& lib) {
  RatingSystem from = RatingSystem::of(record.meta.rating);
  std::vector<RatingSystem> candidates;
  for (const RatingSystem& candidate : options.rating_targets)
    if (!(candidate == from)) candidates.push_back(candidate);
  if (candidates.empty()) return;

  RatingSystem to = candidates[rng.below(candidates.size())];
  record.prompt = prompts::retarget_prompt_rating(record.prompt, from, to, lib.tiers);

  std::string target;
  target.reserve(record.target.size());
  std::size_t cursor = 0;
  for (const BracketToken& token : scan_bracket_tokens(record.target)) {
    target.append(record.target, cursor, token.begin - cursor);
    if (auto value = parse_integer_token(token.content)) {
      target += "[[";
      target += std::to_string(remap_rating(static_cast<int>(*value), from, to));
      target += "]]";
    } else {
      target.append(record.target, token.begin, token.end - token.begin);
    }
    cursor = token.end;
  }
  target.append(record.target, cursor, record.target.size() - cursor);
  record.target = std::move(target);

  record.meta.rating = to.kind;
  if (record.meta.overall) record.meta.overall = remap_rating(*record.meta.overall, from, to);
}

}  // namespace

std::vector<SftRecord> augment_custom_prompts(const std::vector<SftRecord>& records,
                                              const AugmentOptions& options,
                                              const ScenarioCatalog& catalog,
                                              const prompts::PromptLibrary& lib,
                                              std::uint64_t seed) {
  double total_weight = 0.0;
  for (double weight : options.mix_weights) {
    if (weight < 0.0) raise(ErrorCode::ConfigError, "transform weights must be non-negative");
    total_weight += weight;
  }
  if (total_weight <= 0.0)
    raise(ErrorCode::ConfigError, "at least one transform weight must be positive");
  if (options.downsample_min < 1 || options.downsample_max < options.downsample_min)
    raise(ErrorCode::ConfigError, "down-sample bounds must satisfy 1 <= min <= max");
  if (options.rephrase_prob < 0.0 || options.rephrase_prob > 1.0)
    raise(ErrorCode::ConfigError, "rephrase probability must be in [0, 1]");
  if (options.similarity_threshold < 0.0 || options.similarity_threshold > 1.0)
    raise(ErrorCode::ConfigError, "similarity threshold must be in [0, 1]");

  std::vector<SftRecord> augmented;
  augmented.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    // One stream per record index: reordering the mix weights or editing one
    // record never shifts another record's draws.
    detail::Rng rng(detail::mix(seed, static_cast<std::uint64_t>(i)));

    double roll = rng.unit() * total_weight;
    int transform = 3;
    double accumulated = 0.0;
    for (int t = 0; t < 4; ++t) {
      accumulated += options.mix_weights[static_cast<std::size_t>(t)];
      if (roll < accumulated) {
        transform = t;
        break;
      }
    }

    SftRecord out = records[i];
    RatingSystem rating = RatingSystem::of(out.meta.rating);
    switch (transform) {
      case 0:
        apply_rephrase(out, rng, options, catalog);
        break;
      case 1:
        apply_downsample(out, rng, options, rating);
        break;
      case 2:
        apply_remap(out, rng, options, lib);
        break;
      default:
        break;  // identity
    }

    // Whatever the transform did, the record must still parse as judge output
    // under its (possibly new) scale; the labeling doubles as that check.
    out.spans = label_token_spans(out.target, out.meta.mode, RatingSystem::of(out.meta.rating));
    augmented.push_back(std::move(out));
  }
  return augmented;
}

}  // namespace judgekit::forge
