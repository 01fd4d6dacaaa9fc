#include "judgekit/harness/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <vector>

#include "judgekit/errors.hpp"
#include "judgekit/metrics/metrics.hpp"

namespace judgekit::harness {

namespace {

// Pairs joined per scenario, in first-appearance order of the bench file.
struct ScenarioBucket {
  std::string scenario;
  std::vector<metrics::ScoredPair> pairs;
  double label_sum = 0.0;
};

struct Joined {
  std::vector<ScenarioBucket> buckets;
  double coverage = 1.0;
};

const BenchRecord& bench_for(const std::map<std::string, const BenchRecord*>& by_id,
                             const std::string& instruction_id) {
  auto hit = by_id.find(instruction_id);
  if (hit == by_id.end())
    raise(ErrorCode::IdMismatch, "no benchmark label for instruction '" + instruction_id + "'");
  return *hit->second;
}

ScenarioBucket& bucket_for(Joined& joined, const std::string& scenario) {
  for (ScenarioBucket& bucket : joined.buckets)
    if (bucket.scenario == scenario) return bucket;
  joined.buckets.push_back({scenario, {}, 0.0});
  return joined.buckets.back();
}

// Joins judgments to labels. `predict` extracts the (predicted, labeled)
// pair from one ok judgment + its bench record.
template <typename Fn>
Joined join(const std::vector<JudgmentRecord>& judgments, const std::vector<BenchRecord>& bench,
            Fn&& predict) {
  if (judgments.empty()) raise(ErrorCode::EmptyInput, "no judgments to evaluate");

  std::map<std::string, const BenchRecord*> by_id;
  for (const BenchRecord& record : bench) by_id.emplace(record.instruction_id, &record);

  Joined joined;
  // Scenario order is fixed by the benchmark file, not by join order.
  for (const BenchRecord& record : bench) bucket_for(joined, record.scenario);

  std::size_t contributed = 0;
  for (const JudgmentRecord& judgment : judgments) {
    const BenchRecord& label = bench_for(by_id, judgment.instruction_id);
    if (!judgment.ok()) continue;
    metrics::ScoredPair pair = predict(judgment, label);
    pair.scenario = label.scenario;
    ScenarioBucket& bucket = bucket_for(joined, label.scenario);
    bucket.label_sum += pair.labeled;
    bucket.pairs.push_back(std::move(pair));
    ++contributed;
  }
  joined.coverage =
      static_cast<double>(contributed) / static_cast<double>(judgments.size());

  // Drop scenarios that ended up with no joined pairs.
  std::vector<ScenarioBucket> kept;
  for (ScenarioBucket& bucket : joined.buckets)
    if (!bucket.pairs.empty()) kept.push_back(std::move(bucket));
  joined.buckets = std::move(kept);
  if (joined.buckets.empty())
    raise(ErrorCode::EmptyInput, "no judgment joined a benchmark label");
  return joined;
}

metrics::MetricReport report_from(const Joined& joined,
                                  const std::vector<metrics::AgrParams>& params, bool with_mae,
                                  const std::optional<std::string>& accuracy_key) {
  metrics::MetricReport report;
  report.params = params;
  report.coverage = joined.coverage;

  std::vector<std::pair<std::int64_t, double>> mae_rows;
  std::map<std::string, std::vector<std::pair<std::int64_t, double>>> agr_rows;
  std::vector<std::pair<std::int64_t, double>> label_rows;
  std::int64_t total = 0;

  for (const ScenarioBucket& bucket : joined.buckets) {
    metrics::ReportRow row;
    row.scenario = bucket.scenario;
    row.count = static_cast<std::int64_t>(bucket.pairs.size());
    total += row.count;
    if (with_mae) {
      row.mae_value = metrics::mae(bucket.pairs);
      mae_rows.push_back({row.count, *row.mae_value});
      row.avg_label = bucket.label_sum / static_cast<double>(bucket.pairs.size());
      label_rows.push_back({row.count, *row.avg_label});
    }
    for (const metrics::AgrParams& p : params) {
      const double value = metrics::agr(bucket.pairs, p);
      row.agr_values[p.label()] = value;
      agr_rows[p.label()].push_back({row.count, value});
    }
    if (accuracy_key) {
      // Three-way exact match: the kernel with p=1, q=0 is 1 iff equal.
      const double value = metrics::agr(bucket.pairs, {1, 0.0});
      row.agr_values[*accuracy_key] = value;
      agr_rows[*accuracy_key].push_back({row.count, value});
    }
    report.rows.push_back(std::move(row));
  }

  report.overall.scenario = metrics::kOverallRow;
  report.overall.count = total;
  if (with_mae) {
    report.overall.mae_value = metrics::weighted_overall(mae_rows);
    report.overall.avg_label = metrics::weighted_overall(label_rows);
  }
  for (const auto& [label, rows] : agr_rows)
    report.overall.agr_values[label] = metrics::weighted_overall(rows);

  // z-scores over the overall row plus every scenario row, on the first
  // agreement variant present.
  std::string z_key;
  if (!params.empty())
    z_key = params.front().label();
  else if (accuracy_key)
    z_key = *accuracy_key;
  if (!z_key.empty() && report.rows.size() + 1 >= 2) {
    std::vector<double> values{report.overall.agr_values.at(z_key)};
    for (const metrics::ReportRow& row : report.rows) values.push_back(row.agr_values.at(z_key));
    const std::vector<double> zs = metrics::z_values(values);
    report.overall.z_value = zs[0];
    for (std::size_t i = 0; i < report.rows.size(); ++i) report.rows[i].z_value = zs[i + 1];
  }
  return report;
}

std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3f", value);
  return buffer;
}

}  // namespace

metrics::MetricReport evaluate_benchmark(const std::vector<JudgmentRecord>& judgments,
                                         const std::vector<BenchRecord>& bench,
                                         const std::vector<metrics::AgrParams>& params) {
  Joined joined = join(judgments, bench,
                       [](const JudgmentRecord& judgment, const BenchRecord& label) {
                         if (!judgment.verdict)
                           raise(ErrorCode::MissingScore, "judgment for '" +
                                                              judgment.instruction_id +
                                                              "' carries no graded verdict");
                         if (!label.label_score)
                           raise(ErrorCode::MissingField, "benchmark record '" +
                                                              label.instruction_id +
                                                              "' lacks label_score");
                         metrics::ScoredPair pair;
                         pair.predicted = judgment.verdict->overall;
                         pair.labeled = *label.label_score;
                         return pair;
                       });
  return report_from(joined, params, /*with_mae=*/true, std::nullopt);
}

metrics::MetricReport evaluate_pairwise_benchmark(const std::vector<JudgmentRecord>& judgments,
                                                  const std::vector<BenchRecord>& bench) {
  Joined joined = join(judgments, bench,
                       [](const JudgmentRecord& judgment, const BenchRecord& label) {
                         if (!judgment.pair_verdict)
                           raise(ErrorCode::MissingScore, "judgment for '" +
                                                              judgment.instruction_id +
                                                              "' carries no pairwise verdict");
                         if (!label.label_winner)
                           raise(ErrorCode::MissingField, "benchmark record '" +
                                                              label.instruction_id +
                                                              "' lacks label_winner");
                         metrics::ScoredPair pair;
                         pair.predicted = static_cast<int>(judgment.pair_verdict->winner);
                         pair.labeled = static_cast<int>(*label.label_winner);
                         return pair;
                       });
  return report_from(joined, {}, /*with_mae=*/false, std::string("accuracy"));
}

std::string emit_report(const metrics::MetricReport& report, const std::string& format) {
  if (format == "jsonl") {
    std::string out;
    for (const metrics::ReportRow& row : report.rows) out += to_json(row).dump() + "\n";
    out += to_json(report.overall).dump() + "\n";
    return out;
  }
  if (format != "table")
    raise(ErrorCode::UnsupportedFormat, "unknown report format '" + format + "'");

  // Column set: scenario, count, mae?, agreement variants, avg label?, z,
  // reference delta?.
  std::vector<std::string> agr_keys;
  for (const metrics::AgrParams& p : report.params) agr_keys.push_back(p.label());
  for (const auto& [key, value] : report.overall.agr_values) {
    (void)value;
    bool known = false;
    for (const std::string& existing : agr_keys) known = known || existing == key;
    if (!known) agr_keys.push_back(key);
  }

  const std::vector<const metrics::ReportRow*> rows = report.all_rows();
  bool any_mae = false, any_label = false, any_delta = false;
  for (const metrics::ReportRow* row : rows) {
    any_mae = any_mae || row->mae_value.has_value();
    any_label = any_label || row->avg_label.has_value();
    any_delta = any_delta || row->delta_reference.has_value();
  }

  std::vector<std::string> header{"scenario", "#tests"};
  if (any_mae) header.push_back("mae");
  for (const std::string& key : agr_keys) header.push_back(key);
  if (any_label) header.push_back("avg_label");
  header.push_back("z");
  if (any_delta) header.push_back("delta_ref");

  std::vector<std::vector<std::string>> table{header};
  for (const metrics::ReportRow* row : rows) {
    std::vector<std::string> cells{row->scenario, std::to_string(row->count)};
    if (any_mae) cells.push_back(row->mae_value ? format_double(*row->mae_value) : "-");
    for (const std::string& key : agr_keys) {
      auto hit = row->agr_values.find(key);
      cells.push_back(hit == row->agr_values.end() ? "-" : format_double(hit->second));
    }
    if (any_label) cells.push_back(row->avg_label ? format_double(*row->avg_label) : "-");
    cells.push_back(format_double(row->z_value));
    if (any_delta)
      cells.push_back(row->delta_reference ? format_double(*row->delta_reference) : "-");
    table.push_back(std::move(cells));
  }

  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& cells : table)
    for (std::size_t c = 0; c < cells.size(); ++c)
      widths[c] = std::max(widths[c], cells[c].size());

  std::string out;
  for (const auto& cells : table) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) out += "  ";
      const std::size_t pad = widths[c] - cells[c].size();
      if (c == 0) {  // left-align the scenario column, right-align numbers
        out += cells[c];
        out.append(pad, ' ');
      } else {
        out.append(pad, ' ');
        out += cells[c];
      }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += "\n";
  }
  out += "coverage: " + format_double(report.coverage) + "\n";
  if (report.aggregated) out += "aggregated: " + format_double(*report.aggregated) + "\n";
  return out;
}

}  // namespace judgekit::harness
