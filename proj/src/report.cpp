#include "judgekit/metrics/report.hpp"

#include "judgekit/errors.hpp"

namespace judgekit::metrics {

std::vector<const ReportRow*> MetricReport::all_rows() const {
  std::vector<const ReportRow*> out;
  out.reserve(rows.size() + 1);
  out.push_back(&overall);
  for (const auto& row : rows) out.push_back(&row);
  return out;
}

const ReportRow* MetricReport::find(const std::string& scenario) const {
  if (scenario == kOverallRow) return &overall;
  for (const auto& row : rows)
    if (row.scenario == scenario) return &row;
  return nullptr;
}

namespace {

double agr_of(const ReportRow& row, const std::string& key, const std::string& scenario) {
  const auto it = row.agr_values.find(key);
  if (it == row.agr_values.end())
    raise(ErrorCode::ScenarioMismatch,
          "row '" + scenario + "' does not carry metric '" + key + "'");
  return it->second;
}

}  // namespace

std::vector<std::pair<std::string, double>> reference_delta(const MetricReport& single_report,
                                                            const MetricReport& guided_report,
                                                            const AgrParams& params) {
  if (single_report.rows.size() != guided_report.rows.size())
    raise(ErrorCode::ScenarioMismatch, "reports cover different scenario counts");

  const std::string key = params.label();
  std::vector<std::pair<std::string, double>> deltas;
  deltas.reserve(single_report.rows.size() + 1);
  deltas.emplace_back(kOverallRow, agr_of(guided_report.overall, key, kOverallRow) -
                                       agr_of(single_report.overall, key, kOverallRow));
  for (const auto& row : single_report.rows) {
    const ReportRow* other = guided_report.find(row.scenario);
    if (other == nullptr)
      raise(ErrorCode::ScenarioMismatch,
            "scenario '" + row.scenario + "' is missing from the reference-guided report");
    deltas.emplace_back(row.scenario,
                        agr_of(*other, key, row.scenario) - agr_of(row, key, row.scenario));
  }
  return deltas;
}

void attach_reference_delta(MetricReport& guided_report, const MetricReport& single_report,
                            const AgrParams& params) {
  const auto deltas = reference_delta(single_report, guided_report, params);
  for (const auto& [scenario, delta] : deltas) {
    if (scenario == kOverallRow) {
      guided_report.overall.delta_reference = delta;
      continue;
    }
    for (auto& row : guided_report.rows)
      if (row.scenario == scenario) row.delta_reference = delta;
  }
}

}  // namespace judgekit::metrics
