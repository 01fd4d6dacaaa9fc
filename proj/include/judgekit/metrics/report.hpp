#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "judgekit/metrics/metrics.hpp"

namespace judgekit::metrics {

// Canonical scenario label of the overall (count-weighted) report row.
inline const std::string kOverallRow = "All";

struct ReportRow {
  std::string scenario;  // scenario id, or kOverallRow
  std::int64_t count = 0;
  std::optional<double> mae_value;
  std::map<std::string, double> agr_values;  // keyed by AgrParams::label()
  std::optional<double> avg_label;           // mean human label
  double z_value = 0.0;
  std::optional<double> delta_reference;  // reference-guided minus single
};

struct MetricReport {
  std::vector<ReportRow> rows;  // per-scenario, first-appearance order
  ReportRow overall;
  std::vector<AgrParams> params;   // agreement variants present in rows
  double coverage = 1.0;           // judged fraction of benchmark items
  std::optional<double> aggregated;  // normalized multi-metric aggregate

  // Rows with the overall row first; convenience for emitters.
  std::vector<const ReportRow*> all_rows() const;
  const ReportRow* find(const std::string& scenario) const;
};

// Per-scenario and overall difference (reference-guided minus single-answer)
// on the agreement metric `params`, as (scenario, delta) with the overall row
// first. Reports must cover identical scenario sets (ScenarioMismatch) and
// carry the requested metric (ScenarioMismatch mentions the missing key).
std::vector<std::pair<std::string, double>> reference_delta(const MetricReport& single_report,
                                                            const MetricReport& guided_report,
                                                            const AgrParams& params);

// Copies the deltas into guided_report's rows (delta_reference fields).
void attach_reference_delta(MetricReport& guided_report, const MetricReport& single_report,
                            const AgrParams& params);

}  // namespace judgekit::metrics
