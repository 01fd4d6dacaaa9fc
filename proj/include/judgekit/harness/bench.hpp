#pragma once

#include <string>
#include <vector>

#include "judgekit/harness/jsonl.hpp"
#include "judgekit/metrics/report.hpp"

namespace judgekit::harness {

// Joins graded judgments to their benchmark labels by instruction id and
// computes MAE plus every requested agreement variant per scenario and
// overall (count-weighted). z-values are taken over the scenario rows plus
// the overall row on the first agreement variant. Judgments with errors are
// skipped and reported via coverage; a judgment whose id has no benchmark
// label raises IdMismatch. Scenario rows follow first appearance among the
// benchmark records.
metrics::MetricReport evaluate_benchmark(const std::vector<JudgmentRecord>& judgments,
                                         const std::vector<BenchRecord>& bench,
                                         const std::vector<metrics::AgrParams>& params);

// Pairwise counterpart: three-way exact-match accuracy per scenario and
// overall, reported under the agreement key "accuracy".
metrics::MetricReport evaluate_pairwise_benchmark(const std::vector<JudgmentRecord>& judgments,
                                                  const std::vector<BenchRecord>& bench);

// Renders a report as an aligned text table ("table") or as JSONL rows with
// the overall row last ("jsonl"). Any other format raises UnsupportedFormat.
std::string emit_report(const metrics::MetricReport& report, const std::string& format);

}  // namespace judgekit::harness
