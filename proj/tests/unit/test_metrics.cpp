#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fixtures.hpp"
#include "judgekit/detail/rng.hpp"
#include "judgekit/errors.hpp"
#include "judgekit/metrics/metrics.hpp"
#include "judgekit/metrics/report.hpp"
#include "judgekit/rating.hpp"

using namespace judgekit;
using namespace judgekit::metrics;
using fixtures::AgreementRow;

namespace {

const RatingSystem kFiveTier = RatingSystem::of(RatingKind::five_tier);

// Independent oracle for the agreement kernel, written as a distance table
// rather than a formula so the two implementations cannot share a bug.
double kernel_oracle_2_2(int distance) {
  // 1/(|d|+1)^2 inside the window |d| < 2, zero outside.
  switch (distance) {
    case 0: return 1.0;
    case 1: return 0.25;
    default: return 0.0;
  }
}

std::vector<double> panel_values(const AgreementRow& overall,
                                 const std::vector<AgreementRow>& rows, bool guided = false) {
  std::vector<double> values;
  values.push_back(guided ? overall.agr_guided : overall.agr_single);
  for (const AgreementRow& row : rows)
    values.push_back(guided ? row.agr_guided : row.agr_single);
  return values;
}

MetricReport report_from_panel(const AgreementRow& overall,
                               const std::vector<AgreementRow>& rows, bool guided) {
  MetricReport report;
  report.params = {{2, 2.0}};
  auto fill = [&](ReportRow& out, const AgreementRow& in) {
    out.scenario = in.scenario;
    out.count = in.count;
    out.agr_values["agr_2_2"] = guided ? in.agr_guided : in.agr_single;
    out.avg_label = in.avg_label;
  };
  fill(report.overall, overall);
  report.rows.resize(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) fill(report.rows[i], rows[i]);
  return report;
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("agreement kernel matches the distance table on every five-tier pair") {
  const AgrParams window2{2, 2.0};
  const AgrParams exact_match{1, 0.0};
  for (int predicted = 1; predicted <= 5; ++predicted) {
    for (int labeled = 1; labeled <= 5; ++labeled) {
      const int distance = std::abs(predicted - labeled);
      CHECK(agr_kernel(predicted, labeled, window2) == kernel_oracle_2_2(distance));
      CHECK(agr_kernel(predicted, labeled, exact_match) == (distance == 0 ? 1.0 : 0.0));
    }
  }

  // Wider window and fractional decay: 1/(d+1)^q, checked against direct
  // arithmetic.
  const AgrParams wide{3, 0.5};
  CHECK(agr_kernel(1, 1, wide) == 1.0);
  CHECK(std::abs(agr_kernel(1, 2, wide) - 1.0 / std::sqrt(2.0)) <= 1e-12);
  CHECK(std::abs(agr_kernel(1, 3, wide) - 1.0 / std::sqrt(3.0)) <= 1e-12);
  CHECK(agr_kernel(1, 4, wide) == 0.0);
}

TEST_CASE("agreement parameter labels") {
  CHECK(AgrParams{2, 2.0}.label() == "agr_2_2");
  CHECK(AgrParams{1, 0.0}.label() == "agr_1_0");
  CHECK(AgrParams{1, 0.5}.label() == "agr_1_0.5");
  CHECK(AgrParams{3, 1.25}.label() == "agr_3_1.25");
}

TEST_CASE("mae and agr over explicit pairs") {
  std::vector<ScoredPair> pairs = {{4, 4, "a"}, {1, 3, "a"}, {5, 4, "b"}};
  CHECK(std::abs(mae(pairs) - (0 + 2 + 1) / 3.0) <= 1e-12);
  CHECK(std::abs(agr(pairs, {2, 2.0}) - (1.0 + 0.0 + 0.25) / 3.0) <= 1e-12);
  CHECK(std::abs(agr(pairs, {1, 0.0}) - 1.0 / 3.0) <= 1e-12);

  CHECK_THROWS_AS(mae({}), Error);
  CHECK_THROWS_AS(agr({}, {2, 2.0}), Error);
}

TEST_CASE("frozen panel: count-weighted overall is reproduced within 0.001") {
  auto reconstruct = [](const std::vector<AgreementRow>& rows) {
    std::vector<std::pair<std::int64_t, double>> weighted;
    for (const AgreementRow& row : rows) weighted.push_back({row.count, row.agr_single});
    return weighted_overall(weighted);
  };
  CHECK(std::abs(reconstruct(fixtures::kNaturalPanelRows) -
                 fixtures::kNaturalPanelOverall.agr_single) < 0.001);
  CHECK(std::abs(reconstruct(fixtures::kSyntheticPanelRows) -
                 fixtures::kSyntheticPanelOverall.agr_single) < 0.001);

  // The counts themselves must add up to the overall row's count.
  std::int64_t natural = 0, synthetic = 0;
  for (const auto& row : fixtures::kNaturalPanelRows) natural += row.count;
  for (const auto& row : fixtures::kSyntheticPanelRows) synthetic += row.count;
  CHECK(natural == fixtures::kNaturalPanelOverall.count);
  CHECK(synthetic == fixtures::kSyntheticPanelOverall.count);
}

TEST_CASE("frozen panel: every printed z-value is reproduced within 0.002") {
  auto check_panel = [](const AgreementRow& overall, const std::vector<AgreementRow>& rows) {
    std::vector<double> zs = z_values(panel_values(overall, rows));
    REQUIRE(zs.size() == rows.size() + 1);
    CHECK(std::abs(zs[0] - overall.z) <= 0.002);
    for (std::size_t i = 0; i < rows.size(); ++i)
      CHECK(std::abs(zs[i + 1] - rows[i].z) <= 0.002);
  };
  check_panel(fixtures::kNaturalPanelOverall, fixtures::kNaturalPanelRows);
  check_panel(fixtures::kSyntheticPanelOverall, fixtures::kSyntheticPanelRows);

  // Spot values, asserted directly so a fixture typo cannot hide a bug.
  std::vector<double> natural =
      z_values(panel_values(fixtures::kNaturalPanelOverall, fixtures::kNaturalPanelRows));
  CHECK(std::abs(natural[0] - (-0.223)) <= 0.002);  // overall
  CHECK(std::abs(natural[1] - (-0.876)) <= 0.002);  // close_qa
  CHECK(std::abs(natural[2] - 1.799) <= 0.002);     // open_qa
  CHECK(std::abs(natural[5] - 0.980) <= 0.002);     // info_prof_writing
  std::vector<double> synthetic =
      z_values(panel_values(fixtures::kSyntheticPanelOverall, fixtures::kSyntheticPanelRows));
  CHECK(std::abs(synthetic[0] - (-0.092)) <= 0.002);  // overall
  CHECK(std::abs(synthetic[3] - (-2.120)) <= 0.002);  // math_qa
  CHECK(std::abs(synthetic[8] - 1.542) <= 0.002);     // reading_extraction
}

TEST_CASE("z-values against a hand-computed small sample") {
  // Sample of three: mean 2, sample (n-1) standard deviation 1.
  std::vector<double> zs = z_values({1.0, 2.0, 3.0});
  REQUIRE(zs.size() == 3);
  CHECK(std::abs(zs[0] - (-1.0)) <= 1e-12);
  CHECK(std::abs(zs[1]) <= 1e-12);
  CHECK(std::abs(zs[2] - 1.0) <= 1e-12);

  // Constant input: defined as all-zero rather than a division failure.
  for (double z : z_values({0.7, 0.7, 0.7})) CHECK(z == 0.0);

  CHECK_THROWS_AS(z_values({}), Error);
  CHECK_THROWS_AS(z_values({1.0}), Error);
}

TEST_CASE("frozen panel: grading quality correlates with human label level") {
  auto correlation = [](const std::vector<AgreementRow>& rows) {
    std::vector<double> agreement, labels;
    for (const AgreementRow& row : rows) {
      agreement.push_back(row.agr_single);
      labels.push_back(row.avg_label);
    }
    return pearson(agreement, labels);
  };

  const double natural = correlation(fixtures::kNaturalPanelRows);
  const double synthetic = correlation(fixtures::kSyntheticPanelRows);
  CHECK(std::abs(natural - 0.822) <= 0.02);
  CHECK(std::abs(synthetic - 0.426) <= 0.05);

  // Independent oracle: the raw-moment form of the same coefficient.
  auto oracle = [](const std::vector<AgreementRow>& rows) {
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    const double n = static_cast<double>(rows.size());
    for (const AgreementRow& row : rows) {
      sx += row.agr_single;
      sy += row.avg_label;
      sxx += row.agr_single * row.agr_single;
      syy += row.avg_label * row.avg_label;
      sxy += row.agr_single * row.avg_label;
    }
    return (n * sxy - sx * sy) /
           std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
  };
  CHECK(std::abs(natural - oracle(fixtures::kNaturalPanelRows)) <= 1e-10);
  CHECK(std::abs(synthetic - oracle(fixtures::kSyntheticPanelRows)) <= 1e-10);
}

TEST_CASE("pearson error cases") {
  CHECK_THROWS_AS(pearson({1.0, 2.0}, {1.0}), Error);
  CHECK_THROWS_AS(pearson({1.0}, {1.0}), Error);
  try {
    pearson({2.0, 2.0, 2.0}, {1.0, 2.0, 3.0});
    FAIL("constant input must raise");
  } catch (const Error& error) {
    CHECK(error.code() == ErrorCode::ZeroVariance);
  }
}

TEST_CASE("frozen panel: the guided-minus-single delta column is exact") {
  auto check_panel = [](const AgreementRow& overall, const std::vector<AgreementRow>& rows) {
    MetricReport single_report = report_from_panel(overall, rows, false);
    MetricReport guided_report = report_from_panel(overall, rows, true);

    auto deltas = reference_delta(single_report, guided_report, {2, 2.0});
    REQUIRE(deltas.size() == rows.size() + 1);
    CHECK(deltas[0].first == "All");
    CHECK(std::abs(deltas[0].second - overall.delta) <= 1e-9);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(deltas[i + 1].first == rows[i].scenario);
      CHECK(std::abs(deltas[i + 1].second - rows[i].delta) <= 1e-9);
    }

    attach_reference_delta(guided_report, single_report, {2, 2.0});
    REQUIRE(guided_report.overall.delta_reference.has_value());
    CHECK(std::abs(*guided_report.overall.delta_reference - overall.delta) <= 1e-9);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      REQUIRE(guided_report.rows[i].delta_reference.has_value());
      CHECK(std::abs(*guided_report.rows[i].delta_reference - rows[i].delta) <= 1e-9);
    }
  };
  check_panel(fixtures::kNaturalPanelOverall, fixtures::kNaturalPanelRows);
  check_panel(fixtures::kSyntheticPanelOverall, fixtures::kSyntheticPanelRows);

  // Named values the delta column is most often quoted by.
  CHECK(std::abs((fixtures::kNaturalPanelOverall.agr_guided -
                  fixtures::kNaturalPanelOverall.agr_single) - 0.059) <= 1e-9);
  CHECK(std::abs((fixtures::kNaturalPanelRows[0].agr_guided -
                  fixtures::kNaturalPanelRows[0].agr_single) - 0.092) <= 1e-9);
}

TEST_CASE("reference delta demands matching scenario sets and metric keys") {
  MetricReport single_report = report_from_panel(fixtures::kNaturalPanelOverall,
                                                 fixtures::kNaturalPanelRows, false);
  MetricReport guided_report = report_from_panel(fixtures::kNaturalPanelOverall,
                                                 fixtures::kNaturalPanelRows, true);

  SUBCASE("scenario missing on one side") {
    guided_report.rows.pop_back();
    try {
      reference_delta(single_report, guided_report, {2, 2.0});
      FAIL("mismatched scenario sets must raise");
    } catch (const Error& error) {
      CHECK(error.code() == ErrorCode::ScenarioMismatch);
    }
  }

  SUBCASE("metric key not carried by the reports") {
    try {
      reference_delta(single_report, guided_report, {1, 0.0});
      FAIL("missing metric key must raise");
    } catch (const Error& error) {
      CHECK(error.code() == ErrorCode::ScenarioMismatch);
      CHECK(std::string(error.what()).find("agr_1_0") != std::string::npos);
    }
  }
}

TEST_CASE("weighted overall error cases") {
  CHECK(std::abs(weighted_overall({{2, 0.5}, {2, 1.0}}) - 0.75) <= 1e-12);
  CHECK_THROWS_AS(weighted_overall({}), Error);
  CHECK_THROWS_AS(weighted_overall({{0, 0.4}, {0, 0.6}}), Error);
  CHECK_THROWS_AS(weighted_overall({{-1, 0.4}, {3, 0.6}}), Error);
}

TEST_CASE("random baseline: exact enumeration oracle and known literals") {
  // Oracle: enumerate (prediction, label) pairs directly over the grid.
  auto oracle = [](const RatingSystem& rating, bool is_mae, const AgrParams& params,
                   const std::vector<double>& hist) {
    double expected = 0.0;
    const int classes = rating.size();
    for (int p = rating.min; p <= rating.max; ++p)
      for (int l = rating.min; l <= rating.max; ++l) {
        double p_label =
            hist.empty() ? 1.0 / classes : hist[static_cast<std::size_t>(l - rating.min)];
        double value = is_mae ? std::abs(p - l) : agr_kernel(p, l, params);
        expected += (1.0 / classes) * p_label * value;
      }
    return expected;
  };

  // Uniform labels on the five-tier scale: the quoted reference values.
  CHECK(std::abs(random_baseline(MetricId::mae(), kFiveTier) - 1.6) <= 1e-12);
  CHECK(std::abs(random_baseline(MetricId::agreement({2, 2.0}), kFiveTier) - 0.28) <= 1e-12);
  CHECK(std::abs(random_baseline(MetricId::agreement({1, 0.0}), kFiveTier) - 0.2) <= 1e-12);

  // Full sweep against the oracle across scales and parameters.
  for (RatingKind kind : {RatingKind::five_tier, RatingKind::binary_01, RatingKind::binary_12,
                          RatingKind::three_class, RatingKind::ten_class}) {
    RatingSystem rating = RatingSystem::of(kind);
    CHECK(std::abs(random_baseline(MetricId::mae(), rating) -
                   oracle(rating, true, {2, 2.0}, {})) <= 1e-12);
    for (AgrParams params : {AgrParams{2, 2.0}, AgrParams{1, 0.0}, AgrParams{3, 0.5}})
      CHECK(std::abs(random_baseline(MetricId::agreement(params), rating) -
                     oracle(rating, false, params, {})) <= 1e-12);
  }

  // Skewed labels change the baseline; the oracle must track that too.
  std::vector<double> skewed = {0.0, 0.0, 0.0, 0.0, 1.0};  // every label is 5
  CHECK(std::abs(random_baseline(MetricId::mae(), kFiveTier, skewed) - 2.0) <= 1e-12);
  CHECK(std::abs(random_baseline(MetricId::mae(), kFiveTier, skewed) -
                 oracle(kFiveTier, true, {2, 2.0}, skewed)) <= 1e-12);

  // Monte-Carlo cross-check: 100k seeded uniform draws land within 0.01.
  detail::Rng rng(20240817);
  double mc_mae = 0.0, mc_agr = 0.0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    int predicted = 1 + static_cast<int>(rng.below(5));
    int labeled = 1 + static_cast<int>(rng.below(5));
    mc_mae += std::abs(predicted - labeled);
    mc_agr += agr_kernel(predicted, labeled, {2, 2.0});
  }
  mc_mae /= draws;
  mc_agr /= draws;
  CHECK(std::abs(mc_mae - 1.6) <= 0.01);
  CHECK(std::abs(mc_agr - 0.28) <= 0.01);
}

TEST_CASE("random baseline rejects malformed histograms") {
  auto code_of = [](const std::vector<double>& hist) {
    try {
      random_baseline(MetricId::mae(), RatingSystem::of(RatingKind::five_tier), hist);
    } catch (const Error& error) {
      return error.code();
    }
    FAIL("expected the histogram to be rejected");
    return ErrorCode::IoError;
  };
  CHECK(code_of({0.5, 0.5}) == ErrorCode::InvalidHistogram);                  // wrong size
  CHECK(code_of({0.5, 0.5, 0.5, -0.5, 0.0}) == ErrorCode::InvalidHistogram);  // negative
  CHECK(code_of({0.2, 0.2, 0.2, 0.2, 0.1}) == ErrorCode::InvalidHistogram);   // sums to 0.9
}

TEST_CASE("normalized aggregate: perfect is one, random is zero, midpoint is half") {
  std::vector<std::pair<MetricId, double>> metrics = {
      {MetricId::mae(), 0.0},
      {MetricId::agreement({2, 2.0}), 1.0},
      {MetricId::agreement({1, 0.0}), 1.0},
  };
  std::vector<double> baselines = {1.6, 0.28, 0.2};
  CHECK(aggregate_normalized(metrics, baselines) == 1.0);  // exactly, by construction

  std::vector<std::pair<MetricId, double>> at_baseline = {
      {MetricId::mae(), 1.6},
      {MetricId::agreement({2, 2.0}), 0.28},
      {MetricId::agreement({1, 0.0}), 0.2},
  };
  CHECK(std::abs(aggregate_normalized(at_baseline, baselines)) <= 1e-12);

  std::vector<std::pair<MetricId, double>> halfway = {
      {MetricId::mae(), 0.8},
      {MetricId::agreement({2, 2.0}), 0.64},
      {MetricId::agreement({1, 0.0}), 0.6},
  };
  CHECK(std::abs(aggregate_normalized(halfway, baselines) - 0.5) <= 1e-12);

  // A simulated uniform random judge measured over 100k draws normalizes to
  // approximately zero.
  detail::Rng rng(99);
  const int draws = 100000;
  double sim_mae = 0.0, sim_agr22 = 0.0, sim_agr10 = 0.0;
  for (int i = 0; i < draws; ++i) {
    int predicted = 1 + static_cast<int>(rng.below(5));
    int labeled = 1 + static_cast<int>(rng.below(5));
    sim_mae += std::abs(predicted - labeled);
    sim_agr22 += agr_kernel(predicted, labeled, {2, 2.0});
    sim_agr10 += agr_kernel(predicted, labeled, {1, 0.0});
  }
  std::vector<std::pair<MetricId, double>> simulated = {
      {MetricId::mae(), sim_mae / draws},
      {MetricId::agreement({2, 2.0}), sim_agr22 / draws},
      {MetricId::agreement({1, 0.0}), sim_agr10 / draws},
  };
  CHECK(std::abs(aggregate_normalized(simulated, baselines)) <= 0.01);
}

TEST_CASE("normalized aggregate error cases") {
  std::vector<std::pair<MetricId, double>> metrics = {{MetricId::agreement({2, 2.0}), 0.9}};
  try {
    aggregate_normalized(metrics, {1.0});  // baseline equals the best value
    FAIL("degenerate baseline must raise");
  } catch (const Error& error) {
    CHECK(error.code() == ErrorCode::DegenerateBaseline);
  }
  CHECK_THROWS_AS(aggregate_normalized(metrics, {0.28, 0.2}), Error);
  CHECK_THROWS_AS(aggregate_normalized({}, {}), Error);

  // MAE's degenerate baseline is zero (best == baseline).
  std::vector<std::pair<MetricId, double>> mae_metric = {{MetricId::mae(), 0.5}};
  try {
    aggregate_normalized(mae_metric, {0.0});
    FAIL("degenerate baseline must raise");
  } catch (const Error& error) {
    CHECK(error.code() == ErrorCode::DegenerateBaseline);
  }
}

}  // TEST_SUITE
