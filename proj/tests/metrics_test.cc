#include <doctest.h>

#include <cmath>
#include <numeric>

#include "mftk/metrics.h"
#include "oracles.h"
#include "test_util.h"

namespace mftk {
namespace {

TEST_CASE("auc examples") {
  CHECK(Auc(ScoredSet{{0.9, 0.8, 0.2}, {1, 1, 0}}) == 1.0);
  CHECK(Auc(ScoredSet{{0.9, 0.8, 0.2}, {1, 0, 1}}) == 0.5);
  CHECK(Auc(ScoredSet{{0.3, 0.3, 0.3, 0.3}, {1, 0, 1, 0}}) == 0.5);
  CHECK(testing::CodeOf([] { Auc(ScoredSet{{0.1, 0.2}, {1, 1}}); }) == ErrorCode::kSingleClass);
}

TEST_CASE("property: rank AUC equals pair counting, with ties") {
  Rng rng(51);
  for (int iter = 0; iter < 2000; ++iter) {
    ScoredSet s;
    const std::size_t n = 2 + rng.UniformIndex(49);
    for (std::size_t i = 0; i < n; ++i) {
      s.scores.push_back(static_cast<double>(rng.UniformIndex(6)) / 5.0);
      s.labels.push_back(static_cast<int>(rng.UniformIndex(2)));
    }
    s.labels[0] = 1;
    s.labels[1] = 0;
    CHECK(Auc(s) == doctest::Approx(oracle::PairCountAuc(s.scores, s.labels)).epsilon(1e-12));
  }
}

TEST_CASE("property: AUC is invariant under strictly increasing maps") {
  Rng rng(52);
  for (int iter = 0; iter < 200; ++iter) {
    ScoredSet s, mapped;
    for (int i = 0; i < 30; ++i) {
      const double v = rng.Uniform01();
      s.scores.push_back(v);
      mapped.scores.push_back(std::exp(3.0 * v) - 7.0);
      s.labels.push_back(i % 3 == 0);
    }
    mapped.labels = s.labels;
    CHECK(Auc(s) == Auc(mapped));
  }
}

TEST_CASE("calibration examples") {
  ScoredSet s{std::vector<double>(10, 0.70), {1, 1, 1, 1, 1, 1, 1, 0, 0, 0}};
  const auto r = CalibrationCurve(s);
  std::size_t nonempty = 0;
  for (const auto& b : r.bins) {
    if (b.count == 0) {
      CHECK_FALSE(b.mean_score.has_value());
      continue;
    }
    ++nonempty;
    CHECK(b.count == 10);
    CHECK(*b.mean_score == doctest::Approx(0.70).epsilon(1e-15));
    CHECK(*b.positive_fraction == doctest::Approx(0.70).epsilon(1e-15));
    CHECK(b.lower == doctest::Approx(0.70));
  }
  CHECK(nonempty == 1);
  CHECK(CalibrationCurve(ScoredSet{{1.0, 0.0}, {1, 0}}).bins.back().count == 1);
  CHECK(testing::CodeOf([] { CalibrationCurve(ScoredSet{{1.5}, {1}}); }) ==
        ErrorCode::kScoreOutOfRange);
}

TEST_CASE("calibration bins partition [0,1] into twenty equal widths") {
  const auto r = CalibrationCurve(ScoredSet{{0.5}, {1}});
  for (std::size_t b = 0; b < kCalibrationBins; ++b) {
    CHECK(r.bins[b].lower == doctest::Approx(b / 20.0).epsilon(1e-15));
    CHECK(r.bins[b].upper == doctest::Approx((b + 1) / 20.0).epsilon(1e-15));
  }
}

TEST_CASE("percentile thresholds") {
  std::vector<double> s(100);
  std::iota(s.begin(), s.end(), 1.0);
  CHECK(ThresholdAtPercentile(s, 80) == 80.0);
  const auto bin = BinarizeAtPercentile(s, 80);
  CHECK(std::accumulate(bin.begin(), bin.end(), 0) == 20);
  const std::vector<double> one{4.2};
  CHECK(ThresholdAtPercentile(one, 80) == 4.2);
  CHECK(BinarizeAtPercentile(one, 80) == std::vector<int>{0});
  const std::vector<double> flat(7, 3.0);
  const auto none = BinarizeAtPercentile(flat, 50);
  CHECK(std::accumulate(none.begin(), none.end(), 0) == 0);
  CHECK(testing::CodeOf([&] { ThresholdAtPercentile(s, 0.0); }) == ErrorCode::kInvalidPercentile);
  CHECK(testing::CodeOf([] { ThresholdAtPercentile(std::vector<double>{}, 50); }) ==
        ErrorCode::kEmptyScores);
}

TEST_CASE("threshold metrics table examples") {
  ScoredSet s;
  for (int i = 1; i <= 100; ++i) {
    s.scores.push_back(i);
    s.labels.push_back(i > 70 ? 1 : 0);
  }
  const auto r80 = ThresholdMetrics(s, 80);
  CHECK(r80.precision == 1.0);
  CHECK(r80.recall == doctest::Approx(20.0 / 30.0).epsilon(1e-15));
  const auto r50 = ThresholdMetrics(s, 50);
  CHECK(r50.recall == 1.0);
  CHECK(r50.precision == doctest::Approx(0.6).epsilon(1e-15));

  ScoredSet self = s;
  for (int i = 0; i < 100; ++i) self.labels[i] = s.scores[i] > 80 ? 1 : 0;
  const auto r = ThresholdMetrics(self, 80);
  CHECK(r.precision == 1.0);
  CHECK(r.recall == 1.0);

  const auto table = ThresholdMetricsTable(s);
  REQUIRE(table.rows.size() == kReportPercentiles.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    CHECK(row.percentile == kReportPercentiles[i]);
    CHECK(row.tp + row.fp + row.fn + row.tn == 100);
    for (double v : {row.precision, row.recall, row.f1, row.accuracy}) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("no positive predictions reports zero precision with a flag") {
  const auto r = ThresholdMetrics(ScoredSet{{1, 1, 1, 1}, {1, 0, 1, 0}}, 50);
  CHECK(r.no_positive_predictions);
  CHECK(r.precision == 0.0);
  CHECK(r.recall == 0.0);
}

TEST_CASE("property: a calibrated scorer has small calibration gaps") {
  Rng rng(53);
  ScoredSet s;
  for (int i = 0; i < 50000; ++i) {
    const double p = rng.Uniform01();
    s.scores.push_back(p);
    s.labels.push_back(rng.Uniform01() < p ? 1 : 0);
  }
  CHECK(CalibrationCurve(s).MaxGap() < 0.05);
}

}  // namespace
}  // namespace mftk
