#include "mftk/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "mftk/error.h"

namespace mftk {
namespace {

void CheckScored(std::span<const double> scores, std::span<const int> labels) {
  if (scores.size() != labels.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "scores and labels differ in length");
  }
  if (scores.empty()) throw Error(ErrorCode::kEmptyScores, "no scores");
  for (double s : scores) {
    if (!std::isfinite(s)) throw Error(ErrorCode::kNonFiniteScore, "score is not finite");
  }
  for (int y : labels) {
    if (y != 0 && y != 1) throw Error(ErrorCode::kInvalidArgument, "labels must be 0/1");
  }
}

}  // namespace

double Auc(std::span<const double> scores, std::span<const int> labels) {
  CheckScored(scores, labels);
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  // Twice the positive rank sum, so average ranks stay integral.
  std::int64_t twice_rank_sum = 0;
  std::int64_t n_pos = 0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && scores[order[j + 1]] == scores[order[i]]) ++j;
    // Ranks i+1 .. j+1 share the average (i + j + 2) / 2.
    const std::int64_t twice_avg = static_cast<std::int64_t>(i + j + 2);
    for (std::size_t k = i; k <= j; ++k) {
      if (labels[order[k]] == 1) {
        twice_rank_sum += twice_avg;
        ++n_pos;
      }
    }
    i = j + 1;
  }
  const std::int64_t n_neg = static_cast<std::int64_t>(n) - n_pos;
  if (n_pos == 0 || n_neg == 0) {
    throw Error(ErrorCode::kSingleClass, "AUC needs both positive and negative labels");
  }
  const std::int64_t numerator = twice_rank_sum - n_pos * (n_pos + 1);
  return static_cast<double>(numerator) / static_cast<double>(2 * n_pos * n_neg);
}

double CalibrationReport::MaxGap() const {
  double gap = 0.0;
  for (const auto& b : bins) {
    if (b.count == 0) continue;
    gap = std::max(gap, std::abs(*b.positive_fraction - *b.mean_score));
  }
  return gap;
}

CalibrationReport CalibrationCurve(const ScoredSet& s) {
  CheckScored(s.scores, s.labels);
  std::array<double, kCalibrationBins> score_sum{};
  std::array<std::size_t, kCalibrationBins> positives{};
  CalibrationReport report;
  for (std::size_t b = 0; b < kCalibrationBins; ++b) {
    report.bins[b].lower = static_cast<double>(b) / kCalibrationBins;
    report.bins[b].upper = static_cast<double>(b + 1) / kCalibrationBins;
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double x = s.scores[i];
    if (x < 0.0 || x > 1.0) {
      throw Error(ErrorCode::kScoreOutOfRange,
                  "calibration needs scores in [0,1], got " + std::to_string(x));
    }
    const auto b = std::min(static_cast<std::size_t>(x * kCalibrationBins),
                            kCalibrationBins - 1);
    ++report.bins[b].count;
    score_sum[b] += x;
    positives[b] += static_cast<std::size_t>(s.labels[i]);
  }
  for (std::size_t b = 0; b < kCalibrationBins; ++b) {
    auto& bin = report.bins[b];
    if (bin.count == 0) continue;
    const double n = static_cast<double>(bin.count);
    bin.mean_score = score_sum[b] / n;
    bin.positive_fraction = static_cast<double>(positives[b]) / n;
  }
  return report;
}

double ThresholdAtPercentile(std::span<const double> scores, double percentile) {
  if (scores.empty()) throw Error(ErrorCode::kEmptyScores, "no scores to threshold");
  if (!(percentile > 0.0 && percentile < 100.0)) {
    throw Error(ErrorCode::kInvalidPercentile, "percentile must be in (0, 100)");
  }
  const std::size_t n = scores.size();
  // Multiply before dividing so integral percentiles stay exact.
  auto rank = static_cast<std::size_t>(
      std::ceil(percentile * static_cast<double>(n) / 100.0));
  rank = std::clamp<std::size_t>(rank, 1, n);
  std::vector<double> sorted(scores.begin(), scores.end());
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(rank - 1),
                   sorted.end());
  return sorted[rank - 1];
}

std::vector<int> BinarizeAtPercentile(std::span<const double> scores,
                                      double percentile) {
  const double threshold = ThresholdAtPercentile(scores, percentile);
  std::vector<int> out;
  out.reserve(scores.size());
  for (double s : scores) out.push_back(s > threshold ? 1 : 0);
  return out;
}

ThresholdRow ThresholdMetrics(const ScoredSet& s, int percentile) {
  CheckScored(s.scores, s.labels);
  ThresholdRow row;
  row.percentile = percentile;
  row.threshold = ThresholdAtPercentile(s.scores, percentile);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const bool predicted = s.scores[i] > row.threshold;
    const bool actual = s.labels[i] == 1;
    if (predicted && actual) ++row.tp;
    if (predicted && !actual) ++row.fp;
    if (!predicted && actual) ++row.fn;
    if (!predicted && !actual) ++row.tn;
  }
  if (row.tp + row.fn == 0 || row.fp + row.tn == 0) {
    throw Error(ErrorCode::kSingleClass, "threshold metrics need both classes");
  }
  const auto ratio = [](std::size_t a, std::size_t b) {
    return static_cast<double>(a) / static_cast<double>(b);
  };
  row.no_positive_predictions = row.tp + row.fp == 0;
  row.precision = row.no_positive_predictions ? 0.0 : ratio(row.tp, row.tp + row.fp);
  row.recall = ratio(row.tp, row.tp + row.fn);
  row.f1 = (row.precision + row.recall) > 0.0
               ? 2.0 * row.precision * row.recall / (row.precision + row.recall)
               : 0.0;
  row.accuracy = ratio(row.tp + row.tn, s.size());
  return row;
}

ThresholdTable ThresholdMetricsTable(const ScoredSet& s) {
  ThresholdTable table;
  for (int p : kReportPercentiles) table.rows.push_back(ThresholdMetrics(s, p));
  return table;
}

}  // namespace mftk
