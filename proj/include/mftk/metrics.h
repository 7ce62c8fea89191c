#ifndef MFTK_METRICS_H_
#define MFTK_METRICS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace mftk {

// Parallel scores and binary (0/1) labels.
struct ScoredSet {
  std::vector<double> scores;
  std::vector<int> labels;

  std::size_t size() const { return scores.size(); }
};

// Area under the ROC curve via the rank-sum identity
//   AUC = (R+ - n+(n+ + 1)/2) / (n+ n-)
// with average ranks for tied scores, i.e. tied positive/negative pairs count
// one half. Throws kSingleClass unless both labels occur.
double Auc(std::span<const double> scores, std::span<const int> labels);
inline double Auc(const ScoredSet& s) { return Auc(s.scores, s.labels); }

inline constexpr std::size_t kCalibrationBins = 20;

struct CalibrationBin {
  double lower = 0.0;
  double upper = 0.0;
  std::size_t count = 0;
  // Undefined (empty) when count == 0.
  std::optional<double> mean_score;
  std::optional<double> positive_fraction;
};

struct CalibrationReport {
  std::array<CalibrationBin, kCalibrationBins> bins;

  // Largest |positive_fraction - mean_score| over nonempty bins.
  double MaxGap() const;
};

// Bin b covers [b/20, (b+1)/20); the last bin also takes 1.0. Throws
// kScoreOutOfRange for scores outside [0, 1].
CalibrationReport CalibrationCurve(const ScoredSet& s);

// Nearest-rank percentile: the ceil(x/100 * n)-th smallest score. Items are
// predicted positive iff their score is strictly greater than it.
double ThresholdAtPercentile(std::span<const double> scores, double percentile);

std::vector<int> BinarizeAtPercentile(std::span<const double> scores,
                                      double percentile);

inline constexpr std::array<int, 6> kReportPercentiles = {95, 90, 80, 70, 60, 50};

struct ThresholdRow {
  int percentile = 0;
  double threshold = 0.0;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double accuracy = 0.0;
  // Nothing predicted positive; precision reported as 0.
  bool no_positive_predictions = false;
};

struct ThresholdTable {
  std::vector<ThresholdRow> rows;
};

ThresholdRow ThresholdMetrics(const ScoredSet& s, int percentile);
ThresholdTable ThresholdMetricsTable(const ScoredSet& s);

}  // namespace mftk

#endif  // MFTK_METRICS_H_
