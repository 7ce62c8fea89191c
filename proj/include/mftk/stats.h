#ifndef MFTK_STATS_H_
#define MFTK_STATS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mftk/foundation.h"
#include "mftk/scorer.h"
#include "mftk/text.h"

namespace mftk {

struct PrevalenceReport {
  std::string group;
  std::size_t documents = 0;
  // Per foundation: labeled-1 count over documents whose label is present.
  // Empty when every document is missing that foundation.
  std::array<std::optional<double>, kNumFoundations> fraction{};
  std::array<std::size_t, kNumFoundations> positives{};
  std::array<std::size_t, kNumFoundations> labeled{};
};

// Throws kEmptyGroup for an empty list.
PrevalenceReport Prevalence(std::span<const FoundationLabels> labels,
                            std::string group = "all");

// Rows: foundation present / absent. Columns: outcome positive / negative.
struct Contingency2x2 {
  double n11 = 0;  // present, positive
  double n10 = 0;  // present, negative
  double n01 = 0;  // absent, positive
  double n00 = 0;  // absent, negative

  double Total() const { return n11 + n10 + n01 + n00; }
};

// Counts from parallel indicator vectors. Throws kDimensionMismatch.
Contingency2x2 CrossTabulate(std::span<const int> present, std::span<const int> outcome);

struct OddsRatioResult {
  Contingency2x2 cells;  // after any Haldane adjustment
  double odds_ratio = 0.0;
  double log_or = 0.0;
  double se_log_or = 0.0;
  double ci_low = 0.0;  // 95%, exp(log_or - 1.96 se)
  double ci_high = 0.0;
  bool significant = false;  // 1 lies outside [ci_low, ci_high]
  bool haldane = false;
};

// Throws kZeroCell when any cell is zero and `haldane` is false; with
// `haldane` every cell gets +0.5 (only when some cell is zero) and the result
// is flagged.
OddsRatioResult OddsRatio(const Contingency2x2& t, bool haldane = false);

struct ChiSquareResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

// Yates-corrected Pearson chi-square, one degree of freedom. Throws
// kZeroMargin when a row or column total is zero.
ChiSquareResult ChiSquareYates(const Contingency2x2& t);

struct MannWhitneyResult {
  double u = 0.0;  // for the first sample
  double z = 0.0;
  double p_two_sided = 1.0;
  bool degenerate = false;  // every value tied; z = 0, p = 1
};

// Two-sided asymptotic test with tie-corrected variance and a continuity
// correction of 0.5 toward the null mean (never past it). Throws kEmptySample.
MannWhitneyResult MannWhitneyU(std::span<const double> x, std::span<const double> y);

// Product-moment correlation. Throws kDegenerateVariance when either input
// is constant, kDimensionMismatch on unequal lengths, kInvalidArgument for
// fewer than two points.
double PearsonCorrelation(std::span<const double> x, std::span<const double> y);

struct LengthBiasReport {
  double r_raw = 0.0;         // length vs matched-token count
  double r_normalized = 0.0;  // length vs matched-token count / length
  std::size_t documents = 0;  // empty documents are excluded
};

// Throws kDegenerateVariance (constant lengths or constant counts) and
// kInvalidArgument for fewer than three nonempty documents.
LengthBiasReport LengthBias(std::span<const TokenizedDoc> corpus, const Scorer& scorer);

struct GroupMean {
  double mean = 0.0;
  double ci_low = 0.0;  // mean -+ 1.96 sd / sqrt(n), sd with n - 1
  double ci_high = 0.0;
};

struct KeywordGroup {
  std::string name;
  std::size_t documents = 0;
  std::array<GroupMean, kNumFoundations> by_foundation{};
};

struct KeywordGroupReport {
  std::array<KeywordGroup, 3> groups;  // contains-a, contains-b, neither
  std::size_t skipped = 0;             // documents the scorer rejected
};

// Membership tests the keyword against tokens and lemmas, lowercased; a
// document containing both keywords belongs to both keyword groups. Documents
// whose scoring throws kZeroVector are skipped and counted. Throws
// kEmptyGroup naming the first empty group.
KeywordGroupReport KeywordGroupMeans(std::span<const TokenizedDoc> corpus,
                                     const Scorer& scorer, std::string_view keyword_a,
                                     std::string_view keyword_b);

}  // namespace mftk

#endif  // MFTK_STATS_H_
