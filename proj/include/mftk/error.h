#ifndef MFTK_ERROR_H_
#define MFTK_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mftk {

// Every failure raised by the library carries one of these codes so that
// callers (and the CLI's exit-code mapping) can branch without parsing text.
enum class ErrorCode {
  // Input files and records.
  kIoError,
  kFileNotFound,
  kMalformedLine,
  kMalformedRow,
  kSchemaViolation,
  kDuplicateId,
  kDuplicateRecord,
  kUnknownFoundation,
  kUnknownFoundationLabel,
  kWeightOutOfRange,
  kInconsistentDimension,
  // Scoring.
  kEmptyWordList,
  kZeroVector,
  // Classifiers.
  kEmptyCorpus,
  kDegenerateLabels,
  kNonFiniteFeature,
  kInsufficientClassCounts,
  kDimensionMismatch,
  // Datasets.
  kUnknownRawLabel,
  kSpanOutOfBounds,
  kOverlappingSpans,
  kBadFractions,
  // Evaluation.
  kSingleClass,
  kScoreOutOfRange,
  kEmptyScores,
  kInvalidPercentile,
  kNonFiniteScore,
  // Statistics.
  kEmptyGroup,
  kZeroCell,
  kZeroMargin,
  kEmptySample,
  kDegenerateVariance,
  // Joins.
  kMissingScore,
  kAmbiguousSource,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  // 1-based line (or row) number for parse errors.
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace mftk

#endif  // MFTK_ERROR_H_
