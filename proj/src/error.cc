#include "mftk/error.h"

namespace mftk {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kFileNotFound: return "FileNotFound";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kMalformedRow: return "MalformedRow";
    case ErrorCode::kSchemaViolation: return "SchemaViolation";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kDuplicateRecord: return "DuplicateRecord";
    case ErrorCode::kUnknownFoundation: return "UnknownFoundation";
    case ErrorCode::kUnknownFoundationLabel: return "UnknownFoundationLabel";
    case ErrorCode::kWeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::kInconsistentDimension: return "InconsistentDimension";
    case ErrorCode::kEmptyWordList: return "EmptyWordList";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kDegenerateLabels: return "DegenerateLabels";
    case ErrorCode::kNonFiniteFeature: return "NonFiniteFeature";
    case ErrorCode::kInsufficientClassCounts: return "InsufficientClassCounts";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kUnknownRawLabel: return "UnknownRawLabel";
    case ErrorCode::kSpanOutOfBounds: return "SpanOutOfBounds";
    case ErrorCode::kOverlappingSpans: return "OverlappingSpans";
    case ErrorCode::kBadFractions: return "BadFractions";
    case ErrorCode::kSingleClass: return "SingleClass";
    case ErrorCode::kScoreOutOfRange: return "ScoreOutOfRange";
    case ErrorCode::kEmptyScores: return "EmptyScores";
    case ErrorCode::kInvalidPercentile: return "InvalidPercentile";
    case ErrorCode::kNonFiniteScore: return "NonFiniteScore";
    case ErrorCode::kEmptyGroup: return "EmptyGroup";
    case ErrorCode::kZeroCell: return "ZeroCell";
    case ErrorCode::kZeroMargin: return "ZeroMargin";
    case ErrorCode::kEmptySample: return "EmptySample";
    case ErrorCode::kDegenerateVariance: return "DegenerateVariance";
    case ErrorCode::kMissingScore: return "MissingScore";
    case ErrorCode::kAmbiguousSource: return "AmbiguousSource";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string Decorate(ErrorCode code, const std::string& message,
                     std::optional<std::size_t> line) {
  std::string out(ErrorCodeName(code));
  if (line) out += " (line " + std::to_string(*line) + ")";
  if (!message.empty()) out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> line)
    : std::runtime_error(Decorate(code, message, line)),
      code_(code),
      line_(line) {}

}  // namespace mftk
