#ifndef MFTK_CORPUS_IO_H_
#define MFTK_CORPUS_IO_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mftk/dataset.h"
#include "mftk/foundation.h"
#include "mftk/metrics.h"

namespace mftk {

// One JSONL corpus line: {"id": str, "text": str, "labels": {...}, ...}.
// Unknown keys are kept in `extra`, in input order.
struct CorpusRecord {
  std::string id;
  std::string text;
  std::optional<FoundationLabels> labels;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
};

// Streaming read preserving input order. Blank lines and lines starting with
// '#' are skipped. Label values are 0, 1, true, false or null; absent
// foundations are missing. Throws kSchemaViolation (with line number) and
// kDuplicateId.
std::vector<CorpusRecord> ReadCorpus(std::istream& in);
std::vector<CorpusRecord> ReadCorpusFile(const std::string& path);

// Canonical form: keys id, text, labels (all five, canonical order, 0/1/null),
// then extras; compact separators. `header` (without "# ") is written first
// when given.
void WriteCorpus(std::span<const CorpusRecord> records, std::ostream& out,
                 const std::optional<std::string>& header = std::nullopt);

std::string CorpusLine(const CorpusRecord& record);

LabeledExample ToLabeledExample(const CorpusRecord& record);
CorpusRecord FromLabeledExample(const LabeledExample& ex);

// {"id", "text", "schema": "twitter"|"reddit", "annotations": [[raw, ...], ...]}
// or, for highlight-annotated articles,
// {"id", "text", "highlights": [{"start", "end", "foundation"}, ...],
//  "assigned": [foundation, ...] (optional), "sentences": [[start, end], ...] (optional)}.
struct AnnotationRecord {
  AnnotatedExample example;
  std::optional<AnnotationSchema> schema;       // set for annotator-label records
  std::optional<HighlightedArticle> article;    // set for highlight records
  std::optional<std::vector<TextSpan>> sentences;
};

std::vector<AnnotationRecord> ReadAnnotations(std::istream& in);

// Labeled examples from annotation records: aggregated annotator sets, or one
// example per sentence of a highlighted article (naive segmentation when no
// spans are given). `default_schema` applies to records without one.
std::vector<LabeledExample> LabelAnnotations(std::span<const AnnotationRecord> records,
                                             std::optional<AnnotationSchema> default_schema);

struct ScoreRecord {
  std::string doc_id;
  Foundation foundation = Foundation::kCare;
  std::optional<double> score;  // absent iff error is set
  std::string source;
  std::optional<std::string> error;
};

// CSV with header "id,foundation,score,source" plus an optional ",error"
// column; RFC 4180 quoting, '#' comment lines before the header. Throws
// kUnknownFoundation, kMalformedRow (bad field count, unparsable or
// non-finite score, score and error both empty) and kDuplicateRecord for a
// repeated (id, foundation, source), each with its line number.
std::vector<ScoreRecord> ReadScores(std::istream& in);
std::vector<ScoreRecord> ReadScoresFile(const std::string& path);

// Always writes the error column. Scores use 17 significant digits.
void WriteScores(std::span<const ScoreRecord> records, std::ostream& out,
                 const std::optional<std::string>& header = std::nullopt);

struct JoinResult {
  ScoredSet set;
  std::vector<std::string> doc_ids;  // parallel to set, ascending
  std::size_t dropped_missing_label = 0;
  std::size_t dropped_error = 0;  // labeled docs whose score row is an error
  std::string source;
};

// Inner join of one foundation's scores with corpus labels, sorted by doc id.
// With no `source`, the scores for that foundation must come from one source
// (kAmbiguousSource otherwise). Throws kMissingScore naming the first
// labeled document without a score row.
JoinResult JoinScoresLabels(std::span<const ScoreRecord> scores,
                            std::span<const CorpusRecord> corpus, Foundation foundation,
                            const std::optional<std::string>& source = std::nullopt);

// "mftk <version> seed=<seed|none> config=<hash>"
std::string OutputHeader(std::optional<std::uint64_t> seed, std::string_view config_hash);

std::string QuoteCsvField(std::string_view field);

}  // namespace mftk

#endif  // MFTK_CORPUS_IO_H_
