#ifndef MFTK_DATASET_H_
#define MFTK_DATASET_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mftk/foundation.h"

namespace mftk {

enum class AnnotationSchema { kTwitter, kReddit };

std::string_view AnnotationSchemaName(AnnotationSchema schema);
std::optional<AnnotationSchema> ParseAnnotationSchema(std::string_view name);

struct AnnotatedExample {
  std::string id;
  std::string text;
  // One set of raw label strings per annotator.
  std::vector<std::vector<std::string>> annotations;
};

struct LabeledExample {
  std::string id;
  std::string text;
  FoundationLabels labels;
};

// Maps one raw annotator label to a foundation, or to nothing for labels
// that carry no foundation ("non-moral", and "thin morality" under reddit).
// Matching ignores case, and '_' or '-' count as spaces.
// Throws kUnknownRawLabel for labels outside the schema's vocabulary.
std::optional<Foundation> MapRawLabel(std::string_view raw, AnnotationSchema schema);

// A foundation is 1 iff at least one annotator's set maps to it; every label
// is present (never missing). Throws kUnknownRawLabel, and kInvalidArgument
// when there are no annotation sets.
LabeledExample AggregateAnnotations(const AnnotatedExample& ex, AnnotationSchema schema);

// Offsets are code-point indices into the UTF-8 text, half-open.
struct TextSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

struct Highlight {
  TextSpan span;
  Foundation foundation = Foundation::kCare;
};

struct HighlightedArticle {
  std::string id;
  std::string text;
  std::vector<Highlight> highlights;
  // Foundations the article was annotated for; when set, the others are
  // missing in every sentence. When empty, unhighlighted foundations are 0.
  std::optional<FoundationSet> assigned;
};

// One example per sentence, id "<article id>:<sentence index>". A sentence
// gets f = 1 iff it shares at least one code point with a highlight for f.
// Throws kSpanOutOfBounds (empty, reversed or past-the-end spans) and
// kOverlappingSpans (sentences overlapping or out of order).
std::vector<LabeledExample> LabelSentences(const HighlightedArticle& article,
                                           std::span<const TextSpan> sentences);

// Naive segmentation: a sentence ends after '.', '?' or '!' followed by
// whitespace or end of text. Abbreviations, decimals and quotes are not
// handled. Spans exclude surrounding whitespace.
std::vector<TextSpan> SplitSentences(std::string_view text);

struct SplitResult {
  std::vector<std::size_t> train;  // indices into the input, ascending
  std::vector<std::size_t> test;
  std::size_t excluded_missing = 0;
};

// Binary split stratified on one foundation; examples whose label for it is
// missing are excluded. Test size is floor(f n + 1/2) and the test positives
// round-half-up(test_size * positives / n), each class shuffled with `seed`.
// Throws kDegenerateLabels, kBadFractions (f outside (0, 1)).
SplitResult StratifiedSplit(std::span<const LabeledExample> corpus, Foundation foundation,
                            double test_fraction, std::uint64_t seed);

// Multi-label iterative stratification into len(fractions) subsets. Returns
// one ascending index list per subset. Throws kBadFractions (non-positive or
// sum off 1 by more than 1e-9) and kInvalidArgument for missing labels.
std::vector<std::vector<std::size_t>> IterativeStratifiedSplit(
    std::span<const LabeledExample> corpus, std::span<const double> fractions,
    std::uint64_t seed);

}  // namespace mftk

#endif  // MFTK_DATASET_H_
