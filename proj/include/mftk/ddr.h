#ifndef MFTK_DDR_H_
#define MFTK_DDR_H_

#include <array>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mftk/foundation.h"
#include "mftk/scorer.h"
#include "mftk/text.h"

namespace mftk {

// Static word vectors of a fixed dimension, keyed by lowercase word.
class EmbeddingTable {
 public:
  explicit EmbeddingTable(std::size_t dimension);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return words_.size(); }

  // Lowercases `word`. A repeated word overwrites the earlier vector but keeps
  // its original position. Throws kInconsistentDimension on length mismatch.
  void Set(std::string_view word, std::span<const double> vector);

  // Empty span when the word is out of vocabulary.
  std::span<const double> Find(std::string_view word) const;

  // Words in first-insertion order.
  const std::vector<std::string>& words() const { return words_; }

 private:
  std::size_t dimension_;
  std::vector<std::string> words_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<double> data_;
};

// Plain-text format: "word f1 f2 ... fk" per line, space separated. Blank
// lines are skipped. Duplicate words: last wins.
EmbeddingTable LoadEmbeddings(std::istream& in);
// Writes in the same format with shortest round-trip decimals.
void WriteEmbeddings(const EmbeddingTable& table, std::ostream& out);

// Seed words describing one foundation (lowercased, deduplicated, non-empty).
class SeedSet {
 public:
  SeedSet(Foundation foundation, std::vector<std::string> words);

  Foundation foundation() const { return foundation_; }
  const std::vector<std::string>& words() const { return words_; }

 private:
  Foundation foundation_;
  std::vector<std::string> words_;
};

using SeedSets = std::array<SeedSet, kNumFoundations>;

// The default keyword lists, one per foundation in canonical order.
SeedSets DefaultSeedSets();

// "foundation<TAB>word1,word2,..." lines; foundations present in the file
// replace the corresponding entry of `base`.
SeedSets LoadSeedSets(std::istream& in, SeedSets base = DefaultSeedSets());

// Mean of the word vectors; out-of-vocabulary words contribute zeros but
// still count. Throws kEmptyWordList.
std::vector<double> Centroid(std::span<const std::string> words,
                             const EmbeddingTable& table);

struct DocVector {
  std::vector<double> vector;
  std::size_t token_count = 0;
};

DocVector DocumentVector(const TokenizedDoc& tdoc, const EmbeddingTable& table);

// Cosine similarity clamped to [-1, 1]. Throws kZeroVector when either
// vector has zero norm; `a_name` / `b_name` label the vectors in the message.
double CosineSimilarity(std::span<const double> a, std::span<const double> b,
                        std::string_view a_name = "first",
                        std::string_view b_name = "second");

// Cosine between the document centroid and the seed centroid.
double DdrScore(const TokenizedDoc& tdoc, const SeedSet& seeds,
                const EmbeddingTable& table);

// Scores all five foundations against precomputed seed centroids. Holds a
// reference to `table`, which must outlive the scorer.
class DdrScorer : public Scorer {
 public:
  // Throws kZeroVector if a foundation centroid is zero.
  DdrScorer(const EmbeddingTable& table, const SeedSets& seeds);

  // Throws kZeroVector (document) for documents with no in-vocabulary token.
  FoundationScores Score(const TokenizedDoc& tdoc) const override;
  // In-vocabulary tokens.
  std::size_t CountMatches(const TokenizedDoc& tdoc) const override;

  std::span<const double> centroid(Foundation f) const {
    return centroids_[Index(f)];
  }

 private:
  const EmbeddingTable& table_;
  std::array<std::vector<double>, kNumFoundations> centroids_;
};

}  // namespace mftk

#endif  // MFTK_DDR_H_
