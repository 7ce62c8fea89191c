#ifndef MFTK_LEXICON_H_
#define MFTK_LEXICON_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "mftk/foundation.h"
#include "mftk/scorer.h"
#include "mftk/text.h"

namespace mftk {

using Vocabulary = std::set<std::string>;

// Result of parsing a category label such as "authority.virtue",
// "HarmVice" or "MoralityGeneral".
struct FoundationLabel {
  std::optional<Foundation> foundation;  // empty when the label is dropped
  bool dropped = false;                  // the "morality general" category
};

// Virtue/vice poles are merged into their foundation. Accepts canonical
// foundation names plus the legacy pole names (harm, cheating, ingroup,
// betrayal, subversion, purity, degradation). Returns nullopt for unknown
// labels.
std::optional<FoundationLabel> ParseFoundationLabel(std::string_view label);

// Dictionary of word prefixes ("venerat*") and, for entries written without
// a trailing '*', exact words. Backed by a byte trie.
class PrefixLexicon : public Scorer {
 public:
  struct Entry {
    std::string text;  // without the trailing '*'
    bool is_prefix = true;
    FoundationSet foundations;
  };

  PrefixLexicon();

  // `pattern` is lowercased; a trailing '*' marks a prefix entry.
  void Add(std::string_view pattern, FoundationSet foundations);

  // Union of the foundation sets of every entry matching `word`.
  FoundationSet Match(std::string_view word) const;

  std::size_t size() const { return entry_count_; }
  std::vector<Entry> Entries() const;
  // Entry strings compared literally (prefixes without '*').
  Vocabulary Vocab() const;

  FoundationScores Score(const TokenizedDoc& tdoc) const override;
  std::size_t CountMatches(const TokenizedDoc& tdoc) const override;

 private:
  struct Node {
    std::vector<std::pair<unsigned char, std::uint32_t>> children;  // sorted
    FoundationSet prefix_foundations;
    FoundationSet word_foundations;
  };

  std::optional<std::uint32_t> Child(std::uint32_t node, unsigned char c) const;
  void CollectEntries(std::uint32_t node, std::string& path,
                      std::vector<Entry>& out) const;

  std::vector<Node> nodes_;
  std::size_t entry_count_ = 0;
};

// Exact-word dictionary.
class WordLexicon : public Scorer {
 public:
  void Add(std::string_view word, FoundationSet foundations);
  FoundationSet Match(std::string_view word) const;

  std::size_t size() const { return entries_.size(); }
  const std::unordered_map<std::string, FoundationSet>& entries() const {
    return entries_;
  }
  Vocabulary Vocab() const;

  FoundationScores Score(const TokenizedDoc& tdoc) const override;
  std::size_t CountMatches(const TokenizedDoc& tdoc) const override;

 private:
  std::unordered_map<std::string, FoundationSet> entries_;
};

using FoundationWeights = std::array<double, kNumFoundations>;

// Word -> five weights in [0,1].
class WeightedLexicon : public Scorer {
 public:
  // Throws kWeightOutOfRange for weights outside [0,1] or NaN.
  void Add(std::string_view word, const FoundationWeights& weights);
  const FoundationWeights* Find(std::string_view word) const;

  std::size_t size() const { return entries_.size(); }
  Vocabulary Vocab() const;

  // Sum of matched weight vectors divided by the number of matched tokens.
  FoundationScores Score(const TokenizedDoc& tdoc) const override;
  std::size_t CountMatches(const TokenizedDoc& tdoc) const override;

 private:
  const FoundationWeights* MatchToken(const TokenizedDoc& tdoc,
                                      std::size_t i) const;

  std::unordered_map<std::string, FoundationWeights> entries_;
};

enum class LexiconKind { kPrefix, kWord, kWeighted };

std::string_view LexiconKindName(LexiconKind kind);
std::optional<LexiconKind> ParseLexiconKind(std::string_view name);

using AnyLexicon = std::variant<PrefixLexicon, WordLexicon, WeightedLexicon>;

// File formats (UTF-8, LF, tab-separated; blank lines and lines starting
// with '#' are skipped):
//   prefix:   prefix*<TAB>foundation.virtue|vice   (entries without '*' are exact words)
//   word:     word<TAB>foundation.virtue|vice      (a word may repeat)
//   weighted: header "word<TAB>authority<TAB>care<TAB>fairness<TAB>loyalty<TAB>sanctity"
//             then word<TAB>w1<TAB>...<TAB>w5
PrefixLexicon LoadPrefixLexicon(std::istream& in);
WordLexicon LoadWordLexicon(std::istream& in);
WeightedLexicon LoadWeightedLexicon(std::istream& in);
AnyLexicon LoadLexicon(LexiconKind kind, std::istream& in);

// Guesses the format from content: the weighted header, else any '*' entry
// means prefix, else word.
LexiconKind DetectLexiconKind(std::string_view content);

const Scorer& AsScorer(const AnyLexicon& lexicon);
Vocabulary VocabularyOf(const AnyLexicon& lexicon);

FoundationScores ScorePrefixCount(const TokenizedDoc& tdoc,
                                  const PrefixLexicon& lex);
FoundationScores ScoreWordCount(const TokenizedDoc& tdoc, const WordLexicon& lex);
FoundationScores ScoreWeighted(const TokenizedDoc& tdoc,
                               const WeightedLexicon& lex);

// Venn-diagram quantities for three vocabularies.
struct OverlapReport {
  std::array<std::size_t, 3> sizes{};
  std::size_t ab = 0;
  std::size_t ac = 0;
  std::size_t bc = 0;
  std::size_t abc = 0;
  // |A∩B| / |A| and |A∩B| / |B|.
  double ab_fraction_of_a = 0.0;
  double ab_fraction_of_b = 0.0;
  // Fraction of each vocabulary found in neither of the other two.
  std::array<double, 3> unique_fraction{};
};

OverlapReport LexiconStats(const Vocabulary& a, const Vocabulary& b,
                           const Vocabulary& c);

}  // namespace mftk

#endif  // MFTK_LEXICON_H_
