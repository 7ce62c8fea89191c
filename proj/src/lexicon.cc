#include "mftk/lexicon.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mftk/error.h"
#include "parse_util.h"

namespace mftk {
namespace {

using internal::LineReader;
using internal::Split;

std::optional<Foundation> FoundationFromPole(std::string_view head) {
  struct Alias {
    std::string_view name;
    Foundation foundation;
  };
  static constexpr Alias kAliases[] = {
      {"authority", Foundation::kAuthority}, {"subversion", Foundation::kAuthority},
      {"care", Foundation::kCare},           {"harm", Foundation::kCare},
      {"fairness", Foundation::kFairness},   {"cheating", Foundation::kFairness},
      {"loyalty", Foundation::kLoyalty},     {"ingroup", Foundation::kLoyalty},
      {"betrayal", Foundation::kLoyalty},    {"sanctity", Foundation::kSanctity},
      {"purity", Foundation::kSanctity},     {"degradation", Foundation::kSanctity},
  };
  for (const auto& a : kAliases) {
    if (a.name == head) return a.foundation;
  }
  return std::nullopt;
}

bool IsDroppedCategory(std::string_view head) {
  return head == "general" || head == "moralitygeneral" ||
         head == "morality_general" || head == "morality general" ||
         head == "morality";
}

// Entry text: lowercase, non-empty, no whitespace or tabs.
std::optional<std::string> NormalizeEntry(std::string_view raw) {
  if (raw.empty()) return std::nullopt;
  for (char c : raw) {
    if (c == ' ' || c == '\t') return std::nullopt;
  }
  return internal::AsciiLower(raw);
}

FoundationSet ParseLabelsOrThrow(const std::vector<std::string_view>& fields,
                                 std::size_t first, std::size_t line_no,
                                 bool& all_dropped) {
  FoundationSet out;
  all_dropped = true;
  for (std::size_t i = first; i < fields.size(); ++i) {
    const auto label = internal::Trim(fields[i]);
    if (label.empty()) continue;
    const auto parsed = ParseFoundationLabel(label);
    if (!parsed) {
      throw Error(ErrorCode::kUnknownFoundationLabel, std::string(label), line_no);
    }
    if (parsed->dropped) continue;
    all_dropped = false;
    out.Insert(*parsed->foundation);
  }
  return out;
}

template <typename AddFn>
void LoadCategoricalLines(std::istream& in, AddFn add) {
  LineReader reader(in);
  std::string line;
  while (reader.NextContent(line)) {
    const auto fields = Split(line, '\t');
    if (fields.size() < 2) {
      throw Error(ErrorCode::kMalformedLine, "expected entry<TAB>label",
                  reader.line_no());
    }
    const auto entry = NormalizeEntry(internal::Trim(fields[0]));
    if (!entry) {
      throw Error(ErrorCode::kMalformedLine, "empty or invalid entry",
                  reader.line_no());
    }
    bool all_dropped = false;
    const FoundationSet set =
        ParseLabelsOrThrow(fields, 1, reader.line_no(), all_dropped);
    if (set.Empty()) {
      if (all_dropped) continue;
      throw Error(ErrorCode::kMalformedLine, "missing label", reader.line_no());
    }
    add(*entry, set, reader.line_no());
  }
}

void Increment(FoundationSet set, std::array<double, kNumFoundations>& counts) {
  for (Foundation f : kAllFoundations) {
    if (set.Contains(f)) counts[Index(f)] += 1.0;
  }
}

FoundationScores Normalize(std::array<double, kNumFoundations> counts,
                           std::size_t denominator) {
  if (denominator == 0) return FoundationScores();
  for (double& c : counts) c /= static_cast<double>(denominator);
  return FoundationScores(counts);
}

}  // namespace

std::optional<FoundationLabel> ParseFoundationLabel(std::string_view label) {
  std::string lower = internal::AsciiLower(internal::Trim(label));
  std::string head = lower;
  std::string pole;
  if (const auto dot = lower.find('.'); dot != std::string::npos) {
    head = lower.substr(0, dot);
    pole = lower.substr(dot + 1);
  } else {
    for (std::string_view suffix : {"virtue", "vice"}) {
      if (lower.size() > suffix.size() &&
          lower.compare(lower.size() - suffix.size(), suffix.size(), suffix) == 0) {
        head = lower.substr(0, lower.size() - suffix.size());
        pole = std::string(suffix);
        break;
      }
    }
  }
  if (!head.empty() && (head.back() == '_' || head.back() == '-')) head.pop_back();
  if (!pole.empty() && pole != "virtue" && pole != "vice") return std::nullopt;
  if (IsDroppedCategory(head)) return FoundationLabel{std::nullopt, true};
  const auto f = FoundationFromPole(head);
  if (!f) return std::nullopt;
  return FoundationLabel{*f, false};
}

// ---- PrefixLexicon --------------------------------------------------------

PrefixLexicon::PrefixLexicon() : nodes_(1) {}

std::optional<std::uint32_t> PrefixLexicon::Child(std::uint32_t node,
                                                  unsigned char c) const {
  const auto& kids = nodes_[node].children;
  const auto it = std::lower_bound(
      kids.begin(), kids.end(), c,
      [](const auto& kid, unsigned char key) { return kid.first < key; });
  if (it == kids.end() || it->first != c) return std::nullopt;
  return it->second;
}

void PrefixLexicon::Add(std::string_view pattern, FoundationSet foundations) {
  std::string text = internal::AsciiLower(pattern);
  bool is_prefix = false;
  if (!text.empty() && text.back() == '*') {
    is_prefix = true;
    text.pop_back();
  }
  if (text.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty lexicon entry");
  }
  std::uint32_t node = 0;
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (const auto next = Child(node, c)) {
      node = *next;
      continue;
    }
    const auto fresh = static_cast<std::uint32_t>(nodes_.size());
    nodes_.emplace_back();
    auto& kids = nodes_[node].children;
    const auto it = std::lower_bound(
        kids.begin(), kids.end(), c,
        [](const auto& kid, unsigned char key) { return kid.first < key; });
    kids.insert(it, {c, fresh});
    node = fresh;
  }
  FoundationSet& slot = is_prefix ? nodes_[node].prefix_foundations
                                  : nodes_[node].word_foundations;
  if (slot.Empty()) ++entry_count_;
  slot |= foundations;
}

FoundationSet PrefixLexicon::Match(std::string_view word) const {
  FoundationSet out;
  std::uint32_t node = 0;
  for (char ch : word) {
    const auto next = Child(node, static_cast<unsigned char>(ch));
    if (!next) return out;
    node = *next;
    out |= nodes_[node].prefix_foundations;
  }
  out |= nodes_[node].word_foundations;
  return out;
}

void PrefixLexicon::CollectEntries(std::uint32_t node, std::string& path,
                                   std::vector<Entry>& out) const {
  const Node& n = nodes_[node];
  if (!n.word_foundations.Empty()) out.push_back({path, false, n.word_foundations});
  if (!n.prefix_foundations.Empty()) {
    out.push_back({path, true, n.prefix_foundations});
  }
  for (const auto& [c, child] : n.children) {
    path.push_back(static_cast<char>(c));
    CollectEntries(child, path, out);
    path.pop_back();
  }
}

std::vector<PrefixLexicon::Entry> PrefixLexicon::Entries() const {
  std::vector<Entry> out;
  std::string path;
  CollectEntries(0, path, out);
  return out;
}

Vocabulary PrefixLexicon::Vocab() const {
  Vocabulary out;
  for (auto& e : Entries()) out.insert(std::move(e.text));
  return out;
}

FoundationScores PrefixLexicon::Score(const TokenizedDoc& tdoc) const {
  std::array<double, kNumFoundations> counts{};
  for (std::size_t i = 0; i < tdoc.size(); ++i) {
    Increment(Match(tdoc.tokens[i]) | Match(tdoc.lemmas[i]), counts);
  }
  return Normalize(counts, tdoc.size());
}

std::size_t PrefixLexicon::CountMatches(const TokenizedDoc& tdoc) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < tdoc.size(); ++i) {
    if (!(Match(tdoc.tokens[i]) | Match(tdoc.lemmas[i])).Empty()) ++n;
  }
  return n;
}

// ---- WordLexicon ----------------------------------------------------------

void WordLexicon::Add(std::string_view word, FoundationSet foundations) {
  if (word.empty()) throw Error(ErrorCode::kInvalidArgument, "empty lexicon entry");
  entries_[internal::AsciiLower(word)] |= foundations;
}

FoundationSet WordLexicon::Match(std::string_view word) const {
  const auto it = entries_.find(std::string(word));
  return it == entries_.end() ? FoundationSet() : it->second;
}

Vocabulary WordLexicon::Vocab() const {
  Vocabulary out;
  for (const auto& [word, _] : entries_) out.insert(word);
  return out;
}

FoundationScores WordLexicon::Score(const TokenizedDoc& tdoc) const {
  std::array<double, kNumFoundations> counts{};
  for (std::size_t i = 0; i < tdoc.size(); ++i) {
    Increment(Match(tdoc.tokens[i]) | Match(tdoc.lemmas[i]), counts);
  }
  return Normalize(counts, tdoc.size());
}

std::size_t WordLexicon::CountMatches(const TokenizedDoc& tdoc) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < tdoc.size(); ++i) {
    if (!(Match(tdoc.tokens[i]) | Match(tdoc.lemmas[i])).Empty()) ++n;
  }
  return n;
}

// ---- WeightedLexicon ------------------------------------------------------

void WeightedLexicon::Add(std::string_view word, const FoundationWeights& weights) {
  if (word.empty()) throw Error(ErrorCode::kInvalidArgument, "empty lexicon entry");
  for (double w : weights) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw Error(ErrorCode::kWeightOutOfRange, std::string(word));
    }
  }
  entries_[internal::AsciiLower(word)] = weights;
}

const FoundationWeights* WeightedLexicon::Find(std::string_view word) const {
  const auto it = entries_.find(std::string(word));
  return it == entries_.end() ? nullptr : &it->second;
}

const FoundationWeights* WeightedLexicon::MatchToken(const TokenizedDoc& tdoc,
                                                     std::size_t i) const {
  if (const auto* w = Find(tdoc.tokens[i])) return w;
  return Find(tdoc.lemmas[i]);
}

Vocabulary WeightedLexicon::Vocab() const {
  Vocabulary out;
  for (const auto& [word, _] : entries_) out.insert(word);
  return out;
}

FoundationScores WeightedLexicon::Score(const TokenizedDoc& tdoc) const {
  std::array<double, kNumFoundations> sums{};
  std::size_t matched = 0;
  for (std::size_t i = 0; i < tdoc.size(); ++i) {
    const FoundationWeights* w = MatchToken(tdoc, i);
    if (w == nullptr) continue;
    ++matched;
    for (std::size_t k = 0; k < kNumFoundations; ++k) sums[k] += (*w)[k];
  }
  return Normalize(sums, matched);
}

std::size_t WeightedLexicon::CountMatches(const TokenizedDoc& tdoc) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < tdoc.size(); ++i) {
    if (MatchToken(tdoc, i) != nullptr) ++n;
  }
  return n;
}

// ---- Loading --------------------------------------------------------------

std::string_view LexiconKindName(LexiconKind kind) {
  switch (kind) {
    case LexiconKind::kPrefix: return "prefix";
    case LexiconKind::kWord: return "word";
    case LexiconKind::kWeighted: return "weighted";
  }
  return "";
}

std::optional<LexiconKind> ParseLexiconKind(std::string_view name) {
  for (auto kind : {LexiconKind::kPrefix, LexiconKind::kWord, LexiconKind::kWeighted}) {
    if (LexiconKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

PrefixLexicon LoadPrefixLexicon(std::istream& in) {
  PrefixLexicon lex;
  LoadCategoricalLines(in, [&](const std::string& entry, FoundationSet set,
                               std::size_t line_no) {
    if (entry == "*") {
      throw Error(ErrorCode::kMalformedLine, "bare '*' entry", line_no);
    }
    lex.Add(entry, set);
  });
  return lex;
}

WordLexicon LoadWordLexicon(std::istream& in) {
  WordLexicon lex;
  LoadCategoricalLines(in, [&](const std::string& entry, FoundationSet set,
                               std::size_t line_no) {
    if (entry.find('*') != std::string::npos) {
      throw Error(ErrorCode::kMalformedLine, "wildcard in word lexicon", line_no);
    }
    lex.Add(entry, set);
  });
  return lex;
}

WeightedLexicon LoadWeightedLexicon(std::istream& in) {
  static constexpr std::string_view kHeader[] = {"word", "authority", "care",
                                                 "fairness", "loyalty", "sanctity"};
  LineReader reader(in);
  std::string line;
  if (!reader.NextContent(line)) {
    throw Error(ErrorCode::kMalformedLine, "missing header", reader.line_no() + 1);
  }
  {
    const auto fields = Split(line, '\t');
    bool ok = fields.size() == 6;
    for (std::size_t i = 0; ok && i < 6; ++i) {
      ok = internal::AsciiLower(internal::Trim(fields[i])) == kHeader[i];
    }
    if (!ok) {
      throw Error(ErrorCode::kMalformedLine,
                  "expected header word/authority/care/fairness/loyalty/sanctity",
                  reader.line_no());
    }
  }
  WeightedLexicon lex;
  Vocabulary seen;
  while (reader.NextContent(line)) {
    const auto fields = Split(line, '\t');
    if (fields.size() != 6) {
      throw Error(ErrorCode::kMalformedLine, "expected word and five weights",
                  reader.line_no());
    }
    const auto word = NormalizeEntry(internal::Trim(fields[0]));
    if (!word) {
      throw Error(ErrorCode::kMalformedLine, "empty or invalid entry",
                  reader.line_no());
    }
    FoundationWeights weights{};
    for (std::size_t k = 0; k < kNumFoundations; ++k) {
      const auto value = internal::ParseDouble(internal::Trim(fields[k + 1]));
      if (!value) {
        throw Error(ErrorCode::kMalformedLine, "bad weight", reader.line_no());
      }
      weights[k] = *value;
    }
    if (!seen.insert(*word).second) {
      throw Error(ErrorCode::kMalformedLine, "duplicate word " + *word,
                  reader.line_no());
    }
    lex.Add(*word, weights);
  }
  return lex;
}

AnyLexicon LoadLexicon(LexiconKind kind, std::istream& in) {
  switch (kind) {
    case LexiconKind::kPrefix: return LoadPrefixLexicon(in);
    case LexiconKind::kWord: return LoadWordLexicon(in);
    case LexiconKind::kWeighted: return LoadWeightedLexicon(in);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown lexicon kind");
}

LexiconKind DetectLexiconKind(std::string_view content) {
  std::istringstream in{std::string(content)};
  LineReader reader(in);
  std::string line;
  bool first = true;
  while (reader.NextContent(line)) {
    const auto fields = Split(line, '\t');
    if (first && !fields.empty() &&
        internal::AsciiLower(internal::Trim(fields[0])) == "word" &&
        fields.size() == 6) {
      return LexiconKind::kWeighted;
    }
    first = false;
    if (!fields.empty() && fields[0].find('*') != std::string_view::npos) {
      return LexiconKind::kPrefix;
    }
  }
  return LexiconKind::kWord;
}

const Scorer& AsScorer(const AnyLexicon& lexicon) {
  return std::visit([](const auto& lex) -> const Scorer& { return lex; }, lexicon);
}

Vocabulary VocabularyOf(const AnyLexicon& lexicon) {
  return std::visit([](const auto& lex) { return lex.Vocab(); }, lexicon);
}

FoundationScores ScorePrefixCount(const TokenizedDoc& tdoc,
                                  const PrefixLexicon& lex) {
  return lex.Score(tdoc);
}

FoundationScores ScoreWordCount(const TokenizedDoc& tdoc, const WordLexicon& lex) {
  return lex.Score(tdoc);
}

FoundationScores ScoreWeighted(const TokenizedDoc& tdoc,
                               const WeightedLexicon& lex) {
  return lex.Score(tdoc);
}

// ---- Overlap --------------------------------------------------------------

OverlapReport LexiconStats(const Vocabulary& a, const Vocabulary& b,
                           const Vocabulary& c) {
  OverlapReport r;
  r.sizes = {a.size(), b.size(), c.size()};
  for (const auto& w : a) {
    const bool in_b = b.contains(w);
    const bool in_c = c.contains(w);
    r.ab += in_b;
    r.ac += in_c;
    r.abc += in_b && in_c;
  }
  for (const auto& w : b) r.bc += c.contains(w);

  const auto ratio = [](std::size_t num, std::size_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  r.ab_fraction_of_a = ratio(r.ab, a.size());
  r.ab_fraction_of_b = ratio(r.ab, b.size());
  // |X \ (Y ∪ Z)| = |X| - |X∩Y| - |X∩Z| + |X∩Y∩Z|
  r.unique_fraction[0] = ratio(a.size() - r.ab - r.ac + r.abc, a.size());
  r.unique_fraction[1] = ratio(b.size() - r.ab - r.bc + r.abc, b.size());
  r.unique_fraction[2] = ratio(c.size() - r.ac - r.bc + r.abc, c.size());
  return r;
}

}  // namespace mftk
