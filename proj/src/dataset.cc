#include "mftk/dataset.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "mftk/error.h"
#include "mftk/random.h"
#include "parse_util.h"

namespace mftk {
namespace {

std::string NormalizeRawLabel(std::string_view raw) {
  std::string s = internal::AsciiLower(internal::Trim(raw));
  std::replace(s.begin(), s.end(), '_', ' ');
  std::replace(s.begin(), s.end(), '-', ' ');
  return s;
}

// Byte offset of every code point start, plus the text length at the end.
std::vector<std::size_t> CodepointOffsets(std::string_view text) {
  std::vector<std::size_t> offsets;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) offsets.push_back(i);
  }
  offsets.push_back(text.size());
  return offsets;
}

void CheckSpan(const TextSpan& s, std::size_t length, std::string_view what) {
  if (s.start >= s.end || s.end > length) {
    throw Error(ErrorCode::kSpanOutOfBounds,
                std::string(what) + " [" + std::to_string(s.start) + ", " +
                    std::to_string(s.end) + ") invalid for text of " +
                    std::to_string(length) + " code points");
  }
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::size_t RoundHalfUp(double x) { return static_cast<std::size_t>(std::floor(x + 0.5)); }

// Per-label quota deviation of a partition, summarized as
// (largest |count - target|, sum of squared deviations).
struct QuotaFit {
  double worst = 0.0;
  double squares = 0.0;
  bool BetterThan(const QuotaFit& o) const {
    constexpr double kEps = 1e-12;
    if (worst < o.worst - kEps) return true;
    return worst <= o.worst + kEps && squares < o.squares - kEps;
  }
};

QuotaFit MeasureFit(const std::vector<std::array<double, kNumFoundations>>& counts,
                    const std::vector<std::array<double, kNumFoundations>>& target) {
  QuotaFit fit;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    for (std::size_t f = 0; f < kNumFoundations; ++f) {
      const double d = counts[j][f] - target[j][f];
      fit.worst = std::max(fit.worst, std::abs(d));
      fit.squares += d * d;
    }
  }
  return fit;
}

// Greedy assignment can leave a label more than one example off its quota
// when its positives were already placed by rarer labels. Pairwise swaps of
// examples with different label sets fix this without changing subset sizes;
// each accepted swap strictly improves the fit, so the loop terminates.
void RepairQuotas(std::span<const LabeledExample> corpus, std::span<const double> fractions,
                  std::vector<std::vector<std::size_t>>& subsets) {
  const std::size_t k = subsets.size();
  constexpr std::size_t kTypes = 1u << kNumFoundations;
  const auto type_of = [&](std::size_t i) { return corpus[i].labels.Positives().bits(); };
  // members[j][t]: examples of label set t in subset j, ascending.
  std::vector<std::array<std::vector<std::size_t>, kTypes>> members(k);
  std::vector<std::array<double, kNumFoundations>> counts(k), target(k);
  std::array<double, kNumFoundations> total{};
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i : subsets[j]) {
      const auto t = type_of(i);
      members[j][t].push_back(i);
      for (std::size_t f = 0; f < kNumFoundations; ++f) {
        if (t & (1u << f)) {
          counts[j][f] += 1.0;
          total[f] += 1.0;
        }
      }
    }
  }
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t f = 0; f < kNumFoundations; ++f) target[j][f] = fractions[j] * total[f];
  }
  const auto apply = [&](std::size_t a, std::size_t t, std::size_t b, std::size_t u, double sign) {
    for (std::size_t f = 0; f < kNumFoundations; ++f) {
      const double delta = ((u >> f) & 1u) - static_cast<double>((t >> f) & 1u);
      counts[a][f] += sign * delta;
      counts[b][f] -= sign * delta;
    }
  };

  QuotaFit current = MeasureFit(counts, target);
  while (current.worst > 1.0 + 1e-9) {
    QuotaFit best = current;
    std::optional<std::array<std::size_t, 4>> move;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        for (std::size_t t = 0; t < kTypes; ++t) {
          if (members[a][t].empty()) continue;
          for (std::size_t u = 0; u < kTypes; ++u) {
            if (u == t || members[b][u].empty()) continue;
            apply(a, t, b, u, 1.0);
            const QuotaFit fit = MeasureFit(counts, target);
            apply(a, t, b, u, -1.0);
            if (fit.BetterThan(best)) {
              best = fit;
              move = std::array<std::size_t, 4>{a, t, b, u};
            }
          }
        }
      }
    }
    if (!move) break;
    const auto [a, t, b, u] = *move;
    apply(a, t, b, u, 1.0);
    const std::size_t from_a = members[a][t].front();
    const std::size_t from_b = members[b][u].front();
    members[a][t].erase(members[a][t].begin());
    members[b][u].erase(members[b][u].begin());
    members[b][t].insert(std::lower_bound(members[b][t].begin(), members[b][t].end(), from_a), from_a);
    members[a][u].insert(std::lower_bound(members[a][u].begin(), members[a][u].end(), from_b), from_b);
    current = best;
  }
  for (std::size_t j = 0; j < k; ++j) {
    subsets[j].clear();
    for (const auto& list : members[j]) subsets[j].insert(subsets[j].end(), list.begin(), list.end());
  }
}

}  // namespace

std::string_view AnnotationSchemaName(AnnotationSchema schema) {
  return schema == AnnotationSchema::kTwitter ? "twitter" : "reddit";
}

std::optional<AnnotationSchema> ParseAnnotationSchema(std::string_view name) {
  const std::string s = internal::AsciiLower(name);
  if (s == "twitter") return AnnotationSchema::kTwitter;
  if (s == "reddit") return AnnotationSchema::kReddit;
  return std::nullopt;
}

std::optional<Foundation> MapRawLabel(std::string_view raw, AnnotationSchema schema) {
  const std::string s = NormalizeRawLabel(raw);
  if (s == "non moral" || s == "nonmoral") return std::nullopt;
  if (auto f = ParseFoundation(s)) return f;
  if (s == "harm") return Foundation::kCare;
  if (s == "purity") return Foundation::kSanctity;
  if (schema == AnnotationSchema::kTwitter) {
    if (s == "cheating") return Foundation::kFairness;
    if (s == "betrayal") return Foundation::kLoyalty;
    if (s == "subversion") return Foundation::kAuthority;
    if (s == "degradation") return Foundation::kSanctity;
  } else {
    if (s == "equality" || s == "proportionality") return Foundation::kFairness;
    if (s == "thin morality") return std::nullopt;
  }
  throw Error(ErrorCode::kUnknownRawLabel,
              "'" + std::string(raw) + "' is not a " +
                  std::string(AnnotationSchemaName(schema)) + " label");
}

LabeledExample AggregateAnnotations(const AnnotatedExample& ex, AnnotationSchema schema) {
  if (ex.annotations.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "example '" + ex.id + "' has no annotations");
  }
  FoundationSet positives;
  for (const auto& annotator : ex.annotations) {
    for (const auto& raw : annotator) {
      if (auto f = MapRawLabel(raw, schema)) positives.Insert(*f);
    }
  }
  return LabeledExample{ex.id, ex.text, FoundationLabels::FromSet(positives)};
}

std::vector<LabeledExample> LabelSentences(const HighlightedArticle& article,
                                           std::span<const TextSpan> sentences) {
  const auto offsets = CodepointOffsets(article.text);
  const std::size_t length = offsets.size() - 1;
  for (const auto& h : article.highlights) CheckSpan(h.span, length, "highlight");
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    CheckSpan(sentences[i], length, "sentence");
    if (i > 0 && sentences[i].start < sentences[i - 1].end) {
      throw Error(ErrorCode::kOverlappingSpans,
                  "sentence " + std::to_string(i) + " starts before the previous one ends");
    }
  }

  std::vector<LabeledExample> out;
  out.reserve(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const auto& s = sentences[i];
    FoundationSet hit;
    for (const auto& h : article.highlights) {
      if (h.span.start < s.end && s.start < h.span.end) hit.Insert(h.foundation);
    }
    LabeledExample ex;
    ex.id = article.id + ":" + std::to_string(i);
    ex.text = article.text.substr(offsets[s.start], offsets[s.end] - offsets[s.start]);
    for (Foundation f : kAllFoundations) {
      if (article.assigned && !article.assigned->Contains(f)) continue;  // missing
      ex.labels[f] = hit.Contains(f);
    }
    out.push_back(std::move(ex));
  }
  return out;
}

std::vector<TextSpan> SplitSentences(std::string_view text) {
  const auto offsets = CodepointOffsets(text);
  const std::size_t length = offsets.size() - 1;
  // Single-byte code points are the only ones the rules look at.
  const auto ascii_at = [&](std::size_t cp) -> char {
    return offsets[cp + 1] - offsets[cp] == 1 ? text[offsets[cp]] : '\0';
  };
  std::vector<TextSpan> spans;
  std::size_t start = 0;
  const auto emit = [&](std::size_t end) {
    while (start < end && IsSpace(ascii_at(start))) ++start;
    std::size_t e = end;
    while (e > start && IsSpace(ascii_at(e - 1))) --e;
    if (e > start) spans.push_back(TextSpan{start, e});
    start = end;
  };
  for (std::size_t cp = 0; cp < length; ++cp) {
    const char c = ascii_at(cp);
    if (c != '.' && c != '?' && c != '!') continue;
    if (cp + 1 == length || IsSpace(ascii_at(cp + 1))) emit(cp + 1);
  }
  emit(length);
  return spans;
}

SplitResult StratifiedSplit(std::span<const LabeledExample> corpus, Foundation foundation,
                            double test_fraction, std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw Error(ErrorCode::kBadFractions, "test fraction must lie in (0, 1)");
  }
  SplitResult result;
  std::vector<std::size_t> pos;
  std::vector<std::size_t> neg;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& label = corpus[i].labels[foundation];
    if (!label.has_value()) {
      ++result.excluded_missing;
    } else {
      (*label ? pos : neg).push_back(i);
    }
  }
  if (pos.empty() || neg.empty()) {
    throw Error(ErrorCode::kDegenerateLabels,
                "stratifying on " + std::string(FoundationName(foundation)) +
                    " needs both classes");
  }
  const std::size_t n = pos.size() + neg.size();
  const std::size_t test_size = RoundHalfUp(test_fraction * static_cast<double>(n));
  std::size_t test_pos = RoundHalfUp(static_cast<double>(test_size) *
                                     static_cast<double>(pos.size()) / static_cast<double>(n));
  test_pos = std::min(test_pos, pos.size());
  std::size_t test_neg = std::min(test_size - test_pos, neg.size());

  Rng rng(seed);
  rng.Shuffle(std::span<std::size_t>(pos));
  rng.Shuffle(std::span<std::size_t>(neg));
  result.test.assign(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(test_pos));
  result.test.insert(result.test.end(), neg.begin(),
                     neg.begin() + static_cast<std::ptrdiff_t>(test_neg));
  result.train.assign(pos.begin() + static_cast<std::ptrdiff_t>(test_pos), pos.end());
  result.train.insert(result.train.end(),
                      neg.begin() + static_cast<std::ptrdiff_t>(test_neg), neg.end());
  std::sort(result.test.begin(), result.test.end());
  std::sort(result.train.begin(), result.train.end());
  return result;
}

std::vector<std::vector<std::size_t>> IterativeStratifiedSplit(
    std::span<const LabeledExample> corpus, std::span<const double> fractions,
    std::uint64_t seed) {
  if (fractions.empty()) throw Error(ErrorCode::kBadFractions, "no fractions given");
  double total = 0.0;
  for (double f : fractions) {
    if (!(f > 0.0)) throw Error(ErrorCode::kBadFractions, "fractions must be positive");
    total += f;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw Error(ErrorCode::kBadFractions, "fractions must sum to 1");
  }
  for (const auto& ex : corpus) {
    if (ex.labels.HasMissing()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "example '" + ex.id + "' has a missing label; exclude it first");
    }
  }

  const std::size_t k = fractions.size();
  const double n = static_cast<double>(corpus.size());
  std::vector<double> capacity(k);
  for (std::size_t j = 0; j < k; ++j) capacity[j] = fractions[j] * n;
  std::array<std::size_t, kNumFoundations> label_count{};
  for (const auto& ex : corpus) {
    for (Foundation f : kAllFoundations) label_count[Index(f)] += *ex.labels[f] ? 1 : 0;
  }
  // quota[f][j]: positives of f still wanted by subset j.
  std::array<std::vector<double>, kNumFoundations> quota;
  for (std::size_t f = 0; f < kNumFoundations; ++f) {
    quota[f].resize(k);
    for (std::size_t j = 0; j < k; ++j) {
      quota[f][j] = fractions[j] * static_cast<double>(label_count[f]);
    }
  }

  Rng rng(seed);
  std::vector<bool> assigned(corpus.size(), false);
  std::vector<std::vector<std::size_t>> subsets(k);
  std::vector<std::size_t> candidates;

  // Picks the subset by the given primary key, then capacity, then at random.
  const auto choose = [&](const std::vector<double>* primary) {
    candidates.clear();
    for (std::size_t j = 0; j < k; ++j) {
      if (candidates.empty()) {
        candidates.push_back(j);
        continue;
      }
      const std::size_t c = candidates.front();
      const double pj = primary ? (*primary)[j] : 0.0;
      const double pc = primary ? (*primary)[c] : 0.0;
      if (pj > pc || (pj == pc && capacity[j] > capacity[c])) {
        candidates.assign(1, j);
      } else if (pj == pc && capacity[j] == capacity[c]) {
        candidates.push_back(j);
      }
    }
    return candidates.size() == 1 ? candidates.front()
                                  : candidates[rng.UniformIndex(candidates.size())];
  };
  const auto place = [&](std::size_t i, std::size_t j) {
    assigned[i] = true;
    subsets[j].push_back(i);
    capacity[j] -= 1.0;
    for (Foundation f : kAllFoundations) {
      if (*corpus[i].labels[f]) quota[Index(f)][j] -= 1.0;
    }
  };

  std::array<std::size_t, kNumFoundations> remaining = label_count;
  while (true) {
    // Rarest label with examples left; ties by canonical order.
    std::optional<std::size_t> label;
    for (std::size_t f = 0; f < kNumFoundations; ++f) {
      if (remaining[f] == 0) continue;
      if (!label || remaining[f] < remaining[*label]) label = f;
    }
    if (!label) break;
    const Foundation lf = kAllFoundations[*label];
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (assigned[i] || !*corpus[i].labels[lf]) continue;
      place(i, choose(&quota[*label]));
      for (Foundation f : kAllFoundations) {
        if (*corpus[i].labels[f]) --remaining[Index(f)];
      }
    }
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!assigned[i]) place(i, choose(nullptr));
  }
  RepairQuotas(corpus, fractions, subsets);
  for (auto& s : subsets) std::sort(s.begin(), s.end());
  return subsets;
}

}  // namespace mftk
