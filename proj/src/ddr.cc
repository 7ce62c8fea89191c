#include "mftk/ddr.h"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "mftk/error.h"
#include "parse_util.h"

namespace mftk {

EmbeddingTable::EmbeddingTable(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) {
    throw Error(ErrorCode::kInvalidArgument, "embedding dimension must be positive");
  }
}

void EmbeddingTable::Set(std::string_view word, std::span<const double> vector) {
  if (vector.size() != dimension_) {
    throw Error(ErrorCode::kInconsistentDimension,
                "expected " + std::to_string(dimension_) + " values, got " +
                    std::to_string(vector.size()));
  }
  std::string key = LowercaseUtf8(word);
  const auto [it, inserted] = index_.try_emplace(key, words_.size());
  if (inserted) {
    words_.push_back(std::move(key));
    data_.insert(data_.end(), vector.begin(), vector.end());
  } else {
    std::copy(vector.begin(), vector.end(),
              data_.begin() + static_cast<std::ptrdiff_t>(it->second * dimension_));
  }
}

std::span<const double> EmbeddingTable::Find(std::string_view word) const {
  const auto it = index_.find(std::string(word));
  if (it == index_.end()) return {};
  return std::span<const double>(data_).subspan(it->second * dimension_, dimension_);
}

EmbeddingTable LoadEmbeddings(std::istream& in) {
  internal::LineReader reader(in);
  std::string line;
  std::optional<EmbeddingTable> table;
  std::vector<double> values;
  while (reader.Next(line)) {
    if (internal::Trim(line).empty()) continue;
    values.clear();
    std::string_view word;
    bool first = true;
    for (std::string_view field : internal::Split(line, ' ')) {
      if (field.empty()) continue;
      if (first) {
        word = field;
        first = false;
        continue;
      }
      const auto v = internal::ParseDouble(field);
      if (!v) {
        throw Error(ErrorCode::kMalformedLine, "bad number '" + std::string(field) + "'",
                    reader.line_no());
      }
      values.push_back(*v);
    }
    if (values.empty()) {
      throw Error(ErrorCode::kMalformedLine, "expected word followed by numbers",
                  reader.line_no());
    }
    if (!table) table.emplace(values.size());
    if (values.size() != table->dimension()) {
      throw Error(ErrorCode::kInconsistentDimension,
                  "expected " + std::to_string(table->dimension()) + " values, got " +
                      std::to_string(values.size()),
                  reader.line_no());
    }
    table->Set(word, values);
  }
  if (!table) throw Error(ErrorCode::kMalformedLine, "empty embedding file", 1);
  return std::move(*table);
}

void WriteEmbeddings(const EmbeddingTable& table, std::ostream& out) {
  for (const auto& word : table.words()) {
    out << word;
    for (double v : table.Find(word)) out << ' ' << internal::FormatShortest(v);
    out << '\n';
  }
}

SeedSet::SeedSet(Foundation foundation, std::vector<std::string> words)
    : foundation_(foundation) {
  std::unordered_set<std::string> seen;
  for (auto& w : words) {
    std::string key = LowercaseUtf8(internal::Trim(w));
    if (key.empty()) continue;
    if (seen.insert(key).second) words_.push_back(std::move(key));
  }
  if (words_.empty()) {
    throw Error(ErrorCode::kEmptyWordList,
                "no seed words for " + std::string(FoundationName(foundation)));
  }
}

SeedSets DefaultSeedSets() {
  return {
      SeedSet(Foundation::kAuthority,
              {"authority", "obey", "respect", "tradition", "subversion", "disobey",
               "disrespect", "chaos"}),
      SeedSet(Foundation::kCare,
              {"kindness", "compassion", "nurture", "empathy", "suffer", "cruel",
               "hurt", "harm"}),
      SeedSet(Foundation::kFairness,
              {"equality", "egalitarian", "justice", "nondiscriminatory", "prejudice",
               "inequality", "discrimination", "biased", "proportional", "merit",
               "deserving", "reciprocal", "disproportionate", "cheating",
               "favoritism", "recognition"}),
      SeedSet(Foundation::kLoyalty,
              {"loyal", "solidarity", "patriot", "fidelity", "betray", "treason",
               "disloyal", "traitor"}),
      SeedSet(Foundation::kSanctity,
              {"purity", "sanctity", "sacred", "wholesome", "impurity", "depravity",
               "degradation", "unnatural"}),
  };
}

SeedSets LoadSeedSets(std::istream& in, SeedSets base) {
  internal::LineReader reader(in);
  std::string line;
  while (reader.NextContent(line)) {
    const auto fields = internal::Split(line, '\t');
    if (fields.size() != 2) {
      throw Error(ErrorCode::kMalformedLine, "expected foundation<TAB>words",
                  reader.line_no());
    }
    const auto f = ParseFoundation(internal::AsciiLower(internal::Trim(fields[0])));
    if (!f) {
      throw Error(ErrorCode::kUnknownFoundation, std::string(fields[0]),
                  reader.line_no());
    }
    std::vector<std::string> words;
    for (auto w : internal::Split(fields[1], ',')) words.emplace_back(w);
    base[Index(*f)] = SeedSet(*f, std::move(words));
  }
  return base;
}

std::vector<double> Centroid(std::span<const std::string> words,
                             const EmbeddingTable& table) {
  if (words.empty()) throw Error(ErrorCode::kEmptyWordList, "centroid of no words");
  std::vector<double> sum(table.dimension(), 0.0);
  for (const auto& w : words) {
    const auto v = table.Find(w);
    for (std::size_t j = 0; j < v.size(); ++j) sum[j] += v[j];
  }
  const double n = static_cast<double>(words.size());
  for (double& x : sum) x /= n;
  return sum;
}

DocVector DocumentVector(const TokenizedDoc& tdoc, const EmbeddingTable& table) {
  DocVector out;
  out.token_count = tdoc.size();
  if (tdoc.empty()) {
    out.vector.assign(table.dimension(), 0.0);
    return out;
  }
  out.vector = Centroid(tdoc.tokens, table);
  return out;
}

double CosineSimilarity(std::span<const double> a, std::span<const double> b,
                        std::string_view a_name, std::string_view b_name) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "cosine of vectors of unequal length");
  }
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    dot += a[j] * b[j];
    na += a[j] * a[j];
    nb += b[j] * b[j];
  }
  if (na == 0.0) throw Error(ErrorCode::kZeroVector, std::string(a_name));
  if (nb == 0.0) throw Error(ErrorCode::kZeroVector, std::string(b_name));
  const double cos = dot / (std::sqrt(na) * std::sqrt(nb));
  return std::clamp(cos, -1.0, 1.0);
}

double DdrScore(const TokenizedDoc& tdoc, const SeedSet& seeds,
                const EmbeddingTable& table) {
  const auto foundation = Centroid(seeds.words(), table);
  const auto doc = DocumentVector(tdoc, table);
  return CosineSimilarity(doc.vector, foundation, "document", "foundation");
}

DdrScorer::DdrScorer(const EmbeddingTable& table, const SeedSets& seeds)
    : table_(table) {
  for (const auto& s : seeds) {
    auto c = Centroid(s.words(), table);
    const bool zero = std::all_of(c.begin(), c.end(), [](double x) { return x == 0.0; });
    if (zero) {
      throw Error(ErrorCode::kZeroVector,
                  "foundation " + std::string(FoundationName(s.foundation())));
    }
    centroids_[Index(s.foundation())] = std::move(c);
  }
}

FoundationScores DdrScorer::Score(const TokenizedDoc& tdoc) const {
  const auto doc = DocumentVector(tdoc, table_);
  FoundationScores out;
  for (Foundation f : kAllFoundations) {
    out[f] = CosineSimilarity(doc.vector, centroids_[Index(f)], "document",
                              "foundation");
  }
  return out;
}

std::size_t DdrScorer::CountMatches(const TokenizedDoc& tdoc) const {
  std::size_t n = 0;
  for (const auto& t : tdoc.tokens) n += !table_.Find(t).empty();
  return n;
}

}  // namespace mftk
