#include "mftk/tfidf.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "mftk/error.h"

namespace mftk {

TfIdfModel TfIdfModel::Fit(std::span<const std::vector<std::string>> corpus) {
  if (corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, "tf-idf needs documents");
  std::map<std::string, std::size_t> df;
  std::vector<std::string> unique;
  for (const auto& doc : corpus) {
    unique.assign(doc.begin(), doc.end());
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    for (const auto& t : unique) ++df[t];
  }
  std::vector<std::string> vocabulary;
  std::vector<double> idf;
  vocabulary.reserve(df.size());
  idf.reserve(df.size());
  const double n = static_cast<double>(corpus.size());
  for (const auto& [token, count] : df) {
    vocabulary.push_back(token);
    idf.push_back(std::log((1.0 + n) / (1.0 + static_cast<double>(count))) + 1.0);
  }
  return TfIdfModel(std::move(vocabulary), std::move(idf), corpus.size());
}

TfIdfModel::TfIdfModel(std::vector<std::string> vocabulary, std::vector<double> idf,
                       std::size_t document_count)
    : vocabulary_(std::move(vocabulary)),
      idf_(std::move(idf)),
      document_count_(document_count) {
  if (idf_.size() != vocabulary_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "idf and vocabulary lengths differ");
  }
  for (std::size_t j = 0; j < vocabulary_.size(); ++j) {
    if (!(idf_[j] > 0.0) || !std::isfinite(idf_[j])) {
      throw Error(ErrorCode::kInvalidArgument, "idf must be positive and finite");
    }
    if (j > 0 && !(vocabulary_[j - 1] < vocabulary_[j])) {
      throw Error(ErrorCode::kInvalidArgument, "vocabulary must be sorted and unique");
    }
    column_.emplace(vocabulary_[j], j);
  }
}

std::optional<std::size_t> TfIdfModel::ColumnOf(std::string_view token) const {
  const auto it = column_.find(std::string(token));
  if (it == column_.end()) return std::nullopt;
  return it->second;
}

SparseVector TfIdfModel::Transform(std::span<const std::string> tokens) const {
  std::map<std::size_t, double> counts;
  for (const auto& t : tokens) {
    if (const auto col = ColumnOf(t)) counts[*col] += 1.0;
  }
  SparseVector out;
  out.dimension = dimension();
  double norm2 = 0.0;
  for (const auto& [col, tf] : counts) {
    const double v = tf * idf_[col];
    out.indices.push_back(static_cast<std::uint32_t>(col));
    out.values.push_back(v);
    norm2 += v * v;
  }
  if (norm2 > 0.0) {
    const double norm = std::sqrt(norm2);
    for (double& v : out.values) v /= norm;
  }
  return out;
}

}  // namespace mftk
