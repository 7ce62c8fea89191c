#ifndef MFTK_TFIDF_H_
#define MFTK_TFIDF_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mftk/features.h"

namespace mftk {

// Smoothed tf-idf: idf(t) = ln((1 + N) / (1 + df(t))) + 1, raw-count tf,
// rows L2-normalized. The vocabulary is sorted lexicographically and comes
// from the training documents only.
class TfIdfModel {
 public:
  // Throws kEmptyCorpus.
  static TfIdfModel Fit(std::span<const std::vector<std::string>> corpus);

  // Rebuilds a fitted model (e.g. from a saved file). `vocabulary` must be
  // strictly increasing and idf positive with the same length.
  TfIdfModel(std::vector<std::string> vocabulary, std::vector<double> idf,
             std::size_t document_count);

  // Unseen tokens are ignored; an all-unseen list gives the zero vector.
  SparseVector Transform(std::span<const std::string> tokens) const;

  std::optional<std::size_t> ColumnOf(std::string_view token) const;
  const std::vector<std::string>& vocabulary() const { return vocabulary_; }
  const std::vector<double>& idf() const { return idf_; }
  std::size_t document_count() const { return document_count_; }
  std::size_t dimension() const { return vocabulary_.size(); }

 private:
  std::vector<std::string> vocabulary_;
  std::vector<double> idf_;
  std::size_t document_count_ = 0;
  std::unordered_map<std::string, std::size_t> column_;
};

inline TfIdfModel FitTfIdf(std::span<const std::vector<std::string>> corpus) {
  return TfIdfModel::Fit(corpus);
}

inline SparseVector TransformTfIdf(const TfIdfModel& model,
                                   std::span<const std::string> tokens) {
  return model.Transform(tokens);
}

}  // namespace mftk

#endif  // MFTK_TFIDF_H_
