#ifndef MFTK_MODEL_IO_H_
#define MFTK_MODEL_IO_H_

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mftk/foundation.h"
#include "mftk/linear_model.h"
#include "mftk/text.h"
#include "mftk/tfidf.h"

namespace mftk {

inline constexpr int kModelFormatVersion = 1;

// A classifier together with what it needs to featurize raw text. Models
// trained on external dense features carry no tf-idf section; their inputs
// must be supplied as vectors of the recorded dimension.
struct TrainedModel {
  std::optional<Foundation> foundation;
  std::optional<TfIdfModel> tfidf;
  StopwordSet stopwords;  // used only with tfidf
  LinearClassifier classifier;
  std::optional<CvGridResult> cv;
  std::uint64_t seed = 0;

  // Probability for a tokenized document. Requires a tf-idf section.
  double Predict(const TokenizedDoc& tdoc) const;
  double Predict(std::span<const double> dense) const;
};

// JSON: {"format": "mftk-linear", "version": 1, ...}. Doubles are written in
// shortest round-trip form, so load(save(m)) reproduces every bit.
void SaveModel(const TrainedModel& model, std::ostream& out);
// Throws kSchemaViolation for unknown versions or malformed content.
TrainedModel LoadModel(std::istream& in);
TrainedModel LoadModelFile(const std::string& path);

}  // namespace mftk

#endif  // MFTK_MODEL_IO_H_
