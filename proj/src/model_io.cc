#include "mftk/model_io.h"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "mftk/error.h"

namespace mftk {
namespace {

using json = nlohmann::json;

constexpr const char* kFormatName = "mftk-linear";

[[noreturn]] void Bad(const std::string& msg) {
  throw Error(ErrorCode::kSchemaViolation, "model file: " + msg);
}

}  // namespace

double TrainedModel::Predict(const TokenizedDoc& tdoc) const {
  if (!tfidf) {
    throw Error(ErrorCode::kInvalidArgument,
                "model was trained on external features; text input is not supported");
  }
  const auto tokens = FilterTokens(tdoc, stopwords);
  return PredictProba(classifier, tfidf->Transform(tokens));
}

double TrainedModel::Predict(std::span<const double> dense) const {
  return PredictProba(classifier, dense);
}

void SaveModel(const TrainedModel& model, std::ostream& out) {
  json j;
  j["format"] = kFormatName;
  j["version"] = kModelFormatVersion;
  j["toolkit_version"] = MFTK_VERSION;
  j["foundation"] = model.foundation ? json(FoundationName(*model.foundation)) : json(nullptr);
  j["seed"] = model.seed;
  if (model.tfidf) {
    j["features"] = "tfidf";
    j["vocabulary"] = model.tfidf->vocabulary();
    j["idf"] = model.tfidf->idf();
    j["document_count"] = model.tfidf->document_count();
    std::vector<std::string> sorted(model.stopwords.begin(), model.stopwords.end());
    std::sort(sorted.begin(), sorted.end());
    j["stopwords"] = sorted;
  } else {
    j["features"] = "dense";
  }
  j["loss"] = LossKindName(model.classifier.loss);
  j["C"] = model.classifier.C;
  j["bias"] = model.classifier.bias;
  j["weights"] = model.classifier.weights;
  if (model.cv) {
    j["cv"] = {{"grid", model.cv->grid},
               {"mean_auc", model.cv->mean_auc},
               {"chosen_C", model.cv->chosen_C},
               {"folds", model.cv->folds},
               {"seed", model.cv->seed}};
  }
  out << j.dump(1) << '\n';
}

TrainedModel LoadModel(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    Bad(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (j.value("format", "") != kFormatName) Bad("not an mftk linear model");
    const int version = j.at("version").get<int>();
    if (version != kModelFormatVersion) Bad("unsupported version " + std::to_string(version));

    TrainedModel m;
    if (!j.at("foundation").is_null()) {
      m.foundation = ParseFoundation(j.at("foundation").get<std::string>());
      if (!m.foundation) Bad("unknown foundation");
    }
    m.seed = j.value("seed", std::uint64_t{0});
    const auto features = j.at("features").get<std::string>();
    if (features == "tfidf") {
      m.tfidf.emplace(j.at("vocabulary").get<std::vector<std::string>>(),
                      j.at("idf").get<std::vector<double>>(),
                      j.at("document_count").get<std::size_t>());
      const auto words = j.at("stopwords").get<std::vector<std::string>>();
      m.stopwords = StopwordSet(words.begin(), words.end());
    } else if (features != "dense") {
      Bad("unknown feature kind '" + features + "'");
    }
    const auto loss = ParseLossKind(j.at("loss").get<std::string>());
    if (!loss) Bad("unknown loss");
    m.classifier.loss = *loss;
    m.classifier.C = j.at("C").get<double>();
    m.classifier.bias = j.at("bias").get<double>();
    m.classifier.weights = j.at("weights").get<std::vector<double>>();
    if (!(m.classifier.C > 0.0)) Bad("C must be positive");
    if (!std::isfinite(m.classifier.bias)) Bad("non-finite bias");
    for (double w : m.classifier.weights) {
      if (!std::isfinite(w)) Bad("non-finite weight");
    }
    if (m.tfidf && m.tfidf->dimension() != m.classifier.weights.size()) {
      Bad("weights and vocabulary differ in length");
    }
    if (const auto it = j.find("cv"); it != j.end()) {
      CvGridResult cv;
      cv.grid = it->at("grid").get<std::vector<double>>();
      cv.mean_auc = it->at("mean_auc").get<std::vector<double>>();
      cv.chosen_C = it->at("chosen_C").get<double>();
      cv.folds = it->at("folds").get<int>();
      cv.seed = it->at("seed").get<std::uint64_t>();
      m.cv = std::move(cv);
    }
    return m;
  } catch (const json::exception& e) {
    Bad(e.what());
  }
}

TrainedModel LoadModelFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kFileNotFound, "cannot open '" + path + "'");
  return LoadModel(in);
}

}  // namespace mftk
