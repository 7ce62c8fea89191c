#include "mftk/linear_model.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "mftk/error.h"
#include "mftk/metrics.h"
#include "mftk/random.h"

namespace mftk {
namespace {

// log(1 + exp(-m)) without overflow.
double LogisticLoss(double m) {
  return m > 0.0 ? std::log1p(std::exp(-m)) : -m + std::log1p(std::exp(m));
}

// d/dm of the loss.
double LossDerivative(LossKind loss, double m) {
  if (loss == LossKind::kLogistic) return -Sigmoid(-m);
  return m < 1.0 ? -1.0 : 0.0;
}

double LossValue(LossKind loss, double m) {
  if (loss == LossKind::kLogistic) return LogisticLoss(m);
  return std::max(0.0, 1.0 - m);
}

double InfNorm(std::span<const double> v, double extra) {
  double m = std::abs(extra);
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

void CheckLabels(std::span<const int> labels, std::size_t rows) {
  if (labels.size() != rows) {
    throw Error(ErrorCode::kDimensionMismatch, "labels and feature rows differ in count");
  }
  bool pos = false;
  bool neg = false;
  for (int y : labels) {
    if (y == 1) {
      pos = true;
    } else if (y == 0) {
      neg = true;
    } else {
      throw Error(ErrorCode::kInvalidArgument, "labels must be 0/1");
    }
  }
  if (!pos || !neg) {
    throw Error(ErrorCode::kDegenerateLabels, "training needs both classes");
  }
}

}  // namespace

std::string_view LossKindName(LossKind kind) {
  return kind == LossKind::kLogistic ? "logistic" : "hinge";
}

std::optional<LossKind> ParseLossKind(std::string_view name) {
  if (name == "logistic") return LossKind::kLogistic;
  if (name == "hinge" || name == "svm") return LossKind::kHinge;
  return std::nullopt;
}

double Sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double LinearClassifier::Decision(const SparseVector& x) const {
  if (x.dimension != weights.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "input has dimension " + std::to_string(x.dimension) + ", model has " +
                    std::to_string(weights.size()));
  }
  double z = bias;
  for (std::size_t k = 0; k < x.nnz(); ++k) z += x.values[k] * weights[x.indices[k]];
  return z;
}

double LinearClassifier::Decision(std::span<const double> x) const {
  if (x.size() != weights.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "input has dimension " + std::to_string(x.size()) + ", model has " +
                    std::to_string(weights.size()));
  }
  double z = bias;
  for (std::size_t j = 0; j < x.size(); ++j) z += x[j] * weights[j];
  return z;
}

double PredictProba(const LinearClassifier& model, const SparseVector& x) {
  return Sigmoid(model.Decision(x));
}

double PredictProba(const LinearClassifier& model, std::span<const double> x) {
  return Sigmoid(model.Decision(x));
}

LinearObjective::LinearObjective(const FeatureMatrix& features,
                                 std::span<const int> labels, LossKind loss, double C)
    : features_(features), labels_(labels), loss_(loss), C_(C) {}

double LinearObjective::Value(std::span<const double> w, double b) const {
  double reg = 0.0;
  for (double x : w) reg += x * x;
  double data = 0.0;
  for (std::size_t i = 0; i < features_.rows(); ++i) {
    const double y = labels_[i] == 1 ? 1.0 : -1.0;
    data += LossValue(loss_, y * (features_.Dot(i, w) + b));
  }
  return 0.5 * reg + C_ * data;
}

void LinearObjective::Gradient(std::span<const double> w, double b,
                               std::span<double> grad_w, double& grad_b) const {
  std::copy(w.begin(), w.end(), grad_w.begin());
  grad_b = 0.0;
  for (std::size_t i = 0; i < features_.rows(); ++i) {
    const double y = labels_[i] == 1 ? 1.0 : -1.0;
    const double m = y * (features_.Dot(i, w) + b);
    const double coef = C_ * LossDerivative(loss_, m) * y;
    if (coef == 0.0) continue;
    const auto idx = features_.RowIndices(i);
    const auto val = features_.RowValues(i);
    for (std::size_t k = 0; k < idx.size(); ++k) grad_w[idx[k]] += coef * val[k];
    grad_b += coef;
  }
}

LinearClassifier TrainLinear(const FeatureMatrix& features, std::span<const int> labels,
                             LossKind loss, double C, std::uint64_t /*seed*/,
                             const TrainOptions& options, TrainingTrace* trace) {
  if (!(C > 0.0) || !std::isfinite(C)) {
    throw Error(ErrorCode::kInvalidArgument, "C must be positive and finite");
  }
  CheckLabels(labels, features.rows());
  if (!features.AllFinite()) {
    throw Error(ErrorCode::kNonFiniteFeature, "features contain NaN or infinity");
  }

  const std::size_t dim = features.cols();
  const LinearObjective objective(features, labels, loss, C);
  std::vector<double> w(dim, 0.0);
  double b = 0.0;
  std::vector<double> grad(dim);
  double grad_b = 0.0;
  std::vector<double> trial(dim);

  constexpr double kArmijo = 1e-4;
  constexpr double kMinStep = 1e-30;
  double f = objective.Value(w, b);
  double step = 1.0;
  TrainingTrace local;
  local.objective.push_back(f);

  int it = 0;
  for (; it < options.max_iterations; ++it) {
    objective.Gradient(w, b, grad, grad_b);
    if (InfNorm(grad, grad_b) < options.gradient_tolerance) {
      local.converged = true;
      break;
    }
    double g2 = grad_b * grad_b;
    for (double g : grad) g2 += g * g;

    bool accepted = false;
    double f_trial = f;
    double b_trial = b;
    while (step >= kMinStep) {
      for (std::size_t j = 0; j < dim; ++j) trial[j] = w[j] - step * grad[j];
      b_trial = b - step * grad_b;
      f_trial = objective.Value(trial, b_trial);
      if (f_trial <= f - kArmijo * step * g2) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // no representable decrease left
    w.swap(trial);
    b = b_trial;
    f = f_trial;
    local.objective.push_back(f);
    step *= 2.0;
  }
  local.iterations = it;
  if (trace != nullptr) *trace = std::move(local);

  return LinearClassifier{std::move(w), b, loss, C};
}

std::vector<double> DefaultCGrid() {
  std::vector<double> grid;
  for (int e = -7; e <= 7; ++e) grid.push_back(std::stod("1e" + std::to_string(e)));
  return grid;
}

CvGridResult CrossValidateC(const FeatureMatrix& features, std::span<const int> labels,
                            std::span<const double> grid, LossKind loss, int folds,
                            std::uint64_t seed, const TrainOptions& options) {
  if (grid.empty()) throw Error(ErrorCode::kInvalidArgument, "empty C grid");
  if (folds < 2) throw Error(ErrorCode::kInvalidArgument, "need at least two folds");
  if (labels.size() != features.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "labels and feature rows differ in count");
  }
  std::vector<std::size_t> pos;
  std::vector<std::size_t> neg;
  for (std::size_t i = 0; i < labels.size(); ++i) (labels[i] == 1 ? pos : neg).push_back(i);
  const auto k = static_cast<std::size_t>(folds);
  if (pos.size() < k || neg.size() < k) {
    throw Error(ErrorCode::kInsufficientClassCounts,
                std::to_string(pos.size()) + " positives and " + std::to_string(neg.size()) +
                    " negatives for " + std::to_string(folds) + " folds");
  }
  Rng rng(seed);
  rng.Shuffle(std::span<std::size_t>(pos));
  rng.Shuffle(std::span<std::size_t>(neg));
  std::vector<std::size_t> fold_of(labels.size());
  for (std::size_t i = 0; i < pos.size(); ++i) fold_of[pos[i]] = i % k;
  for (std::size_t i = 0; i < neg.size(); ++i) fold_of[neg[i]] = i % k;

  CvGridResult result;
  result.grid.assign(grid.begin(), grid.end());
  result.folds = folds;
  result.seed = seed;

  // Fold splits do not depend on C.
  struct Fold {
    FeatureMatrix train_x;
    std::vector<int> train_y;
    FeatureMatrix valid_x;
    std::vector<int> valid_y;
  };
  std::vector<Fold> splits;
  for (std::size_t f = 0; f < k; ++f) {
    std::vector<std::size_t> train_rows;
    std::vector<std::size_t> valid_rows;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      (fold_of[i] == f ? valid_rows : train_rows).push_back(i);
    }
    Fold fold;
    fold.train_x = features.SelectRows(train_rows);
    fold.valid_x = features.SelectRows(valid_rows);
    for (auto r : train_rows) fold.train_y.push_back(labels[r]);
    for (auto r : valid_rows) fold.valid_y.push_back(labels[r]);
    splits.push_back(std::move(fold));
  }

  for (double C : grid) {
    double total = 0.0;
    for (const auto& fold : splits) {
      const auto model = TrainLinear(fold.train_x, fold.train_y, loss, C, seed, options);
      std::vector<double> scores;
      scores.reserve(fold.valid_y.size());
      for (std::size_t r = 0; r < fold.valid_x.rows(); ++r) {
        scores.push_back(model.bias + fold.valid_x.Dot(r, model.weights));
      }
      total += Auc(scores, fold.valid_y);
    }
    result.mean_auc.push_back(total / static_cast<double>(k));
  }

  // Ascending C order with strict improvement keeps the smaller C on ties.
  std::vector<std::size_t> order(grid.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return grid[a] < grid[b]; });
  std::size_t best = order.front();
  for (std::size_t i : order) {
    if (result.mean_auc[i] > result.mean_auc[best]) best = i;
  }
  result.chosen_C = grid[best];
  return result;
}

}  // namespace mftk
