#ifndef MFTK_LINEAR_MODEL_H_
#define MFTK_LINEAR_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mftk/features.h"

namespace mftk {

enum class LossKind { kLogistic, kHinge };

std::string_view LossKindName(LossKind kind);
std::optional<LossKind> ParseLossKind(std::string_view name);

struct LinearClassifier {
  std::vector<double> weights;
  double bias = 0.0;
  LossKind loss = LossKind::kLogistic;
  double C = 1.0;  // inverse L2 regularization strength

  double Decision(const SparseVector& x) const;
  double Decision(std::span<const double> x) const;
};

// sigmoid(w.x + b). For hinge models the value only ranks inputs; it is not
// a calibrated probability. Throws kDimensionMismatch.
double PredictProba(const LinearClassifier& model, const SparseVector& x);
double PredictProba(const LinearClassifier& model, std::span<const double> x);

double Sigmoid(double z);

// (1/2)||w||^2 + C * sum_i loss(y_i (w.x_i + b)), y in {-1, +1}. The bias is
// not regularized. For the hinge loss the subgradient at margin exactly 1 is 0.
class LinearObjective {
 public:
  // `labels` are 0/1 and must outlive the objective, as must `features`.
  LinearObjective(const FeatureMatrix& features, std::span<const int> labels,
                  LossKind loss, double C);

  double Value(std::span<const double> w, double b) const;
  // Writes the gradient into grad_w (size = features.cols()) and grad_b.
  void Gradient(std::span<const double> w, double b, std::span<double> grad_w,
                double& grad_b) const;

 private:
  const FeatureMatrix& features_;
  std::span<const int> labels_;
  LossKind loss_;
  double C_;
};

struct TrainOptions {
  double gradient_tolerance = 1e-6;  // infinity norm
  int max_iterations = 10000;
};

struct TrainingTrace {
  std::vector<double> objective;  // value after each accepted step, first = start
  int iterations = 0;
  bool converged = false;
};

// Full-batch gradient descent with backtracking (Armijo) line search from
// w = 0, b = 0. The solver is deterministic; `seed` is accepted for
// interface symmetry with the cross-validation routine and has no effect.
// Throws kDegenerateLabels, kNonFiniteFeature, kInvalidArgument (C <= 0).
LinearClassifier TrainLinear(const FeatureMatrix& features, std::span<const int> labels,
                             LossKind loss, double C, std::uint64_t seed = 0,
                             const TrainOptions& options = {},
                             TrainingTrace* trace = nullptr);

struct CvGridResult {
  std::vector<double> grid;
  std::vector<double> mean_auc;  // parallel to grid
  double chosen_C = 0.0;
  int folds = 0;
  std::uint64_t seed = 0;
};

// {1e-7, 1e-6, ..., 1e7}.
std::vector<double> DefaultCGrid();

// Stratified k-fold CV (seeded shuffle within each class, round-robin fold
// assignment). chosen_C maximizes mean validation AUC; ties go to the smaller
// C. Throws kInsufficientClassCounts when either class has fewer than `folds`
// examples.
CvGridResult CrossValidateC(const FeatureMatrix& features, std::span<const int> labels,
                            std::span<const double> grid, LossKind loss, int folds,
                            std::uint64_t seed, const TrainOptions& options = {});

}  // namespace mftk

#endif  // MFTK_LINEAR_MODEL_H_
