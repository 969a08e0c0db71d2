#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hrpb/eval/dataset.hpp"
#include "hrpb/eval/optimizer.hpp"

namespace hrpb::eval {

// Hyperparameters for linear softmax training and cross-validation.
// Defaults are the senteval regime. learning_rate of 0 is legal and
// performs no updates.
struct TrainConfig {
  OptimizerKind optimizer = OptimizerKind::rmsprop;
  double learning_rate = 1e-3;
  double l2 = 0.0;
  std::size_t batch_size = 128;
  std::size_t epochs = 2;
  // Early-stopping patience inside cross_validate: consecutive epochs
  // without held-out accuracy improvement tolerated before a fold stops.
  std::size_t tenacity = 3;
  std::size_t folds = 5;
  std::uint64_t seed = 0;

  // rmsprop, batch 128, tenacity 3, 2 epochs, 5 folds.
  static TrainConfig senteval();
  // amsgrad, batch 128, 500 epochs; tenacity set so no fold stops early.
  static TrainConfig seeg();

  void validate() const;
};

// Softmax regression parameters, row-major by feature: weight of feature d
// for class c sits at weights[d * classes + c].
struct LinearModel {
  std::size_t dim = 0;
  std::size_t classes = 0;
  std::vector<double> weights;
  std::vector<double> bias;

  static LinearModel zeros(std::size_t dim, std::size_t classes);

  friend bool operator==(const LinearModel&, const LinearModel&) = default;
};

struct Gradient {
  std::vector<double> weights;
  std::vector<double> bias;
};

std::vector<double> logits(const LinearModel& model, std::span<const float> x);

// Argmax of the logits; ties go to the lowest class index.
std::int32_t predict(const LinearModel& model, std::span<const float> x);

// Mean cross-entropy over the given rows plus (l2/2) * ||weights||^2.
// The bias is not regularized.
double loss(const LinearModel& model, const Dataset& data,
            std::span<const std::uint32_t> rows, double l2);

// Analytic gradient of the same objective.
Gradient gradient_of_loss(const LinearModel& model, const Dataset& data,
                          std::span<const std::uint32_t> rows, double l2);

double accuracy(const LinearModel& model, const Dataset& data,
                std::span<const std::uint32_t> rows);

// Minibatch training from zero initialization: each epoch reshuffles the
// rows with the seeded generator and walks them in contiguous batches.
// Runs exactly cfg.epochs epochs (early stopping lives in cross_validate);
// throws TrainingDivergedError when an epoch ends with a non-finite loss.
LinearModel train(const Dataset& data, std::span<const std::uint32_t> rows,
                  const TrainConfig& cfg);
LinearModel train(const Dataset& data, const TrainConfig& cfg);

struct CrossValidationResult {
  std::vector<double> fold_accuracies;
  double mean_accuracy = 0.0;
  // One entry per fold whose training split lacks a class; training still
  // proceeds.
  std::vector<std::string> warnings;
};

// k-fold cross-validation: rows are shuffled once with the seeded
// generator, folds are contiguous slices of the shuffled order. Each fold
// trains on the complement and reports its best held-out accuracy across
// epochs, stopping early once tenacity is exhausted.
CrossValidationResult cross_validate(const Dataset& data,
                                     const TrainConfig& cfg);

}  // namespace hrpb::eval
