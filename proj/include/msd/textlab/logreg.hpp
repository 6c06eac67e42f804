#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "msd/detector.hpp"
#include "msd/textlab/features.hpp"

namespace msd::textlab {

struct TrainConfig {
  double learning_rate = 0.1;
  std::size_t epochs = 500;
  double l2 = 1e-4;
  /// Full-batch descent starting from zero weights is order independent, so
  /// the seed does not change the result; kept for reproducible configs.
  std::uint64_t seed = 0;
};

struct LinearModel {
  std::vector<double> weights;  // indexed by vocabulary id
  double bias = 0.0;
  FeatureSpace feature_space = FeatureSpace::TfIdf;
  std::vector<std::string> vocab;

  /// Log-odds of Machine.
  double score(const SparseRow& row) const;
};

struct TrainResult {
  LinearModel model;
  double final_loss;
  /// Loss before each epoch plus the loss after the last one.
  std::vector<double> loss_history;
  /// No epoch raised the loss. Guaranteed for unit-norm rows at the default
  /// learning rate; large raw counts can overshoot.
  bool loss_nonincreasing = true;
};

/// Mean logistic loss (Machine = 1) plus (l2 / 2) * |w|^2; bias unpenalized.
double logistic_loss(std::span<const double> weights, double bias,
                     const SparseMatrix& features, std::span<const Label> labels,
                     double l2);

/// Analytic gradient of logistic_loss.
void logistic_gradient(std::span<const double> weights, double bias,
                       const SparseMatrix& features,
                       std::span<const Label> labels, double l2,
                       std::span<double> grad_weights, double& grad_bias);

/// Full-batch gradient descent from zero weights. Requires at least two
/// examples covering both classes.
TrainResult train_logreg(const SparseMatrix& features,
                         std::span<const Label> labels,
                         const TrainConfig& config = {});

}  // namespace msd::textlab
