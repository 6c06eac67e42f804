#include "msd/textlab/logreg.hpp"

#include <algorithm>
#include <cmath>

#include "msd/errors.hpp"
#include "msd/simd/kernels.hpp"

namespace msd::textlab {
namespace {

double softplus(double z) {
  return std::max(z, 0.0) + std::log1p(std::exp(-std::fabs(z)));
}

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double target(Label label) { return label == Label::Machine ? 1.0 : 0.0; }

void require_shapes(std::span<const double> weights, const SparseMatrix& features,
                    std::span<const Label> labels) {
  if (weights.size() != features.cols()) {
    throw DimensionError("logistic: weight count does not match feature columns");
  }
  if (labels.size() != features.rows()) {
    throw DimensionError("logistic: label count does not match feature rows");
  }
  if (labels.empty()) throw DomainError("logistic: no examples");
}

double row_score(std::span<const double> weights, double bias, const SparseRow& row) {
  return bias + simd::gather_dot(weights, row.indices, row.values);
}

// Loss at (weights, bias) and, when grad_weights is nonempty, its gradient.
double loss_and_gradient(std::span<const double> weights, double bias,
                         const SparseMatrix& features, std::span<const Label> labels,
                         double l2, std::span<double> grad_weights, double* grad_bias) {
  const double inv_n = 1.0 / static_cast<double>(labels.size());
  const bool want_grad = !grad_weights.empty();
  if (want_grad) std::fill(grad_weights.begin(), grad_weights.end(), 0.0);
  double loss = 0.0;
  double gb = 0.0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const SparseRow row = features.row(i);
    const double z = row_score(weights, bias, row);
    const double y = target(labels[i]);
    loss += softplus(z) - y * z;
    if (want_grad) {
      const double r = (sigmoid(z) - y) * inv_n;
      gb += r;
      for (std::size_t k = 0; k < row.indices.size(); ++k) {
        grad_weights[row.indices[k]] += r * row.values[k];
      }
    }
  }
  loss *= inv_n;
  loss += 0.5 * l2 * simd::dot(weights, weights);
  if (want_grad) {
    simd::axpy(l2, weights, grad_weights);
    *grad_bias = gb;
  }
  return loss;
}

}  // namespace

double LinearModel::score(const SparseRow& row) const {
  return row_score(weights, bias, row);
}

double logistic_loss(std::span<const double> weights, double bias,
                     const SparseMatrix& features, std::span<const Label> labels,
                     double l2) {
  require_shapes(weights, features, labels);
  return loss_and_gradient(weights, bias, features, labels, l2, {}, nullptr);
}

void logistic_gradient(std::span<const double> weights, double bias,
                       const SparseMatrix& features, std::span<const Label> labels,
                       double l2, std::span<double> grad_weights, double& grad_bias) {
  require_shapes(weights, features, labels);
  if (grad_weights.size() != weights.size()) {
    throw DimensionError("logistic_gradient: gradient buffer has the wrong size");
  }
  loss_and_gradient(weights, bias, features, labels, l2, grad_weights, &grad_bias);
}

TrainResult train_logreg(const SparseMatrix& features, std::span<const Label> labels,
                         const TrainConfig& config) {
  if (labels.size() != features.rows()) {
    throw DimensionError("train_logreg: label count does not match feature rows");
  }
  if (labels.size() < 2) throw DomainError("train_logreg: need at least 2 examples");
  const bool has_machine = std::find(labels.begin(), labels.end(), Label::Machine) != labels.end();
  const bool has_human = std::find(labels.begin(), labels.end(), Label::Human) != labels.end();
  if (!has_machine || !has_human) {
    throw DomainError("train_logreg: training data must contain both classes");
  }
  if (!(config.learning_rate > 0.0)) throw DomainError("train_logreg: learning_rate must be > 0");
  if (!(config.l2 >= 0.0)) throw DomainError("train_logreg: l2 must be >= 0");

  TrainResult result;
  auto& model = result.model;
  model.weights.assign(features.cols(), 0.0);
  std::vector<double> grad(features.cols());
  double grad_bias = 0.0;
  result.loss_history.reserve(config.epochs + 1);
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    const double loss = loss_and_gradient(model.weights, model.bias, features, labels,
                                          config.l2, grad, &grad_bias);
    result.loss_history.push_back(loss);
    simd::axpy(-config.learning_rate, grad, model.weights);
    model.bias -= config.learning_rate * grad_bias;
  }
  result.final_loss = loss_and_gradient(model.weights, model.bias, features, labels,
                                        config.l2, {}, nullptr);
  result.loss_history.push_back(result.final_loss);
  result.loss_nonincreasing =
      std::adjacent_find(result.loss_history.begin(), result.loss_history.end(),
                         [](double a, double b) { return b > a; }) == result.loss_history.end();
  return result;
}

}  // namespace msd::textlab
