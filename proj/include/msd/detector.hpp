#pragma once

// Likelihood-ratio detector over sets of samples and empirical ROC/AUROC.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "msd/dist.hpp"

namespace msd {

/// Index into a Categorical's support.
using Symbol = std::uint32_t;

enum class Label { Machine, Human };

std::string_view label_name(Label label);

struct Verdict {
  Label label;
  double llr;  // nats
  std::size_t n_used;
};

struct LlrEvaluation {
  /// sum_i ln m(s_i) - ln h(s_i); +/-infinity when any sample is impossible
  /// under exactly one model.
  double llr;
  std::size_t n_used;
  /// Samples with zero mass under both models; they carry no evidence.
  std::size_t n_skipped;
};

/// Throws DimensionError on out-of-support samples or model size mismatch,
/// DomainError when no usable sample remains or when the samples are
/// impossible under both models jointly.
LlrEvaluation evaluate_llr(const Categorical& m, const Categorical& h,
                           std::span<const Symbol> samples);

double log_likelihood_ratio(const Categorical& m, const Categorical& h,
                            std::span<const Symbol> samples);

/// Machine iff llr >= threshold; ties go to Machine.
Verdict classify(double llr, double threshold = 0.0, std::size_t n_used = 1);

/// Per-symbol log ratios for repeated scoring of samples drawn from m or h.
class LlrTable {
 public:
  LlrTable(const Categorical& m, const Categorical& h);

  std::span<const double> values() const noexcept { return values_; }

  /// Sum of per-symbol ratios. Samples must be in range and have positive
  /// mass under at least one model (always true for draws from m or h).
  double score(std::span<const Symbol> samples) const;

 private:
  std::vector<double> values_;
};

struct RocPoint {
  double fpr;
  double tpr;
};

struct RocCurve {
  /// Ascending in fpr, from (0, 0) to (1, 1); one point per distinct score.
  std::vector<RocPoint> points;
  /// Tie-aware Mann-Whitney statistic: P(a > b) + P(a = b) / 2.
  double auroc;
  /// Trapezoidal area under `points`; agrees with auroc to 1e-9.
  double auroc_trapezoid;
};

/// Empirical ROC of a score where larger means "more machine-like".
/// Each threshold t declares Machine for scores >= t.
RocCurve roc_from_scores(std::span<const double> machine_scores,
                         std::span<const double> human_scores);

/// Tie-aware Mann-Whitney AUROC without building the curve.
double mann_whitney_auroc(std::span<const double> machine_scores,
                          std::span<const double> human_scores);

/// Exact AUROC of the n-sample likelihood-ratio score, by enumerating the
/// count vectors of n draws (the score depends on counts only). Ties are
/// determined on the canonical per-symbol sum. Throws BudgetError when the
/// number of count vectors exceeds kEnumerationBudget.
double exact_lr_auroc(const Categorical& m, const Categorical& h,
                      std::size_t n);

}  // namespace msd
