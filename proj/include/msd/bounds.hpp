#pragma once

// Closed-form detection limits: ROC/AUROC ceilings as a function of TV,
// lower bounds on the TV of product distributions, and the number of samples
// a likelihood-ratio detector needs to reach a target AUROC.
//
// Natural logarithms throughout. Sample counts are ceilings of the real
// valued bounds.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace msd {

struct DependenceBlock {
  std::size_t count;  // samples in the block, >= 1
  double rho;         // association strength in [0, 1]
};

/// Partition of a sample sequence into mutually independent blocks whose
/// members are associated with strength rho (rho = 0 is the IID case).
class DependenceSpec {
 public:
  explicit DependenceSpec(std::vector<DependenceBlock> blocks);

  /// n IID samples as n singleton blocks.
  static DependenceSpec iid(std::size_t n);

  std::span<const DependenceBlock> blocks() const noexcept { return blocks_; }
  std::size_t total_samples() const noexcept { return total_; }
  /// sum_j (c_j - 1) * rho_j
  double association() const noexcept { return association_; }

  /// Repeats the block pattern until exactly n samples are covered; the
  /// final block is truncated and keeps its rho.
  DependenceSpec tiled_to(std::size_t n) const;

 private:
  std::vector<DependenceBlock> blocks_;
  std::size_t total_ = 0;
  double association_ = 0.0;
};

struct BoundCurvePoint {
  std::size_t n;
  double tv_lower;
  double auroc_upper;
};

struct RocBoundPoint {
  double fpr;
  double tpr_upper;
};

/// tpr_upper(f) = min(f + tv, 1) on an ascending grid in [0, 1].
std::vector<RocBoundPoint> roc_upper_curve(double tv,
                                           std::span<const double> fpr_grid);

/// Evenly spaced grid of `points` FPR values from 0 to 1 inclusive.
std::vector<double> uniform_fpr_grid(std::size_t points);

/// 1/2 + tv - tv^2/2: the largest AUROC any detector can reach.
double auroc_upper(double tv);

/// max(0, 1 - 2 exp(-n delta^2 / 2)), a lower bound on TV(m^n, h^n) when
/// TV(m, h) = delta.
double tv_tensor_lower(std::size_t n, double delta);

/// 1 - exp(-n * chernoff): leading-order TV growth with the o(n) term
/// dropped. An infinite `chernoff` (disjoint supports) gives 1.
double tv_tensor_chernoff(std::size_t n, double chernoff);

/// ceil(ln(2 / (1 - epsilon)) / delta^2).
std::uint64_t sample_complexity_iid(double delta, double epsilon);

struct NonIidSampleComplexity {
  std::uint64_t n;
  double association;
  /// delta > association / n, required by the concentration inequality the
  /// closed form rests on. False means the returned n is not certified.
  bool concentration_precondition_met;
};

/// Smallest n with delta^2 n^2 - n (4 a delta + g) + 4 a^2 >= 0 on the upper
/// root, where g = ln(8 / (1 - epsilon)) and a = dep.association():
///   n = g / (2 delta^2) + 2 a / delta + sqrt(g^2 + 8 a delta g) / (2 delta^2)
NonIidSampleComplexity sample_complexity_noniid(double delta, double epsilon,
                                                const DependenceSpec& dep);

/// AUROC ceiling against n for a single-sample TV of delta. The n = 1 point
/// uses tv = delta itself; larger n use the tighter of delta (TV never
/// shrinks under tensorization) and tv_tensor_lower(n, delta).
std::vector<BoundCurvePoint> auroc_vs_n_curve(
    double delta, std::span<const std::size_t> n_values);

}  // namespace msd
