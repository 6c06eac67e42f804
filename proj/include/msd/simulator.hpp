#pragma once

// Monte Carlo check of the detection limits: empirical AUROC of the
// likelihood-ratio detector against the number of samples per account, with
// IID or block-dependent sampling.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "msd/bounds.hpp"
#include "msd/detector.hpp"
#include "msd/dist.hpp"

namespace msd {

using RngStream = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(RngStream& rng);

/// Independent stream for one trial, keyed by (seed, n, class, trial) so the
/// result does not depend on evaluation order.
RngStream trial_stream(std::uint64_t seed, std::size_t n, Label cls,
                       std::size_t trial);

/// Inverse-CDF sampler over a fixed Categorical.
class CategoricalSampler {
 public:
  explicit CategoricalSampler(const Categorical& dist);

  Symbol draw(RngStream& rng) const;
  std::size_t support_size() const noexcept { return cdf_.size(); }

 private:
  std::vector<double> cdf_;
  Symbol last_positive_ = 0;
};

std::vector<Symbol> sample_iid(const Categorical& dist, std::size_t n,
                               RngStream& rng);

/// Block-dependent draws: within each block the first sample is fresh and
/// every later one, with probability rho, copies a uniformly chosen earlier
/// sample of the same block, otherwise it is fresh. Blocks are independent.
/// This realizes E[S_i | past] = rho * mean(past) + (1 - rho) * E[S].
std::vector<Symbol> sample_noniid(const Categorical& dist,
                                  const DependenceSpec& dep, RngStream& rng);

struct ExperimentConfig {
  Categorical m;
  Categorical h;
  std::vector<std::size_t> n_values;
  std::size_t trials_per_class = 1000;
  /// Block pattern, tiled to each n (see DependenceSpec::tiled_to).
  std::optional<DependenceSpec> dependence;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct ExperimentRow {
  std::size_t n;
  double empirical_auroc;
  /// auroc_upper(product_tv_exact) when enumeration fits the budget.
  std::optional<double> auroc_upper_exact;
  /// auroc_upper(tv_tensor_chernoff(n, I_c)).
  double auroc_upper_chernoff;
  double wall_time_seconds;
};

struct ExperimentResult {
  std::vector<ExperimentRow> rows;
};

/// Throws DomainError on invalid configs (empty or non-ascending n_values,
/// zero trials) and DimensionError when m and h differ in support size.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Monte Carlo slack used when comparing empirical AUROC to a bound.
double monte_carlo_slack(std::size_t trials_per_class);

}  // namespace msd
