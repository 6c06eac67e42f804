#pragma once

// Exact machinery for finite discrete distributions: total variation,
// Chernoff information, TV of product distributions by enumeration, and a
// brute-force minimum-error oracle over all deterministic detectors.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace msd {

/// Largest number of outcomes any exhaustive enumeration may visit.
inline constexpr std::uint64_t kEnumerationBudget = 10'000'000;

/// Absolute tolerance on the probability sum at construction.
inline constexpr double kProbabilitySumTolerance = 1e-12;

/// Probability mass function over the index set {0, ..., support_size-1}.
///
/// Construction rejects negative or non-finite masses and sums further than
/// kProbabilitySumTolerance from 1; sums within tolerance are renormalized.
class Categorical {
 public:
  explicit Categorical(std::vector<double> probs);

  static Categorical bernoulli(double p);
  static Categorical uniform(std::size_t support_size);
  /// Normalizes nonnegative weights with a positive finite total.
  static Categorical from_weights(std::vector<double> weights);

  std::size_t support_size() const noexcept { return probs_.size(); }
  std::span<const double> probs() const noexcept { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }

  friend bool operator==(const Categorical&, const Categorical&) = default;

 private:
  struct Normalized {};
  Categorical(Normalized, std::vector<double> probs) : probs_(std::move(probs)) {}

  std::vector<double> probs_;
};

/// n-fold product of a base distribution.
struct ProductSpec {
  Categorical base;
  std::size_t n;

  ProductSpec(Categorical base_dist, std::size_t samples);

  /// support_size^n, saturating at UINT64_MAX.
  std::uint64_t outcome_count() const noexcept;
  bool within_budget(std::uint64_t budget = kEnumerationBudget) const noexcept;
};

double tv_distance(const Categorical& p, const Categorical& q);

struct ChernoffResult {
  /// -log min_alpha sum p^alpha q^(1-alpha); +infinity when disjoint.
  double information;
  /// Minimizing exponent in [0, 1]; NaN when disjoint.
  double alpha;
  /// Supports do not intersect: every detector can be made perfect.
  bool disjoint;
};

ChernoffResult chernoff(const Categorical& p, const Categorical& q);

/// Convenience wrapper returning only the information value.
double chernoff_information(const Categorical& p, const Categorical& q);

/// TV(p^{⊗n}, q^{⊗n}) by enumerating every n-tuple. Throws BudgetError when
/// support_size^n exceeds kEnumerationBudget.
double product_tv_exact(const Categorical& p, const Categorical& q,
                        std::size_t n);

/// Largest support accepted by min_error_bruteforce.
inline constexpr std::size_t kMaxBruteforceSupport = 20;

struct MinErrorResult {
  /// min over acceptance regions A of q(A) + p(A^c).
  double min_error;
  /// Likelihood-ratio region {s : p(s) >= q(s)}; bit s set when s is in it.
  std::uint32_t lr_region;
  /// q(A*) + p(A*^c) for the likelihood-ratio region.
  double lr_region_error;
  /// lr_region_error attains min_error (to 1e-12).
  bool lr_region_optimal;
};

/// Exhaustive minimum of type-I plus type-II error over all 2^k deterministic
/// detectors, where A is the region declared "p". Throws BudgetError when
/// support_size > kMaxBruteforceSupport.
MinErrorResult min_error_bruteforce(const Categorical& p, const Categorical& q);

}  // namespace msd
