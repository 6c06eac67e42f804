#include "msd/dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "msd/errors.hpp"
#include "msd/simd/kernels.hpp"

namespace msd {
namespace {

void require_same_support(const Categorical& p, const Categorical& q,
                          const char* op) {
  if (p.support_size() != q.support_size()) {
    throw DimensionError(std::string(op) + ": support sizes differ (" +
                         std::to_string(p.support_size()) + " vs " +
                         std::to_string(q.support_size()) + ")");
  }
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result *= base;
  }
  return result;
}

// log sum_s exp(alpha * lp[s] + (1 - alpha) * lq[s]) over the common support.
double log_chernoff_coefficient(std::span<const double> lp,
                                std::span<const double> lq, double alpha) {
  double peak = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < lp.size(); ++i) {
    peak = std::max(peak, alpha * lp[i] + (1.0 - alpha) * lq[i]);
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < lp.size(); ++i) {
    acc += std::exp(alpha * lp[i] + (1.0 - alpha) * lq[i] - peak);
  }
  return peak + std::log(acc);
}

}  // namespace

Categorical::Categorical(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw DomainError("probs: distribution needs at least one support element");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    const double v = probs_[i];
    if (!std::isfinite(v) || v < 0.0) {
      throw DomainError("probs[" + std::to_string(i) +
                        "]: probability must be finite and >= 0, got " +
                        std::to_string(v));
    }
    total += v;
  }
  if (std::fabs(total - 1.0) > kProbabilitySumTolerance) {
    throw DomainError("probs: probabilities sum to " + std::to_string(total) +
                      ", expected 1");
  }
  if (total != 1.0) {
    for (double& v : probs_) v /= total;
  }
}

Categorical Categorical::bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("bernoulli: p must lie in [0, 1]");
  }
  return Categorical({1.0 - p, p});
}

Categorical Categorical::uniform(std::size_t support_size) {
  if (support_size == 0) throw DomainError("uniform: support_size must be >= 1");
  return Categorical(
      std::vector<double>(support_size, 1.0 / static_cast<double>(support_size)));
}

Categorical Categorical::from_weights(std::vector<double> weights) {
  if (weights.empty()) {
    throw DomainError("weights: distribution needs at least one support element");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!std::isfinite(weights[i]) || weights[i] < 0.0) {
      throw DomainError("weights[" + std::to_string(i) +
                        "]: weight must be finite and >= 0");
    }
    total += weights[i];
  }
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw DomainError("weights: total weight must be positive and finite");
  }
  for (double& w : weights) w /= total;
  return Categorical(Normalized{}, std::move(weights));
}

ProductSpec::ProductSpec(Categorical base_dist, std::size_t samples)
    : base(std::move(base_dist)), n(samples) {
  if (n == 0) throw DomainError("product: n must be >= 1");
}

std::uint64_t ProductSpec::outcome_count() const noexcept {
  return saturating_pow(base.support_size(), n);
}

bool ProductSpec::within_budget(std::uint64_t budget) const noexcept {
  return outcome_count() <= budget;
}

double tv_distance(const Categorical& p, const Categorical& q) {
  require_same_support(p, q, "tv_distance");
  const double tv = 0.5 * simd::abs_diff_sum(p.probs(), q.probs());
  return std::clamp(tv, 0.0, 1.0);
}

ChernoffResult chernoff(const Categorical& p, const Categorical& q) {
  require_same_support(p, q, "chernoff_information");
  if (p == q) return {0.0, 0.5, false};

  // 0^alpha * x = 0 on (0, 1): only the common support contributes.
  std::vector<double> lp;
  std::vector<double> lq;
  for (std::size_t s = 0; s < p.support_size(); ++s) {
    if (p[s] > 0.0 && q[s] > 0.0) {
      lp.push_back(std::log(p[s]));
      lq.push_back(std::log(q[s]));
    }
  }
  if (lp.empty()) {
    return {std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::quiet_NaN(), true};
  }

  auto objective = [&](double alpha) {
    return log_chernoff_coefficient(lp, lq, alpha);
  };

  // Golden-section search; the objective is convex in alpha.
  constexpr double kTolerance = 1e-8;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0;
  double hi = 1.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  while (hi - lo > kTolerance) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = objective(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = objective(x2);
    }
  }
  double best_alpha = 0.5 * (lo + hi);
  double best = objective(best_alpha);
  for (double edge : {0.0, 1.0}) {
    const double f = objective(edge);
    if (f < best) {
      best = f;
      best_alpha = edge;
    }
  }
  return {std::max(0.0, -best), best_alpha, false};
}

double chernoff_information(const Categorical& p, const Categorical& q) {
  return chernoff(p, q).information;
}

double product_tv_exact(const Categorical& p, const Categorical& q,
                        std::size_t n) {
  require_same_support(p, q, "product_tv_exact");
  const ProductSpec spec(p, n);
  if (!spec.within_budget()) {
    throw BudgetError("product_tv_exact: " + std::to_string(p.support_size()) +
                      "^" + std::to_string(n) +
                      " outcomes exceed the enumeration budget of " +
                      std::to_string(kEnumerationBudget) +
                      "; use the tensorized TV bounds instead");
  }
  if (p == q) return 0.0;
  if (n == 1) return tv_distance(p, q);

  const std::size_t k = p.support_size();
  // Masses of all (n-1)-tuples; the last factor is folded into the TV sum.
  std::vector<double> pm(p.probs().begin(), p.probs().end());
  std::vector<double> qm(q.probs().begin(), q.probs().end());
  for (std::size_t level = 2; level < n; ++level) {
    const std::size_t len = pm.size();
    std::vector<double> next_p(len * k);
    std::vector<double> next_q(len * k);
    for (std::size_t j = 0; j < k; ++j) {
      simd::scale(pm, p[j], std::span<double>(next_p).subspan(j * len, len));
      simd::scale(qm, q[j], std::span<double>(next_q).subspan(j * len, len));
    }
    pm = std::move(next_p);
    qm = std::move(next_q);
  }
  double l1 = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    l1 += simd::scaled_abs_diff_sum(pm, qm, p[j], q[j]);
  }
  return std::clamp(0.5 * l1, 0.0, 1.0);
}

MinErrorResult min_error_bruteforce(const Categorical& p, const Categorical& q) {
  require_same_support(p, q, "min_error_bruteforce");
  const std::size_t k = p.support_size();
  if (k > kMaxBruteforceSupport) {
    throw BudgetError("min_error_bruteforce: support size " + std::to_string(k) +
                      " exceeds the limit of " +
                      std::to_string(kMaxBruteforceSupport));
  }
  auto region_error = [&](std::uint32_t region) {
    double err = 0.0;
    for (std::size_t s = 0; s < k; ++s) {
      err += ((region >> s) & 1u) ? q[s] : p[s];
    }
    return err;
  };

  const std::uint32_t regions = std::uint32_t{1} << k;
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t region = 0; region < regions; ++region) {
    best = std::min(best, region_error(region));
  }

  std::uint32_t lr_region = 0;
  for (std::size_t s = 0; s < k; ++s) {
    if (p[s] >= q[s]) lr_region |= std::uint32_t{1} << s;
  }
  const double lr_error = region_error(lr_region);
  return {best, lr_region, lr_error, lr_error <= best + 1e-12};
}

}  // namespace msd
