#include "msd/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "msd/errors.hpp"

namespace msd {
namespace {

void require_tv(double tv, const char* op) {
  if (!(tv >= 0.0 && tv <= 1.0)) {
    throw DomainError(std::string(op) + ": tv must lie in [0, 1], got " +
                      std::to_string(tv));
  }
}

void require_delta(double delta) {
  if (!(delta > 0.0)) throw DomainError("delta must be > 0");
  if (!(delta <= 1.0)) throw DomainError("delta must be <= 1");
}

void require_epsilon(double epsilon) {
  if (!(epsilon >= 0.5)) throw DomainError("epsilon must be >= 0.5");
  if (!(epsilon < 1.0)) throw DomainError("epsilon must be < 1");
}

std::uint64_t checked_ceil(double value) {
  const double c = std::ceil(value);
  if (!std::isfinite(c) ||
      c >= static_cast<double>(std::numeric_limits<std::uint64_t>::max())) {
    throw DomainError("sample complexity exceeds the representable range");
  }
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(c));
}

}  // namespace

DependenceSpec::DependenceSpec(std::vector<DependenceBlock> blocks)
    : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw DomainError("dependence: blocks must be nonempty");
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    const auto& b = blocks_[j];
    if (b.count < 1) {
      throw DomainError("dependence: blocks[" + std::to_string(j) +
                        "].c must be >= 1");
    }
    if (!(b.rho >= 0.0 && b.rho <= 1.0)) {
      throw DomainError("dependence: blocks[" + std::to_string(j) +
                        "].rho must lie in [0, 1]");
    }
    total_ += b.count;
    association_ += static_cast<double>(b.count - 1) * b.rho;
  }
}

DependenceSpec DependenceSpec::iid(std::size_t n) {
  if (n == 0) throw DomainError("dependence: n must be >= 1");
  return DependenceSpec(std::vector<DependenceBlock>(n, {1, 0.0}));
}

DependenceSpec DependenceSpec::tiled_to(std::size_t n) const {
  if (n == 0) throw DomainError("dependence: n must be >= 1");
  std::vector<DependenceBlock> out;
  std::size_t covered = 0;
  for (std::size_t j = 0; covered < n; j = (j + 1) % blocks_.size()) {
    const std::size_t take = std::min(blocks_[j].count, n - covered);
    out.push_back({take, blocks_[j].rho});
    covered += take;
  }
  return DependenceSpec(std::move(out));
}

std::vector<RocBoundPoint> roc_upper_curve(double tv,
                                           std::span<const double> fpr_grid) {
  require_tv(tv, "roc_upper_curve");
  std::vector<RocBoundPoint> out;
  out.reserve(fpr_grid.size());
  double previous = 0.0;
  for (std::size_t i = 0; i < fpr_grid.size(); ++i) {
    const double f = fpr_grid[i];
    if (!(f >= 0.0 && f <= 1.0)) {
      throw DomainError("roc_upper_curve: fpr_grid[" + std::to_string(i) +
                        "] outside [0, 1]");
    }
    if (i > 0 && f < previous) {
      throw DomainError("roc_upper_curve: fpr_grid must be ascending");
    }
    previous = f;
    out.push_back({f, std::min(f + tv, 1.0)});
  }
  return out;
}

std::vector<double> uniform_fpr_grid(std::size_t points) {
  if (points < 2) throw DomainError("fpr grid needs at least 2 points");
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return grid;
}

double auroc_upper(double tv) {
  require_tv(tv, "auroc_upper");
  return 0.5 + tv - 0.5 * tv * tv;
}

double tv_tensor_lower(std::size_t n, double delta) {
  if (!(delta > 0.0)) throw DomainError("tv_tensor_lower: delta must be > 0");
  if (!(delta <= 1.0)) throw DomainError("tv_tensor_lower: delta must be <= 1");
  if (n == 0) throw DomainError("tv_tensor_lower: n must be >= 1");
  const double tail = 2.0 * std::exp(-static_cast<double>(n) * delta * delta / 2.0);
  return std::max(0.0, 1.0 - tail);
}

double tv_tensor_chernoff(std::size_t n, double chernoff) {
  if (!(chernoff >= 0.0)) {
    throw DomainError("tv_tensor_chernoff: chernoff must be >= 0");
  }
  if (n == 0) throw DomainError("tv_tensor_chernoff: n must be >= 1");
  if (std::isinf(chernoff)) return 1.0;
  return -std::expm1(-static_cast<double>(n) * chernoff);
}

std::uint64_t sample_complexity_iid(double delta, double epsilon) {
  require_delta(delta);
  require_epsilon(epsilon);
  return checked_ceil(std::log(2.0 / (1.0 - epsilon)) / (delta * delta));
}

NonIidSampleComplexity sample_complexity_noniid(double delta, double epsilon,
                                                const DependenceSpec& dep) {
  require_delta(delta);
  require_epsilon(epsilon);
  const double a = dep.association();
  const double g = std::log(8.0 / (1.0 - epsilon));
  const double d2 = delta * delta;
  const double bound = g / (2.0 * d2) + 2.0 * a / delta +
                       std::sqrt(g * g + 8.0 * a * delta * g) / (2.0 * d2);
  const std::uint64_t n = checked_ceil(bound);
  return {n, a, delta > a / static_cast<double>(n)};
}

std::vector<BoundCurvePoint> auroc_vs_n_curve(
    double delta, std::span<const std::size_t> n_values) {
  require_delta(delta);
  std::vector<BoundCurvePoint> out;
  out.reserve(n_values.size());
  for (std::size_t n : n_values) {
    if (n == 0) throw DomainError("auroc_vs_n_curve: n must be >= 1");
    const double tv = n == 1 ? delta : std::max(delta, tv_tensor_lower(n, delta));
    out.push_back({n, tv, auroc_upper(tv)});
  }
  return out;
}

}  // namespace msd
