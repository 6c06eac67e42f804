#include "msd/simulator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>
#include <thread>

#include "msd/errors.hpp"

namespace msd {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void validate(const ExperimentConfig& config) {
  if (config.m.support_size() != config.h.support_size()) {
    throw DimensionError("experiment: m and h have different support sizes");
  }
  if (config.n_values.empty()) throw DomainError("experiment: n_values must be nonempty");
  for (std::size_t i = 0; i < config.n_values.size(); ++i) {
    if (config.n_values[i] == 0) throw DomainError("experiment: n_values must be >= 1");
    if (i > 0 && config.n_values[i] <= config.n_values[i - 1]) {
      throw DomainError("experiment: n_values must be strictly ascending");
    }
  }
  if (config.trials_per_class == 0) {
    throw DomainError("experiment: trials_per_class must be >= 1");
  }
}

}  // namespace

double uniform01(RngStream& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

RngStream trial_stream(std::uint64_t seed, std::size_t n, Label cls,
                       std::size_t trial) {
  std::uint64_t key = splitmix64(seed);
  key = splitmix64(key ^ static_cast<std::uint64_t>(n));
  key = splitmix64(key ^ (cls == Label::Machine ? 1ULL : 2ULL));
  key = splitmix64(key ^ static_cast<std::uint64_t>(trial));
  return RngStream(key);
}

CategoricalSampler::CategoricalSampler(const Categorical& dist) {
  cdf_.resize(dist.support_size());
  double acc = 0.0;
  for (std::size_t s = 0; s < dist.support_size(); ++s) {
    acc += dist[s];
    cdf_[s] = acc;
    if (dist[s] > 0.0) last_positive_ = static_cast<Symbol>(s);
  }
}

Symbol CategoricalSampler::draw(RngStream& rng) const {
  const double u = uniform01(rng);
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  // Rounding can leave cdf.back() just below 1.
  if (it == cdf_.end()) return last_positive_;
  return static_cast<Symbol>(it - cdf_.begin());
}

std::vector<Symbol> sample_iid(const Categorical& dist, std::size_t n,
                               RngStream& rng) {
  const CategoricalSampler sampler(dist);
  std::vector<Symbol> out(n);
  for (auto& s : out) s = sampler.draw(rng);
  return out;
}

namespace {

void draw_noniid_into(const CategoricalSampler& sampler,
                      const DependenceSpec& dep, RngStream& rng,
                      std::vector<Symbol>& out) {
  out.clear();
  for (const auto& block : dep.blocks()) {
    const std::size_t start = out.size();
    out.push_back(sampler.draw(rng));
    for (std::size_t i = 1; i < block.count; ++i) {
      if (block.rho > 0.0 && uniform01(rng) < block.rho) {
        const auto pick = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(i));
        out.push_back(out[start + std::min(pick, i - 1)]);
      } else {
        out.push_back(sampler.draw(rng));
      }
    }
  }
}

}  // namespace

std::vector<Symbol> sample_noniid(const Categorical& dist,
                                  const DependenceSpec& dep, RngStream& rng) {
  const CategoricalSampler sampler(dist);
  std::vector<Symbol> out;
  out.reserve(dep.total_samples());
  draw_noniid_into(sampler, dep, rng, out);
  return out;
}

double monte_carlo_slack(std::size_t trials_per_class) {
  return 3.0 * std::sqrt(1.0 / static_cast<double>(trials_per_class));
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  validate(config);
  const LlrTable table(config.m, config.h);
  const CategoricalSampler sample_m(config.m);
  const CategoricalSampler sample_h(config.h);
  const double info = chernoff_information(config.m, config.h);
  const unsigned threads = std::max(1u, config.threads);

  ExperimentResult result;
  for (std::size_t n : config.n_values) {
    const auto started = std::chrono::steady_clock::now();
    std::optional<DependenceSpec> dep;
    if (config.dependence) dep = config.dependence->tiled_to(n);

    std::vector<double> machine_scores(config.trials_per_class);
    std::vector<double> human_scores(config.trials_per_class);

    auto run_range = [&](std::size_t begin, std::size_t end) {
      std::vector<Symbol> buffer(n);
      for (std::size_t t = begin; t < end; ++t) {
        for (Label cls : {Label::Machine, Label::Human}) {
          RngStream rng = trial_stream(config.seed, n, cls, t);
          const auto& sampler = cls == Label::Machine ? sample_m : sample_h;
          if (dep) {
            draw_noniid_into(sampler, *dep, rng, buffer);
          } else {
            for (auto& s : buffer) s = sampler.draw(rng);
          }
          const double score = table.score(buffer);
          (cls == Label::Machine ? machine_scores : human_scores)[t] = score;
        }
      }
    };

    if (threads == 1) {
      run_range(0, config.trials_per_class);
    } else {
      std::vector<std::jthread> workers;
      const std::size_t chunk = (config.trials_per_class + threads - 1) / threads;
      for (unsigned w = 0; w < threads; ++w) {
        const std::size_t begin = std::min(config.trials_per_class, w * chunk);
        const std::size_t end = std::min(config.trials_per_class, begin + chunk);
        if (begin < end) workers.emplace_back(run_range, begin, end);
      }
    }

    ExperimentRow row;
    row.n = n;
    row.empirical_auroc = roc_from_scores(machine_scores, human_scores).auroc;
    if (ProductSpec(config.m, n).within_budget()) {
      row.auroc_upper_exact = auroc_upper(product_tv_exact(config.m, config.h, n));
    }
    row.auroc_upper_chernoff = auroc_upper(tv_tensor_chernoff(n, info));
    row.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    result.rows.push_back(row);
  }
  return result;
}

}  // namespace msd
