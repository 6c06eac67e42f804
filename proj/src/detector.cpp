#include "msd/detector.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "msd/errors.hpp"
#include "msd/simd/kernels.hpp"

namespace msd {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_scores(std::span<const double> scores, const char* which) {
  if (scores.empty()) {
    throw DomainError(std::string("roc_from_scores: ") + which +
                      " scores must be nonempty");
  }
  for (double s : scores) {
    if (std::isnan(s)) {
      throw DomainError(std::string("roc_from_scores: ") + which +
                        " scores contain NaN");
    }
  }
}

std::vector<double> sorted_descending(std::span<const double> scores) {
  std::vector<double> out(scores.begin(), scores.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// Walks the distinct scores from the top. For each group of equal scores the
// callback receives (machine_in_group, human_in_group, machine_above,
// human_above), counts strictly above the group.
template <typename Visit>
void sweep_groups(const std::vector<double>& machine,
                  const std::vector<double>& human, Visit&& visit) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < machine.size() || j < human.size()) {
    double v;
    if (i == machine.size()) {
      v = human[j];
    } else if (j == human.size()) {
      v = machine[i];
    } else {
      v = std::max(machine[i], human[j]);
    }
    const std::size_t i0 = i;
    const std::size_t j0 = j;
    while (i < machine.size() && machine[i] == v) ++i;
    while (j < human.size() && human[j] == v) ++j;
    visit(i - i0, j - j0, i0, j0);
  }
}

}  // namespace

std::string_view label_name(Label label) {
  return label == Label::Machine ? "machine" : "human";
}

LlrEvaluation evaluate_llr(const Categorical& m, const Categorical& h,
                           std::span<const Symbol> samples) {
  if (m.support_size() != h.support_size()) {
    throw DimensionError("log_likelihood_ratio: model support sizes differ");
  }
  if (samples.empty()) {
    throw DomainError("log_likelihood_ratio: empty sample list carries no evidence");
  }
  double acc = 0.0;
  std::size_t skipped = 0;
  std::size_t machine_only = 0;
  std::size_t human_only = 0;
  for (Symbol s : samples) {
    if (s >= m.support_size()) {
      throw DimensionError("log_likelihood_ratio: sample index " +
                           std::to_string(s) + " outside support of size " +
                           std::to_string(m.support_size()));
    }
    const double pm = m[s];
    const double ph = h[s];
    if (pm > 0.0 && ph > 0.0) {
      acc += std::log(pm) - std::log(ph);
    } else if (pm > 0.0) {
      ++machine_only;
    } else if (ph > 0.0) {
      ++human_only;
    } else {
      ++skipped;
    }
  }
  const std::size_t used = samples.size() - skipped;
  if (used == 0) {
    throw DomainError("log_likelihood_ratio: every sample has zero mass under both models");
  }
  if (machine_only > 0 && human_only > 0) {
    throw DomainError("log_likelihood_ratio: samples are impossible under both models jointly");
  }
  if (machine_only > 0) acc = kInf;
  if (human_only > 0) acc = -kInf;
  return {acc, used, skipped};
}

double log_likelihood_ratio(const Categorical& m, const Categorical& h,
                            std::span<const Symbol> samples) {
  return evaluate_llr(m, h, samples).llr;
}

Verdict classify(double llr, double threshold, std::size_t n_used) {
  return {llr >= threshold ? Label::Machine : Label::Human, llr, n_used};
}

LlrTable::LlrTable(const Categorical& m, const Categorical& h) {
  if (m.support_size() != h.support_size()) {
    throw DimensionError("LlrTable: model support sizes differ");
  }
  values_.resize(m.support_size());
  for (std::size_t s = 0; s < m.support_size(); ++s) {
    const double pm = m[s];
    const double ph = h[s];
    if (pm > 0.0 && ph > 0.0) {
      values_[s] = std::log(pm) - std::log(ph);
    } else if (pm > 0.0) {
      values_[s] = kInf;
    } else if (ph > 0.0) {
      values_[s] = -kInf;
    } else {
      values_[s] = std::numeric_limits<double>::quiet_NaN();
    }
  }
}

double LlrTable::score(std::span<const Symbol> samples) const {
  return simd::gather_sum(values_, samples);
}

RocCurve roc_from_scores(std::span<const double> machine_scores,
                         std::span<const double> human_scores) {
  require_scores(machine_scores, "machine");
  require_scores(human_scores, "human");
  const auto machine = sorted_descending(machine_scores);
  const auto human = sorted_descending(human_scores);
  const double n_machine = static_cast<double>(machine.size());
  const double n_human = static_cast<double>(human.size());

  RocCurve curve;
  curve.points.push_back({0.0, 0.0});
  double wins = 0.0;
  sweep_groups(machine, human,
               [&](std::size_t mg, std::size_t hg, std::size_t m_above,
                   std::size_t h_above) {
                 const double below = n_human - static_cast<double>(h_above + hg);
                 wins += static_cast<double>(mg) * below +
                         0.5 * static_cast<double>(mg) * static_cast<double>(hg);
                 curve.points.push_back(
                     {static_cast<double>(h_above + hg) / n_human,
                      static_cast<double>(m_above + mg) / n_machine});
               });
  curve.auroc = wins / (n_machine * n_human);

  double area = 0.0;
  for (std::size_t k = 1; k < curve.points.size(); ++k) {
    const auto& a = curve.points[k - 1];
    const auto& b = curve.points[k];
    area += (b.fpr - a.fpr) * (a.tpr + b.tpr) * 0.5;
  }
  curve.auroc_trapezoid = area;
  return curve;
}

double mann_whitney_auroc(std::span<const double> machine_scores,
                          std::span<const double> human_scores) {
  require_scores(machine_scores, "machine");
  require_scores(human_scores, "human");
  const auto machine = sorted_descending(machine_scores);
  const auto human = sorted_descending(human_scores);
  const double n_human = static_cast<double>(human.size());
  double wins = 0.0;
  sweep_groups(machine, human,
               [&](std::size_t mg, std::size_t hg, std::size_t,
                   std::size_t h_above) {
                 const double below = n_human - static_cast<double>(h_above + hg);
                 wins += static_cast<double>(mg) * below +
                         0.5 * static_cast<double>(mg) * static_cast<double>(hg);
               });
  return wins / (static_cast<double>(machine.size()) * n_human);
}

double exact_lr_auroc(const Categorical& m, const Categorical& h,
                      std::size_t n) {
  if (m.support_size() != h.support_size()) {
    throw DimensionError("exact_lr_auroc: model support sizes differ");
  }
  if (n == 0) throw DomainError("exact_lr_auroc: n must be >= 1");
  const std::size_t k = m.support_size();

  // Number of count vectors: C(n + k - 1, k - 1), guarded against overflow.
  double vectors = 1.0;
  for (std::size_t i = 1; i < k; ++i) {
    vectors = vectors * static_cast<double>(n + i) / static_cast<double>(i);
  }
  if (vectors > static_cast<double>(kEnumerationBudget)) {
    throw BudgetError("exact_lr_auroc: count-vector enumeration exceeds budget");
  }

  const LlrTable table(m, h);
  const auto llr = table.values();
  std::vector<double> log_m(k);
  std::vector<double> log_h(k);
  for (std::size_t s = 0; s < k; ++s) {
    log_m[s] = m[s] > 0.0 ? std::log(m[s]) : -kInf;
    log_h[s] = h[s] > 0.0 ? std::log(h[s]) : -kInf;
  }
  const double log_n_factorial = std::lgamma(static_cast<double>(n) + 1.0);

  struct Outcome {
    double score;
    double mass_m;
    double mass_h;
  };
  std::vector<Outcome> outcomes;
  std::vector<std::size_t> counts(k, 0);

  auto emit = [&]() {
    double coef = log_n_factorial;
    double lm = 0.0;
    double lh = 0.0;
    double score = 0.0;
    bool plus_inf = false;
    bool minus_inf = false;
    for (std::size_t s = 0; s < k; ++s) {
      const std::size_t c = counts[s];
      if (c == 0) continue;
      const double cd = static_cast<double>(c);
      coef -= std::lgamma(cd + 1.0);
      lm += cd * log_m[s];
      lh += cd * log_h[s];
      if (std::isnan(llr[s])) return;  // impossible under both models
      if (llr[s] == kInf) {
        plus_inf = true;
      } else if (llr[s] == -kInf) {
        minus_inf = true;
      } else {
        score += cd * llr[s];
      }
    }
    if (plus_inf && minus_inf) return;
    if (plus_inf) score = kInf;
    if (minus_inf) score = -kInf;
    const double mass_m = std::exp(coef + lm);
    const double mass_h = std::exp(coef + lh);
    if (mass_m == 0.0 && mass_h == 0.0) return;
    outcomes.push_back({score, mass_m, mass_h});
  };

  // Enumerate compositions of n into k parts.
  auto recurse = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
    if (pos + 1 == k) {
      counts[pos] = left;
      emit();
      return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
      counts[pos] = c;
      self(self, pos + 1, left - c);
    }
  };
  recurse(recurse, 0, n);

  std::sort(outcomes.begin(), outcomes.end(),
            [](const Outcome& a, const Outcome& b) { return a.score > b.score; });
  double total_m = 0.0;
  double total_h = 0.0;
  for (const auto& o : outcomes) {
    total_m += o.mass_m;
    total_h += o.mass_h;
  }
  double wins = 0.0;
  double h_above = 0.0;
  for (std::size_t i = 0; i < outcomes.size();) {
    std::size_t j = i;
    double gm = 0.0;
    double gh = 0.0;
    while (j < outcomes.size() && outcomes[j].score == outcomes[i].score) {
      gm += outcomes[j].mass_m;
      gh += outcomes[j].mass_h;
      ++j;
    }
    wins += gm * (total_h - h_above - gh) + 0.5 * gm * gh;
    h_above += gh;
    i = j;
  }
  return wins / (total_m * total_h);
}

}  // namespace msd
