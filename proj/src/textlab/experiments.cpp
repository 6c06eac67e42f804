#include "msd/textlab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "msd/bounds.hpp"
#include "msd/dist.hpp"
#include "msd/errors.hpp"
#include "msd/textlab/ngram.hpp"
#include "msd/textlab/tokenize.hpp"

namespace msd::textlab {
namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t x = seed ^ (salt * 0x9e3779b97f4a7c15ULL);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<TokenList> tokenize_all(std::span<const Document> docs,
                                    std::size_t prefix_length = 0) {
  std::vector<TokenList> out;
  out.reserve(docs.size());
  for (const auto& doc : docs) {
    TokenList tokens = tokenize(doc.text);
    if (prefix_length > 0) tokens = truncate_tokens(tokens, prefix_length);
    out.push_back(std::move(tokens));
  }
  return out;
}

// Training and test material gathered from a stratified split.
struct SplitTokens {
  std::vector<TokenList> train;
  std::vector<Label> train_labels;
  std::vector<TokenList> test;
  std::vector<Label> test_labels;
};

SplitTokens gather(const std::vector<TokenList>& human,
                   const std::vector<TokenList>& machine,
                   const StratifiedSplit& split, std::size_t prefix_length) {
  SplitTokens out;
  auto take = [&](const std::vector<TokenList>& src, const std::vector<std::size_t>& idx,
                  Label label, std::vector<TokenList>& dst, std::vector<Label>& labels) {
    for (std::size_t i : idx) {
      dst.push_back(prefix_length > 0 ? truncate_tokens(src[i], prefix_length) : src[i]);
      labels.push_back(label);
    }
  };
  take(human, split.human_train, Label::Human, out.train, out.train_labels);
  take(machine, split.machine_train, Label::Machine, out.train, out.train_labels);
  take(human, split.human_test, Label::Human, out.test, out.test_labels);
  take(machine, split.machine_test, Label::Machine, out.test, out.test_labels);
  return out;
}

double test_auroc(const LinearModel& model, const SparseMatrix& test,
                  std::span<const Label> labels) {
  std::vector<double> machine_scores;
  std::vector<double> human_scores;
  for (std::size_t i = 0; i < test.rows(); ++i) {
    const double s = model.score(test.row(i));
    (labels[i] == Label::Machine ? machine_scores : human_scores).push_back(s);
  }
  return roc_from_scores(machine_scores, human_scores).auroc;
}

LinearModel fit(const SparseMatrix& features, std::span<const Label> labels,
                const Vocabulary& vocab, const ClassifierConfig& classifier) {
  LinearModel model = train_logreg(features, labels, classifier.train).model;
  model.feature_space = classifier.space;
  model.vocab = vocab.terms();
  return model;
}

}  // namespace

CorpusTvEstimate estimate_corpus_tv(std::span<const Document> human,
                                    std::span<const Document> machine,
                                    std::size_t order) {
  if (human.empty() || machine.empty()) {
    throw DomainError("tv_between_corpora: both corpora must be nonempty");
  }
  const NGramTable h = ngram_table(human, order);
  const NGramTable m = ngram_table(machine, order);
  if (h.total() == 0 || m.total() == 0) {
    throw DomainError("tv_between_corpora: a corpus has no " + std::to_string(order) +
                      "-grams");
  }
  std::vector<std::string> keys;
  keys.reserve(h.distinct() + m.distinct());
  for (const auto& [key, c] : h.counts()) keys.push_back(key);
  for (const auto& [key, c] : m.counts()) {
    if (!h.counts().contains(key)) keys.push_back(key);
  }

  // Half-L1 between a/A and b/B is sum |a B - b A| / (2 A B); accumulating
  // the integer numerator exactly gives 0 and 1 without rounding residue.
  __extension__ using Wide = unsigned __int128;
  const Wide ht = h.total(), mt = m.total();
  Wide numerator = 0;
  std::size_t shared = 0;
  for (const auto& key : keys) {
    const auto hit = h.counts().find(key);
    const auto mit = m.counts().find(key);
    const Wide hc = hit != h.counts().end() ? hit->second : 0;
    const Wide mc = mit != m.counts().end() ? mit->second : 0;
    if (hc > 0 && mc > 0) ++shared;
    const Wide a = hc * mt, b = mc * ht;
    numerator += a > b ? a - b : b - a;
  }
  const double tv = static_cast<double>(numerator) / (2.0 * static_cast<double>(ht * mt));
  return {order,
          tv,
          static_cast<double>(shared) / static_cast<double>(keys.size()),
          keys.size(),
          h.total(),
          m.total()};
}

double tv_between_corpora(std::span<const Document> human,
                          std::span<const Document> machine, std::size_t order) {
  return estimate_corpus_tv(human, machine, order).tv;
}

std::vector<OrderAurocRow> best_auroc_by_order(std::span<const Document> human,
                                               std::span<const Document> machine,
                                               std::span<const std::size_t> orders) {
  std::vector<OrderAurocRow> rows;
  rows.reserve(orders.size());
  for (std::size_t order : orders) {
    const auto est = estimate_corpus_tv(human, machine, order);
    rows.push_back({order, est.tv, auroc_upper(est.tv), est.support_overlap});
  }
  return rows;
}

StratifiedSplit stratified_split(std::size_t n_human, std::size_t n_machine,
                                 const SplitConfig& split) {
  if (!(split.train_frac > 0.0 && split.train_frac < 1.0)) {
    throw DomainError("split: train_frac must lie in (0, 1)");
  }
  StratifiedSplit out;
  auto one_class = [&](std::size_t n, std::uint64_t salt, const char* name,
                       std::vector<std::size_t>& train, std::vector<std::size_t>& test) {
    if (n < 2) {
      throw DomainError(std::string("split: the ") + name +
                        " class needs at least 2 documents");
    }
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::mt19937_64 rng(mix(split.seed, salt));
    std::shuffle(idx.begin(), idx.end(), rng);
    auto n_train = static_cast<std::size_t>(
        std::llround(split.train_frac * static_cast<double>(n)));
    n_train = std::clamp<std::size_t>(n_train, 1, n - 1);
    train.assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n_train));
    test.assign(idx.begin() + static_cast<std::ptrdiff_t>(n_train), idx.end());
    std::sort(train.begin(), train.end());
    std::sort(test.begin(), test.end());
  };
  one_class(n_human, 1, "human", out.human_train, out.human_test);
  one_class(n_machine, 2, "machine", out.machine_train, out.machine_test);
  return out;
}

std::vector<LengthAurocRow> auroc_vs_prefix_length(
    std::span<const Document> human, std::span<const Document> machine,
    std::span<const std::size_t> lengths, const SplitConfig& split,
    const ClassifierConfig& classifier) {
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] == 0) throw DomainError("prefix lengths must be >= 1");
    if (i > 0 && lengths[i] <= lengths[i - 1]) {
      throw DomainError("prefix lengths must be strictly ascending");
    }
  }
  const auto human_tokens = tokenize_all(human);
  const auto machine_tokens = tokenize_all(machine);
  const StratifiedSplit parts = stratified_split(human.size(), machine.size(), split);

  std::vector<LengthAurocRow> rows;
  for (std::size_t length : lengths) {
    const SplitTokens data = gather(human_tokens, machine_tokens, parts, length);
    const Vocabulary vocab = Vocabulary::build(data.train, classifier.min_df);
    const SparseMatrix train = featurize(data.train, vocab, classifier.space);
    const SparseMatrix test = featurize(data.test, vocab, classifier.space);
    const LinearModel model = fit(train, data.train_labels, vocab, classifier);
    rows.push_back({length, test_auroc(model, test, data.test_labels)});
  }
  return rows;
}

std::vector<DocumentTuple> augment_labels(std::span<const Label> labels,
                                          std::size_t k, std::uint64_t seed) {
  if (k == 0) throw DomainError("pairwise_augment: k must be >= 1");
  std::vector<std::size_t> humans;
  std::vector<std::size_t> machines;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    (labels[i] == Label::Human ? humans : machines).push_back(i);
  }
  if (humans.size() < k || machines.size() < k) {
    throw DomainError("pairwise_augment: each class needs at least k = " +
                      std::to_string(k) + " documents (human " +
                      std::to_string(humans.size()) + ", machine " +
                      std::to_string(machines.size()) + ")");
  }
  std::mt19937_64 rng(mix(seed, k));
  std::vector<DocumentTuple> out;
  out.reserve(labels.size());
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto& same = labels[i] == Label::Human ? humans : machines;
    DocumentTuple tuple{{i}, labels[i]};
    if (k > 1) {
      pool.clear();
      for (std::size_t j : same) {
        if (j != i) pool.push_back(j);
      }
      // Partial Fisher-Yates: k - 1 distinct partners.
      for (std::size_t r = 0; r + 1 < k; ++r) {
        std::uniform_int_distribution<std::size_t> pick(r, pool.size() - 1);
        std::swap(pool[r], pool[pick(rng)]);
        tuple.members.push_back(pool[r]);
      }
    }
    out.push_back(std::move(tuple));
  }
  return out;
}

std::vector<DocumentTuple> pairwise_augment(std::span<const Document> docs,
                                            std::size_t k, std::uint64_t seed) {
  std::vector<Label> labels;
  labels.reserve(docs.size());
  for (const auto& doc : docs) labels.push_back(doc.label);
  return augment_labels(labels, k, seed);
}

std::vector<TupleAurocRow> auroc_vs_tuple_size(
    std::span<const Document> human, std::span<const Document> machine,
    std::span<const std::size_t> ks, const SplitConfig& split,
    const ClassifierConfig& classifier, std::size_t prefix_length) {
  const auto human_tokens = tokenize_all(human, prefix_length);
  const auto machine_tokens = tokenize_all(machine, prefix_length);
  const StratifiedSplit parts = stratified_split(human.size(), machine.size(), split);
  const SplitTokens data = gather(human_tokens, machine_tokens, parts, 0);
  const Vocabulary vocab = Vocabulary::build(data.train, classifier.min_df);
  const SparseMatrix train_docs = featurize(data.train, vocab, classifier.space);
  const SparseMatrix test_docs = featurize(data.test, vocab, classifier.space);

  std::vector<TupleAurocRow> rows;
  for (std::size_t k : ks) {
    auto groups_of = [](const std::vector<DocumentTuple>& tuples,
                        std::vector<std::vector<std::size_t>>& groups,
                        std::vector<Label>& labels) {
      for (const auto& t : tuples) {
        groups.push_back(t.members);
        labels.push_back(t.label);
      }
    };
    std::vector<std::vector<std::size_t>> train_groups;
    std::vector<std::vector<std::size_t>> test_groups;
    std::vector<Label> train_labels;
    std::vector<Label> test_labels;
    groups_of(augment_labels(data.train_labels, k, mix(split.seed, 0x7472)),
              train_groups, train_labels);
    groups_of(augment_labels(data.test_labels, k, mix(split.seed, 0x7465)),
              test_groups, test_labels);
    const SparseMatrix train = sum_rows(train_docs, train_groups);
    const SparseMatrix test = sum_rows(test_docs, test_groups);
    const LinearModel model = fit(train, train_labels, vocab, classifier);
    rows.push_back({k, test_auroc(model, test, test_labels), train.rows(), test.rows()});
  }
  return rows;
}

}  // namespace msd::textlab
