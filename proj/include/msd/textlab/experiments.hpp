#pragma once

// Corpus-level experiments: n-gram TV between human and machine text, the
// AUROC ceiling it implies, and supervised detection as the evidence per
// decision grows (longer prefixes, or several documents per decision).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "msd/textlab/corpus.hpp"
#include "msd/textlab/features.hpp"
#include "msd/textlab/logreg.hpp"

namespace msd::textlab {

struct CorpusTvEstimate {
  std::size_t order;
  /// Plug-in TV between the empirical n-gram distributions.
  double tv;
  /// Fraction of the union of observed n-grams seen in both corpora.
  double support_overlap;
  std::size_t union_size;
  std::uint64_t human_total;
  std::uint64_t machine_total;
};

CorpusTvEstimate estimate_corpus_tv(std::span<const Document> human,
                                    std::span<const Document> machine,
                                    std::size_t order);

double tv_between_corpora(std::span<const Document> human,
                          std::span<const Document> machine, std::size_t order);

struct OrderAurocRow {
  std::size_t order;
  double tv;
  double auroc_upper;
  double support_overlap;
};

std::vector<OrderAurocRow> best_auroc_by_order(std::span<const Document> human,
                                               std::span<const Document> machine,
                                               std::span<const std::size_t> orders);

struct SplitConfig {
  double train_frac = 0.7;
  std::uint64_t seed = 0;
};

struct ClassifierConfig {
  FeatureSpace space = FeatureSpace::TfIdf;
  std::size_t min_df = 2;
  TrainConfig train;
};

/// Per-class shuffled train/test indices; each side keeps at least one
/// document of each class.
struct StratifiedSplit {
  std::vector<std::size_t> human_train;
  std::vector<std::size_t> human_test;
  std::vector<std::size_t> machine_train;
  std::vector<std::size_t> machine_test;
};

StratifiedSplit stratified_split(std::size_t n_human, std::size_t n_machine,
                                 const SplitConfig& split);

struct LengthAurocRow {
  std::size_t length;
  double test_auroc;
};

/// For each prefix length L: keep the first L tokens of every document,
/// build the vocabulary on the training split, train, and report the test
/// AUROC of the model scores. The split is shared by all lengths.
std::vector<LengthAurocRow> auroc_vs_prefix_length(
    std::span<const Document> human, std::span<const Document> machine,
    std::span<const std::size_t> lengths, const SplitConfig& split,
    const ClassifierConfig& classifier = {});

struct DocumentTuple {
  std::vector<std::size_t> members;  // indices into the source documents
  Label label;
};

/// One tuple per document: the document itself plus k - 1 distinct other
/// documents of the same class drawn at random. k = 1 returns the documents
/// unchanged. Throws DomainError when a class has fewer than k documents.
std::vector<DocumentTuple> pairwise_augment(std::span<const Document> docs,
                                            std::size_t k, std::uint64_t seed);

/// Same construction over bare labels.
std::vector<DocumentTuple> augment_labels(std::span<const Label> labels,
                                          std::size_t k, std::uint64_t seed);

struct TupleAurocRow {
  std::size_t k;
  double test_auroc;
  std::size_t train_tuples;
  std::size_t test_tuples;
};

/// Classifies k-tuples of same-class documents, each represented by the sum
/// of its members' feature vectors. Tuples are formed inside the train and
/// test splits separately. prefix_length = 0 keeps whole documents.
std::vector<TupleAurocRow> auroc_vs_tuple_size(
    std::span<const Document> human, std::span<const Document> machine,
    std::span<const std::size_t> ks, const SplitConfig& split,
    const ClassifierConfig& classifier = {}, std::size_t prefix_length = 0);

}  // namespace msd::textlab
