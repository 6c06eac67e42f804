#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "msd/textlab/tokenize.hpp"

namespace msd::textlab {

enum class FeatureSpace { Counts, TfIdf };

std::string_view feature_space_name(FeatureSpace space);

/// Terms kept from a training split, sorted, with their document frequency.
class Vocabulary {
 public:
  /// Keeps terms occurring in at least `min_df` training documents.
  static Vocabulary build(std::span<const TokenList> training_docs,
                          std::size_t min_df = 2);

  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const std::vector<std::string>& terms() const noexcept { return terms_; }
  std::optional<std::uint32_t> find(const std::string& term) const;
  std::uint32_t doc_freq(std::uint32_t id) const { return doc_freq_[id]; }
  std::size_t n_docs() const noexcept { return n_docs_; }

  /// ln((1 + N) / (1 + df)) + 1
  double idf(std::uint32_t id) const;

 private:
  std::vector<std::string> terms_;
  std::vector<std::uint32_t> doc_freq_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::size_t n_docs_ = 0;
};

struct SparseRow {
  std::span<const std::uint32_t> indices;
  std::span<const double> values;
};

/// Compressed sparse rows; column indices ascending within a row.
class SparseMatrix {
 public:
  explicit SparseMatrix(std::size_t cols) : cols_(cols) {}

  std::size_t rows() const noexcept { return row_ptr_.size() - 1; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const noexcept { return values_.size(); }

  SparseRow row(std::size_t i) const;

  /// Appends a row; entries must be sorted by column and in range.
  void append_row(std::span<const std::uint32_t> indices,
                  std::span<const double> values);

  /// Dense copy of one row (tests and small problems).
  std::vector<double> dense_row(std::size_t i) const;

 private:
  std::size_t cols_;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::uint32_t> indices_;
  std::vector<double> values_;
};

/// Bag-of-words features over `vocab`; out-of-vocabulary tokens are ignored.
/// Counts: raw term frequency. TfIdf: tf * idf, then each nonzero row is
/// scaled to unit L2 norm. Throws DomainError on an empty vocabulary.
SparseMatrix featurize(std::span<const TokenList> docs, const Vocabulary& vocab,
                       FeatureSpace space);

/// Row g of the result is the sum of the rows of `features` listed in
/// groups[g].
SparseMatrix sum_rows(const SparseMatrix& features,
                      std::span<const std::vector<std::size_t>> groups);

}  // namespace msd::textlab
