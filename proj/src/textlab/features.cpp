#include "msd/textlab/features.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_set>

#include "msd/errors.hpp"

namespace msd::textlab {

std::string_view feature_space_name(FeatureSpace space) {
  return space == FeatureSpace::Counts ? "counts" : "tfidf";
}

Vocabulary Vocabulary::build(std::span<const TokenList> training_docs,
                             std::size_t min_df) {
  std::map<std::string, std::uint32_t> df;
  for (const auto& doc : training_docs) {
    std::unordered_set<std::string_view> seen;
    for (const auto& token : doc) {
      if (seen.insert(token).second) ++df[token];
    }
  }
  Vocabulary vocab;
  vocab.n_docs_ = training_docs.size();
  for (auto& [term, count] : df) {
    if (count < min_df) continue;
    vocab.index_.emplace(term, static_cast<std::uint32_t>(vocab.terms_.size()));
    vocab.terms_.push_back(term);
    vocab.doc_freq_.push_back(count);
  }
  return vocab;
}

std::optional<std::uint32_t> Vocabulary::find(const std::string& term) const {
  const auto it = index_.find(term);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double Vocabulary::idf(std::uint32_t id) const {
  return std::log((1.0 + static_cast<double>(n_docs_)) /
                  (1.0 + static_cast<double>(doc_freq_[id]))) +
         1.0;
}

SparseRow SparseMatrix::row(std::size_t i) const {
  const std::size_t begin = row_ptr_[i];
  const std::size_t len = row_ptr_[i + 1] - begin;
  return {std::span<const std::uint32_t>(indices_).subspan(begin, len),
          std::span<const double>(values_).subspan(begin, len)};
}

void SparseMatrix::append_row(std::span<const std::uint32_t> indices,
                              std::span<const double> values) {
  if (indices.size() != values.size()) {
    throw DimensionError("sparse row: index and value counts differ");
  }
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= cols_ || (k > 0 && indices[k] <= indices[k - 1])) {
      throw DomainError("sparse row: column indices must be ascending and in range");
    }
  }
  indices_.insert(indices_.end(), indices.begin(), indices.end());
  values_.insert(values_.end(), values.begin(), values.end());
  row_ptr_.push_back(indices_.size());
}

std::vector<double> SparseMatrix::dense_row(std::size_t i) const {
  std::vector<double> out(cols_, 0.0);
  const SparseRow r = row(i);
  for (std::size_t k = 0; k < r.indices.size(); ++k) out[r.indices[k]] = r.values[k];
  return out;
}

SparseMatrix featurize(std::span<const TokenList> docs, const Vocabulary& vocab,
                       FeatureSpace space) {
  if (vocab.empty()) throw DomainError("featurize: vocabulary is empty");
  SparseMatrix out(vocab.size());
  std::map<std::uint32_t, double> tf;
  std::vector<std::uint32_t> idx;
  std::vector<double> val;
  for (const auto& doc : docs) {
    tf.clear();
    for (const auto& token : doc) {
      if (const auto id = vocab.find(token)) tf[*id] += 1.0;
    }
    idx.clear();
    val.clear();
    for (const auto& [id, count] : tf) {
      idx.push_back(id);
      val.push_back(space == FeatureSpace::TfIdf ? count * vocab.idf(id) : count);
    }
    if (space == FeatureSpace::TfIdf && !val.empty()) {
      double norm = 0.0;
      for (double v : val) norm += v * v;
      norm = std::sqrt(norm);
      for (double& v : val) v /= norm;
    }
    out.append_row(idx, val);
  }
  return out;
}

SparseMatrix sum_rows(const SparseMatrix& features,
                      std::span<const std::vector<std::size_t>> groups) {
  SparseMatrix out(features.cols());
  std::map<std::uint32_t, double> acc;
  std::vector<std::uint32_t> idx;
  std::vector<double> val;
  for (const auto& group : groups) {
    acc.clear();
    for (std::size_t r : group) {
      if (r >= features.rows()) throw DimensionError("sum_rows: row index out of range");
      const SparseRow row = features.row(r);
      for (std::size_t k = 0; k < row.indices.size(); ++k) {
        acc[row.indices[k]] += row.values[k];
      }
    }
    idx.clear();
    val.clear();
    for (const auto& [id, v] : acc) {
      idx.push_back(id);
      val.push_back(v);
    }
    out.append_row(idx, val);
  }
  return out;
}

}  // namespace msd::textlab
