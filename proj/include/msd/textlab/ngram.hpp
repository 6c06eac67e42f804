#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "msd/textlab/corpus.hpp"
#include "msd/textlab/tokenize.hpp"

namespace msd::textlab {

inline constexpr std::size_t kMinNGramOrder = 1;
inline constexpr std::size_t kMaxNGramOrder = 6;

/// Counts of order-k token windows. Keys join the tokens with U+001F, which
/// tokenize() never emits inside a token.
class NGramTable {
 public:
  explicit NGramTable(std::size_t order);

  std::size_t order() const noexcept { return order_; }
  std::uint64_t total() const noexcept { return total_; }
  std::size_t distinct() const noexcept { return counts_.size(); }

  /// Slides a window over one document; shorter documents add nothing.
  void add_document(std::span<const std::string> tokens);

  std::uint64_t count(std::span<const std::string> gram) const;

  const std::unordered_map<std::string, std::uint64_t>& counts() const noexcept {
    return counts_;
  }

  /// Entries sorted by key.
  std::vector<std::pair<std::vector<std::string>, std::uint64_t>> sorted_entries() const;

  static std::string join_key(std::span<const std::string> gram);
  static std::vector<std::string> split_key(std::string_view key);

 private:
  std::size_t order_;
  std::uint64_t total_ = 0;
  std::unordered_map<std::string, std::uint64_t> counts_;
};

NGramTable ngram_table(std::span<const TokenList> docs, std::size_t order);
NGramTable ngram_table(std::span<const Document> docs, std::size_t order);

}  // namespace msd::textlab
