#include "msd/textlab/ngram.hpp"

#include <algorithm>

#include "msd/errors.hpp"

namespace msd::textlab {
namespace {
constexpr char kSeparator = '\x1f';
}

NGramTable::NGramTable(std::size_t order) : order_(order) {
  if (order < kMinNGramOrder || order > kMaxNGramOrder) {
    throw DomainError("n-gram order must lie in [1, 6], got " + std::to_string(order));
  }
}

void NGramTable::add_document(std::span<const std::string> tokens) {
  if (tokens.size() < order_) return;
  for (std::size_t i = 0; i + order_ <= tokens.size(); ++i) {
    ++counts_[join_key(tokens.subspan(i, order_))];
    ++total_;
  }
}

std::uint64_t NGramTable::count(std::span<const std::string> gram) const {
  if (gram.size() != order_) return 0;
  const auto it = counts_.find(join_key(gram));
  return it == counts_.end() ? 0 : it->second;
}

std::vector<std::pair<std::vector<std::string>, std::uint64_t>>
NGramTable::sorted_entries() const {
  std::vector<std::pair<std::string, std::uint64_t>> flat(counts_.begin(), counts_.end());
  std::sort(flat.begin(), flat.end());
  std::vector<std::pair<std::vector<std::string>, std::uint64_t>> out;
  out.reserve(flat.size());
  for (auto& [key, c] : flat) out.emplace_back(split_key(key), c);
  return out;
}

std::string NGramTable::join_key(std::span<const std::string> gram) {
  std::string key;
  for (std::size_t i = 0; i < gram.size(); ++i) {
    if (i > 0) key.push_back(kSeparator);
    key += gram[i];
  }
  return key;
}

std::vector<std::string> NGramTable::split_key(std::string_view key) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = key.find(kSeparator, start);
    out.emplace_back(key.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

NGramTable ngram_table(std::span<const TokenList> docs, std::size_t order) {
  NGramTable table(order);
  for (const auto& tokens : docs) table.add_document(tokens);
  return table;
}

NGramTable ngram_table(std::span<const Document> docs, std::size_t order) {
  NGramTable table(order);
  for (const auto& doc : docs) table.add_document(tokenize(doc.text));
  return table;
}

}  // namespace msd::textlab
