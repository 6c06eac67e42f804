#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "msd/detector.hpp"

namespace msd::textlab {

struct Document {
  std::string id;
  std::string text;
  Label label;
};

enum class ParseMode { Strict, Lenient };

struct CorpusLoadResult {
  std::vector<Document> documents;
  /// Lines rejected in lenient mode.
  std::size_t skipped_lines = 0;
};

/// Reads JSONL records {"id": string, "text": string, "label":
/// "human"|"machine"}. Blank lines are ignored. In strict mode the first bad
/// line throws ParseError carrying its line number; in lenient mode bad lines
/// are counted and skipped. Ids must be unique and texts nonempty after
/// trimming whitespace.
CorpusLoadResult load_jsonl(std::istream& in, ParseMode mode,
                            std::string_view source_name = "<stream>");

CorpusLoadResult load_jsonl_file(const std::filesystem::path& path,
                                 ParseMode mode);

/// Concatenates corpora, enforcing id uniqueness across them.
std::vector<Document> merge_corpora(std::vector<std::vector<Document>> parts);

struct LabeledSplit {
  std::vector<Document> human;
  std::vector<Document> machine;
};

LabeledSplit split_by_label(std::span<const Document> docs);

}  // namespace msd::textlab
