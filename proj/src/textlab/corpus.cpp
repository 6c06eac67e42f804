#include "msd/textlab/corpus.hpp"

#include <fstream>
#include <istream>
#include <unordered_set>

#include "json.hpp"
#include "msd/errors.hpp"

namespace msd::textlab {
namespace {

bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t\r\n\f\v") == std::string_view::npos;
}

Document parse_record(const std::string& line, std::size_t line_no,
                      std::string_view source) {
  const std::string where = std::string(source) + ":" + std::to_string(line_no);
  nlohmann::json record;
  try {
    record = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(where + ": invalid JSON at byte " + std::to_string(e.byte) +
                         ": " + e.what(),
                     line_no, e.byte);
  }
  if (!record.is_object()) throw ParseError(where + ": record must be a JSON object", line_no);

  auto string_field = [&](const char* name) -> std::string {
    const auto it = record.find(name);
    if (it == record.end()) {
      throw ParseError(where + ": missing field \"" + name + "\"", line_no);
    }
    if (!it->is_string()) {
      throw ParseError(where + ": field \"" + name + "\" must be a string", line_no);
    }
    return it->get<std::string>();
  };

  Document doc;
  doc.id = string_field("id");
  doc.text = string_field("text");
  const std::string label = string_field("label");
  if (label == "human") {
    doc.label = Label::Human;
  } else if (label == "machine") {
    doc.label = Label::Machine;
  } else {
    throw ParseError(where + ": field \"label\" must be \"human\" or \"machine\", got \"" +
                         label + "\"",
                     line_no);
  }
  if (doc.id.empty()) throw ParseError(where + ": field \"id\" is empty", line_no);
  if (is_blank(doc.text)) throw ParseError(where + ": field \"text\" is empty", line_no);
  return doc;
}

}  // namespace

CorpusLoadResult load_jsonl(std::istream& in, ParseMode mode,
                            std::string_view source_name) {
  CorpusLoadResult result;
  std::unordered_set<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;
    try {
      Document doc = parse_record(line, line_no, source_name);
      if (!ids.insert(doc.id).second) {
        throw ParseError(std::string(source_name) + ":" + std::to_string(line_no) +
                             ": duplicate id \"" + doc.id + "\"",
                         line_no);
      }
      result.documents.push_back(std::move(doc));
    } catch (const ParseError&) {
      if (mode == ParseMode::Strict) throw;
      ++result.skipped_lines;
    }
  }
  return result;
}

CorpusLoadResult load_jsonl_file(const std::filesystem::path& path,
                                 ParseMode mode) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open corpus file " + path.string());
  return load_jsonl(in, mode, path.string());
}

std::vector<Document> merge_corpora(std::vector<std::vector<Document>> parts) {
  std::vector<Document> out;
  std::unordered_set<std::string> ids;
  for (auto& part : parts) {
    for (auto& doc : part) {
      if (!ids.insert(doc.id).second) {
        throw ParseError("duplicate id \"" + doc.id + "\" across corpus files");
      }
      out.push_back(std::move(doc));
    }
  }
  return out;
}

LabeledSplit split_by_label(std::span<const Document> docs) {
  LabeledSplit out;
  for (const auto& doc : docs) {
    (doc.label == Label::Human ? out.human : out.machine).push_back(doc);
  }
  return out;
}

}  // namespace msd::textlab
