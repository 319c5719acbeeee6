#include "astvec/ast.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include <json.hpp>

#include "astvec/error.hpp"

namespace astvec {
namespace {

using nlohmann::json;

AstNode node_from_json(const json& j, const std::string& path) {
  const std::string where = path.empty() ? "/" : path;
  if (!j.is_object()) throw FormatError("AST node at " + where + " is not an object");
  auto kind_it = j.find("kind");
  if (kind_it == j.end() || !kind_it->is_string()) {
    throw FormatError("AST node at " + where + " has no string field \"kind\"");
  }
  const auto& name = kind_it->get_ref<const std::string&>();
  auto kind = kind_from_name(name);
  if (!kind) throw FormatError("unknown node kind '" + name + "' at " + where);

  auto children_it = j.find("children");
  if (children_it == j.end() || !children_it->is_array()) {
    throw FormatError("AST node '" + name + "' at " + where + " has no array field \"children\"");
  }
  AstNode node(*kind);
  node.children.reserve(children_it->size());
  for (std::size_t i = 0; i < children_it->size(); ++i) {
    node.children.push_back(
        node_from_json((*children_it)[i], path + "/children/" + std::to_string(i)));
  }
  return node;
}

void dump_into(const AstNode& node, std::string& out) {
  out += R"({"kind":")";
  out += kind_name(node.kind);
  out += R"(","children":[)";
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i) out += ',';
    dump_into(node.children[i], out);
  }
  out += "]}";
}

std::string required_string(const json& record, const char* field, std::size_t line) {
  auto it = record.find(field);
  if (it == record.end() || !it->is_string()) {
    throw FormatError("corpus line " + std::to_string(line) + ": missing string field \"" +
                      field + "\"");
  }
  return it->get<std::string>();
}

}  // namespace

std::size_t leaf_count(const AstNode& node) {
  if (node.is_leaf()) return 1;
  std::size_t total = 0;
  for (const auto& child : node.children) total += leaf_count(child);
  return total;
}

std::size_t node_count(const AstNode& node) {
  std::size_t total = 1;
  for (const auto& child : node.children) total += node_count(child);
  return total;
}

AstNode load_ast(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError("malformed AST document at byte " + std::to_string(e.byte) + ": " +
                      e.what());
  }
  return node_from_json(doc, "");
}

std::string dump_ast(const AstNode& node) {
  std::string out;
  dump_into(node, out);
  return out;
}

std::vector<LabeledProgram> parse_corpus(std::string_view text) {
  std::vector<LabeledProgram> corpus;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      throw FormatError("corpus line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!record.is_object()) {
      throw FormatError("corpus line " + std::to_string(line_no) + ": record is not an object");
    }
    LabeledProgram program;
    program.label = required_string(record, "label", line_no);
    program.source_id = required_string(record, "source_id", line_no);
    if (program.label.empty()) {
      throw FormatError("corpus line " + std::to_string(line_no) + ": empty label");
    }
    auto ast_it = record.find("ast");
    if (ast_it == record.end()) {
      throw FormatError("corpus line " + std::to_string(line_no) + ": missing field \"ast\"");
    }
    try {
      program.ast = node_from_json(*ast_it, "");
    } catch (const FormatError& e) {
      throw FormatError("corpus line " + std::to_string(line_no) + ": " + e.what());
    }
    corpus.push_back(std::move(program));
  }
  return corpus;
}

std::string dump_corpus(std::span<const LabeledProgram> corpus) {
  std::string out;
  for (const auto& program : corpus) {
    out += R"({"label":)";
    out += json(program.label).dump();
    out += R"(,"source_id":)";
    out += json(program.source_id).dump();
    out += R"(,"ast":)";
    dump_into(program.ast, out);
    out += "}\n";
  }
  return out;
}

std::vector<LabeledProgram> read_corpus(const std::filesystem::path& path) {
  return parse_corpus(read_text_file(path));
}

void write_corpus(const std::filesystem::path& path, std::span<const LabeledProgram> corpus) {
  write_text_file(path, dump_corpus(corpus));
}

std::vector<std::string> label_set(std::span<const LabeledProgram> corpus) {
  std::set<std::string> labels;
  for (const auto& program : corpus) labels.insert(program.label);
  return {labels.begin(), labels.end()};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string contents{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("error reading " + path.string());
  return contents;
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("error writing " + path.string());
}

}  // namespace astvec
