#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "astvec/node_kind.hpp"

namespace astvec {

/// An ordered tree of node kinds. Identifier spellings, literal values and
/// operator lexemes are not kept; only kind and shape.
struct AstNode {
  NodeKind kind = NodeKind::Root;
  std::vector<AstNode> children;

  AstNode() = default;
  explicit AstNode(NodeKind k) : kind(k) {}
  AstNode(NodeKind k, std::vector<AstNode> kids) : kind(k), children(std::move(kids)) {}

  [[nodiscard]] bool is_leaf() const noexcept { return children.empty(); }

  friend bool operator==(const AstNode&, const AstNode&) = default;
};

/// Number of leaf descendants; a leaf counts itself.
std::size_t leaf_count(const AstNode& node);

/// Total number of nodes in the tree, the root included.
std::size_t node_count(const AstNode& node);

/// Parses an AST interchange document: {"kind": <name>, "children": [...]}.
/// Throws FormatError on malformed JSON, missing fields or unknown kinds; the
/// message carries the offending name and its JSON-pointer position.
AstNode load_ast(std::string_view text);

/// Canonical compact serialization, {"kind":"X","children":[...]} with no
/// whitespace. Equal trees give equal bytes.
std::string dump_ast(const AstNode& node);

/// A corpus unit for classification.
struct LabeledProgram {
  AstNode ast;
  std::string label;
  std::string source_id;

  friend bool operator==(const LabeledProgram&, const LabeledProgram&) = default;
};

/// One JSON object per line: {"label":..,"source_id":..,"ast":{...}}.
std::vector<LabeledProgram> parse_corpus(std::string_view text);
std::string dump_corpus(std::span<const LabeledProgram> corpus);

std::vector<LabeledProgram> read_corpus(const std::filesystem::path& path);
void write_corpus(const std::filesystem::path& path, std::span<const LabeledProgram> corpus);

/// Sorted distinct labels occurring in the corpus.
std::vector<std::string> label_set(std::span<const LabeledProgram> corpus);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace astvec
