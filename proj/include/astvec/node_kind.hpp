#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace astvec {

/// AST node kinds whose vectors are learned. The order is part of the
/// on-disk format: ids index rows of the embedding table.
enum class NodeKind : std::uint8_t {
  ID,
  Constant,
  BinaryOp,
  UnaryOp,
  ArrayRef,
  Assignment,
  StructRef,
  ExprList,
  FuncCall,
  Cast,
  TernaryOp,
  CompoundLiteral,
  If,
  For,
  While,
  DoWhile,
  Break,
  Continue,
  Case,
  Default,
  Switch,
  Goto,
  Label,
  Return,
  Compound,
  EmptyStatement,
  FuncDef,
  Decl,
  DeclList,
  TypeDecl,
  FuncDecl,
  ArrayDecl,
  PtrDecl,
  ParamList,
  IdentifierType,
  Typedef,
  Typename,
  Struct,
  Union,
  Enum,
  Enumerator,
  EnumeratorList,
  InitList,
  Root,
};

inline constexpr std::size_t kVocabularySize = 44;

struct NodeKindInfo {
  NodeKind kind;
  std::string_view name;

  [[nodiscard]] constexpr std::size_t id() const noexcept {
    return static_cast<std::size_t>(kind);
  }
};

/// The closed, ordered vocabulary; element i has id i.
std::span<const NodeKindInfo, kVocabularySize> vocabulary() noexcept;

std::string_view kind_name(NodeKind kind) noexcept;

std::optional<NodeKind> kind_from_name(std::string_view name) noexcept;

constexpr std::size_t kind_id(NodeKind kind) noexcept {
  return static_cast<std::size_t>(kind);
}

/// Precondition: id < kVocabularySize.
constexpr NodeKind kind_at(std::size_t id) noexcept {
  return static_cast<NodeKind>(id);
}

/// FNV-1a over the newline-joined kind names. Stored in checkpoints so a
/// model trained against a different vocabulary is rejected on load.
std::uint64_t vocabulary_fingerprint() noexcept;

}  // namespace astvec
