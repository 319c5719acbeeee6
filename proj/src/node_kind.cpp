#include "astvec/node_kind.hpp"

#include <algorithm>

namespace astvec {
namespace {

constexpr std::array<NodeKindInfo, kVocabularySize> kTable{{
    {NodeKind::ID, "ID"},
    {NodeKind::Constant, "Constant"},
    {NodeKind::BinaryOp, "BinaryOp"},
    {NodeKind::UnaryOp, "UnaryOp"},
    {NodeKind::ArrayRef, "ArrayRef"},
    {NodeKind::Assignment, "Assignment"},
    {NodeKind::StructRef, "StructRef"},
    {NodeKind::ExprList, "ExprList"},
    {NodeKind::FuncCall, "FuncCall"},
    {NodeKind::Cast, "Cast"},
    {NodeKind::TernaryOp, "TernaryOp"},
    {NodeKind::CompoundLiteral, "CompoundLiteral"},
    {NodeKind::If, "If"},
    {NodeKind::For, "For"},
    {NodeKind::While, "While"},
    {NodeKind::DoWhile, "DoWhile"},
    {NodeKind::Break, "Break"},
    {NodeKind::Continue, "Continue"},
    {NodeKind::Case, "Case"},
    {NodeKind::Default, "Default"},
    {NodeKind::Switch, "Switch"},
    {NodeKind::Goto, "Goto"},
    {NodeKind::Label, "Label"},
    {NodeKind::Return, "Return"},
    {NodeKind::Compound, "Compound"},
    {NodeKind::EmptyStatement, "EmptyStatement"},
    {NodeKind::FuncDef, "FuncDef"},
    {NodeKind::Decl, "Decl"},
    {NodeKind::DeclList, "DeclList"},
    {NodeKind::TypeDecl, "TypeDecl"},
    {NodeKind::FuncDecl, "FuncDecl"},
    {NodeKind::ArrayDecl, "ArrayDecl"},
    {NodeKind::PtrDecl, "PtrDecl"},
    {NodeKind::ParamList, "ParamList"},
    {NodeKind::IdentifierType, "IdentifierType"},
    {NodeKind::Typedef, "Typedef"},
    {NodeKind::Typename, "Typename"},
    {NodeKind::Struct, "Struct"},
    {NodeKind::Union, "Union"},
    {NodeKind::Enum, "Enum"},
    {NodeKind::Enumerator, "Enumerator"},
    {NodeKind::EnumeratorList, "EnumeratorList"},
    {NodeKind::InitList, "InitList"},
    {NodeKind::Root, "Root"},
}};

constexpr bool table_is_ordered() {
  for (std::size_t i = 0; i < kTable.size(); ++i) {
    if (kTable[i].id() != i) return false;
  }
  return true;
}
static_assert(table_is_ordered());

}  // namespace

std::span<const NodeKindInfo, kVocabularySize> vocabulary() noexcept {
  return kTable;
}

std::string_view kind_name(NodeKind kind) noexcept {
  return kTable[kind_id(kind)].name;
}

std::optional<NodeKind> kind_from_name(std::string_view name) noexcept {
  auto it = std::find_if(kTable.begin(), kTable.end(),
                         [&](const NodeKindInfo& info) { return info.name == name; });
  if (it == kTable.end()) return std::nullopt;
  return it->kind;
}

std::uint64_t vocabulary_fingerprint() noexcept {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto mix = [&hash](unsigned char c) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  };
  for (const auto& info : kTable) {
    for (char c : info.name) mix(static_cast<unsigned char>(c));
    mix('\n');
  }
  return hash;
}

}  // namespace astvec
