#pragma once

#include <filesystem>
#include <span>
#include <string_view>

#include "astvec/ast.hpp"
#include "astvec/lexer.hpp"

namespace astvec::cparse {

/// Builds a Root-anchored AST from tokens of the supported C subset. Node
/// kinds and child order follow the pycparser shape: Decl/TypeDecl chains
/// for declarations, Case/Default owning the statements that follow them,
/// ExprList for comma expressions and argument lists.
///
/// Throws ParseError at the first construct outside the subset or syntax
/// error; there is no recovery.
AstNode parse_program(std::span<const Token> tokens);

/// parse_program(tokenize(source)).
AstNode parse_source(std::string_view source);

/// Reads and parses a file. Throws IoError, LexError or ParseError.
AstNode parse_file(const std::filesystem::path& path);

}  // namespace astvec::cparse
