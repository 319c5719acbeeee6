#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace astvec::cparse {

enum class TokenCategory { keyword, identifier, constant, op, punctuation };

struct Token {
  TokenCategory category;
  std::string lexeme;
  int line = 1;    ///< 1-based, first character of the lexeme
  int column = 1;  ///< 1-based, in bytes

  [[nodiscard]] bool is(TokenCategory c, std::string_view text) const {
    return category == c && lexeme == text;
  }

  friend bool operator==(const Token&, const Token&) = default;
};

std::string_view category_name(TokenCategory category) noexcept;

/// Splits C source into tokens, dropping whitespace and comments.
/// Throws LexError on an unterminated comment, string or character literal,
/// or a character outside the supported subset (including '#').
std::vector<Token> tokenize(std::string_view source);

bool is_keyword(std::string_view word) noexcept;

}  // namespace astvec::cparse
