#include "astvec/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "astvec/error.hpp"

namespace astvec::cparse {
namespace {

// Sorted for binary search.
constexpr std::array<std::string_view, 35> kKeywords{
    "_Bool", "auto", "break", "case", "char", "const", "continue", "default", "do",
    "double", "else", "enum", "extern", "float", "for", "goto", "if", "inline", "int",
    "long", "register", "restrict", "return", "short", "signed", "sizeof", "static",
    "struct", "switch", "typedef", "union", "unsigned", "void", "volatile", "while",
};

// Longest first so that maximal munch falls out of a linear scan.
constexpr std::array<std::string_view, 22> kMultiCharOps{
    "...", ">>=", "<<=", "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=",
    "&&",  "||",  "*=",  "/=", "%=", "+=", "-=", "&=", "^=", "|=",
};

constexpr std::string_view kSingleOps = "+-*/%<>=!~&|^?:.";
constexpr std::string_view kPunctuation = "()[]{};,";

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_trivia();
      if (at_end()) break;
      out.push_back(next_token());
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        const int line = line_, column = column_;
        advance();
        advance();
        while (!(peek() == '*' && peek(1) == '/')) {
          if (at_end()) throw LexError("unterminated comment", line, column);
          advance();
        }
        advance();
        advance();
      } else {
        break;
      }
    }
  }

  Token make(TokenCategory category, std::size_t start, int line, int column) const {
    return Token{category, std::string(src_.substr(start, pos_ - start)), line, column};
  }

  Token next_token() {
    const std::size_t start = pos_;
    const int line = line_, column = column_;
    const char c = peek();

    if (is_ident_start(c)) {
      if (c == 'L' && (peek(1) == '"' || peek(1) == '\'')) {
        advance();
        quoted(peek(), line, column);
        return make(TokenCategory::constant, start, line, column);
      }
      while (!at_end() && is_ident_char(peek())) advance();
      Token t = make(TokenCategory::identifier, start, line, column);
      if (is_keyword(t.lexeme)) t.category = TokenCategory::keyword;
      return t;
    }
    if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
      number();
      return make(TokenCategory::constant, start, line, column);
    }
    if (c == '"' || c == '\'') {
      quoted(c, line, column);
      return make(TokenCategory::constant, start, line, column);
    }
    for (auto op : kMultiCharOps) {
      if (src_.substr(pos_, op.size()) == op) {
        for (std::size_t i = 0; i < op.size(); ++i) advance();
        return make(op == "..." ? TokenCategory::punctuation : TokenCategory::op, start, line,
                    column);
      }
    }
    if (kPunctuation.find(c) != std::string_view::npos) {
      advance();
      return make(TokenCategory::punctuation, start, line, column);
    }
    if (kSingleOps.find(c) != std::string_view::npos) {
      advance();
      return make(TokenCategory::op, start, line, column);
    }
    if (c == '#') throw LexError("preprocessor directives are not supported", line, column);
    std::string shown = std::isprint(static_cast<unsigned char>(c))
                            ? std::string(1, c)
                            : "\\x" + std::to_string(static_cast<unsigned char>(c));
    throw LexError("illegal character '" + shown + "'", line, column);
  }

  // pp-number: digits, letters, '.', and a sign directly after an exponent.
  void number() {
    while (!at_end()) {
      char c = peek();
      if (is_ident_char(c) || c == '.') {
        advance();
      } else if ((c == '+' || c == '-') &&
                 (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E' || src_[pos_ - 1] == 'p' ||
                  src_[pos_ - 1] == 'P')) {
        advance();
      } else {
        break;
      }
    }
  }

  void quoted(char quote, int line, int column) {
    const char* what = quote == '"' ? "unterminated string literal"
                                    : "unterminated character constant";
    advance();
    while (true) {
      if (at_end() || peek() == '\n') throw LexError(what, line, column);
      char c = peek();
      if (c == '\\') {
        advance();
        if (at_end()) throw LexError(what, line, column);
        advance();
      } else if (c == quote) {
        advance();
        return;
      } else {
        advance();
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

std::string_view category_name(TokenCategory category) noexcept {
  switch (category) {
    case TokenCategory::keyword: return "keyword";
    case TokenCategory::identifier: return "identifier";
    case TokenCategory::constant: return "constant";
    case TokenCategory::op: return "operator";
    case TokenCategory::punctuation: return "punctuation";
  }
  return "?";
}

bool is_keyword(std::string_view word) noexcept {
  return std::binary_search(kKeywords.begin(), kKeywords.end(), word);
}

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace astvec::cparse
