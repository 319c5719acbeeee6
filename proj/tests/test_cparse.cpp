#include <doctest.h>

#include <fstream>
#include <sstream>

#include "astvec/ast.hpp"
#include "astvec/error.hpp"
#include "astvec/lexer.hpp"
#include "astvec/parser.hpp"
#include "support.hpp"

using namespace astvec;
using namespace astvec::cparse;

namespace {

AstNode node(NodeKind k, std::vector<AstNode> kids = {}) { return AstNode(k, std::move(kids)); }

std::string without_space(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\n' && c != '\t' && c != '\r') out += c;
  return out;
}

}  // namespace

TEST_CASE("tokenize basics") {
  CHECK(tokenize("").empty());
  CHECK(tokenize("  \n\t ").empty());
  const auto t = tokenize("int x;");
  REQUIRE(t.size() == 3);
  CHECK(t[0] == Token{TokenCategory::keyword, "int", 1, 1});
  CHECK(t[1] == Token{TokenCategory::identifier, "x", 1, 5});
  CHECK(t[2] == Token{TokenCategory::punctuation, ";", 1, 6});
}

TEST_CASE("tokenize positions, categories and maximal munch") {
  const auto t = tokenize("a >>= b->c\n  /* c */ x++ + 1.5e-3 'q' \"s t\" // end\n...");
  std::vector<std::string> lex;
  for (const auto& k : t) lex.push_back(k.lexeme);
  CHECK(lex == std::vector<std::string>{"a", ">>=", "b", "->", "c", "x", "++", "+", "1.5e-3",
                                        "'q'", "\"s t\"", "..."});
  CHECK(t[1].category == TokenCategory::op);
  CHECK(t[5].line == 2);
  CHECK(t[5].column == 11);
  CHECK(t[8].category == TokenCategory::constant);
  CHECK(t[10].category == TokenCategory::constant);
  CHECK(t[11].line == 3);
}

TEST_CASE("function snippet token count matches the stored hand count") {
  const std::string src = read_text_file(testing::fixture("golden/snippet.c"));
  const auto tokens = tokenize(src);
  std::ifstream in(testing::fixture("golden/snippet.tokens"));
  std::size_t expected = 0;
  in >> expected;
  CHECK(tokens.size() == expected);
  std::string joined;
  for (const auto& t : tokens) joined += t.lexeme;
  CHECK(joined == without_space(src));
}

TEST_CASE("lexical errors carry positions") {
  auto pos = [](std::string_view src) {
    try {
      tokenize(src);
    } catch (const LexError& e) {
      return std::pair{e.line(), e.column()};
    }
    return std::pair{0, 0};
  };
  CHECK(pos("int a;\n  \"abc") == std::pair{2, 3});
  CHECK(pos("x /* y") == std::pair{1, 3});
  CHECK(pos("int $;") == std::pair{1, 5});
  CHECK(pos("\n#define X 1") == std::pair{2, 1});
  CHECK(pos("'a") == std::pair{1, 1});
}

TEST_CASE("function snippet parses to the documented shape") {
  const AstNode ast = parse_file(testing::fixture("golden/snippet.c"));
  const AstNode type_decl = node(NodeKind::TypeDecl, {node(NodeKind::IdentifierType)});
  const AstNode expected = node(
      NodeKind::Root,
      {node(NodeKind::FuncDef,
            {node(NodeKind::Decl,
                  {node(NodeKind::FuncDecl,
                        {node(NodeKind::ParamList, {node(NodeKind::Decl, {type_decl})}),
                         type_decl})}),
             node(NodeKind::Compound,
                  {node(NodeKind::Return,
                        {node(NodeKind::BinaryOp,
                              {node(NodeKind::Constant), node(NodeKind::ID)})})})})});
  CHECK(ast == expected);
}

TEST_CASE("small programs") {
  CHECK(parse_source("") == node(NodeKind::Root));
  CHECK(parse_source("int x;") ==
        node(NodeKind::Root,
             {node(NodeKind::Decl,
                   {node(NodeKind::TypeDecl, {node(NodeKind::IdentifierType)})})}));
}

TEST_CASE("binary operators follow C precedence and associativity") {
  auto expr = [](const std::string& e) {
    const AstNode root = parse_source("int f() { return " + e + "; }");
    return root.children[0].children[1].children[0].children[0];
  };
  const AstNode id = node(NodeKind::ID);
  const AstNode a_plus_bc =
      node(NodeKind::BinaryOp, {id, node(NodeKind::BinaryOp, {id, id})});
  const AstNode ab_plus_c =
      node(NodeKind::BinaryOp, {node(NodeKind::BinaryOp, {id, id}), id});
  CHECK(expr("a+b*c") == a_plus_bc);
  CHECK(expr("a*b+c") == ab_plus_c);
  CHECK(expr("a-b-c") == ab_plus_c);
  CHECK(expr("a = b = c").kind == NodeKind::Assignment);
  CHECK(expr("a = b = c").children[1].kind == NodeKind::Assignment);
  CHECK(expr("a || b && c") == a_plus_bc);
  CHECK(expr("a ? b : c ? a : b").children[2].kind == NodeKind::TernaryOp);
  CHECK(expr("(int)-a").kind == NodeKind::Cast);
  CHECK(expr("*p++").children[0].kind == NodeKind::UnaryOp);
  CHECK(expr("s.x[1]").kind == NodeKind::ArrayRef);
  CHECK(expr("f(a, b)").children[1].kind == NodeKind::ExprList);
}

TEST_CASE("parsing is deterministic") {
  const auto f = testing::fixture("golden/bubble.c");
  CHECK(dump_ast(parse_file(f)) == dump_ast(parse_file(f)));
}

TEST_CASE("golden sources parse to the stored ASTs byte for byte") {
  const auto sources = testing::files_in(testing::fixture("golden"), ".c");
  REQUIRE(sources.size() >= 21);
  for (const auto& src : sources) {
    CAPTURE(src.string());
    auto json_path = src;
    json_path.replace_extension(".ast.json");
    const std::string expected = read_text_file(json_path);
    CHECK(dump_ast(parse_file(src)) + "\n" == expected);
  }
}

TEST_CASE("every bundled corpus file parses") {
  const auto files = testing::files_in(testing::source_dir() / "data" / "corpus", ".c");
  REQUIRE(files.size() >= 200);
  for (const auto& f : files) {
    CAPTURE(f.string());
    CHECK_NOTHROW(parse_file(f));
  }
}

TEST_CASE("invalid sources fail at the recorded positions") {
  std::ifstream in(testing::fixture("invalid/positions.txt"));
  std::string name;
  int line = 0, column = 0, checked = 0;
  while (in >> name >> line >> column) {
    CAPTURE(name);
    try {
      parse_file(testing::fixture("invalid/" + name));
      FAIL("expected an error");
    } catch (const SourceError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == column);
      CHECK(std::string(e.what()).rfind(std::to_string(line) + ":" + std::to_string(column) + ":", 0) == 0);
    }
    ++checked;
  }
  CHECK(checked == 12);
}

TEST_CASE("parse errors name what was expected") {
  try {
    parse_source("int main() { return 1 }");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 23);
    CHECK_FALSE(e.expected().empty());
  }
}

TEST_CASE("unsupported constructs are rejected") {
  CHECK_THROWS_AS(parse_source("int f(int, ...);"), ParseError);
  CHECK_THROWS_AS(parse_source("struct s { int a : 3; };"), ParseError);
  CHECK_THROWS_AS(parse_source("int a[2] = { [0] = 1 };"), ParseError);
  CHECK_THROWS_AS(parse_source("int f() { else; }"), ParseError);
}

TEST_CASE("a missing file is an I/O error") {
  CHECK_THROWS_AS(parse_file("/no/such/file.c"), IoError);
}
