#include "astvec/parser.hpp"

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "astvec/error.hpp"

namespace astvec::cparse {
namespace {

constexpr std::array<std::string_view, 10> kBasicTypes{
    "void", "char", "short", "int", "long", "float", "double", "signed", "unsigned", "_Bool"};
constexpr std::array<std::string_view, 6> kStorage{"typedef", "static", "extern",
                                                   "auto",    "register", "inline"};
constexpr std::array<std::string_view, 3> kQualifiers{"const", "volatile", "restrict"};
constexpr std::array<std::string_view, 11> kAssignOps{"=",  "*=", "/=", "%=",  "+=", "-=",
                                                      "<<=", ">>=", "&=", "^=", "|="};
constexpr std::array<std::string_view, 6> kUnaryOps{"&", "*", "+", "-", "~", "!"};

template <std::size_t N>
bool one_of(const std::array<std::string_view, N>& set, std::string_view s) {
  for (auto x : set) {
    if (x == s) return true;
  }
  return false;
}

int binary_precedence(std::string_view op) {
  if (op == "||") return 1;
  if (op == "&&") return 2;
  if (op == "|") return 3;
  if (op == "^") return 4;
  if (op == "&") return 5;
  if (op == "==" || op == "!=") return 6;
  if (op == "<" || op == ">" || op == "<=" || op == ">=") return 7;
  if (op == "<<" || op == ">>") return 8;
  if (op == "+" || op == "-") return 9;
  if (op == "*" || op == "/" || op == "%") return 10;
  return 0;
}

bool is_string_literal(const Token& t) {
  return t.category == TokenCategory::constant &&
         (t.lexeme.front() == '"' || (t.lexeme.size() > 1 && t.lexeme[0] == 'L' &&
                                      t.lexeme[1] == '"'));
}

bool is_case_like(const AstNode& n) {
  return n.kind == NodeKind::Case || n.kind == NodeKind::Default;
}

AstNode leaf(NodeKind kind) { return AstNode(kind); }

AstNode node(NodeKind kind, std::vector<AstNode> children) {
  return AstNode(kind, std::move(children));
}

struct Modifier {
  enum class Kind { pointer, array, function };
  Kind kind;
  std::optional<AstNode> payload;  // array dimension or parameter list
};

struct Declarator {
  std::optional<std::string> name;
  std::vector<Modifier> modifiers;  // outermost (nearest the name) first
};

enum class DeclaratorMode { concrete, abstract, either };

struct Specifiers {
  std::optional<AstNode> type;  // IdentifierType, Struct, Union or Enum
  bool is_typedef = false;
};

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : toks_(tokens) { scopes_.emplace_back(); }

  AstNode translation_unit() {
    AstNode root(NodeKind::Root);
    while (!at_end()) {
      if (accept(";")) continue;
      for (auto& item : external_declaration()) root.children.push_back(std::move(item));
    }
    return root;
  }

 private:
  // ---- token access ----

  bool at_end(std::size_t ahead = 0) const { return pos_ + ahead >= toks_.size(); }

  const Token* peek(std::size_t ahead = 0) const {
    return at_end(ahead) ? nullptr : &toks_[pos_ + ahead];
  }

  bool at(std::string_view text, std::size_t ahead = 0) const {
    const Token* t = peek(ahead);
    return t && t->category != TokenCategory::identifier &&
           t->category != TokenCategory::constant && t->lexeme == text;
  }

  bool at_identifier(std::size_t ahead = 0) const {
    const Token* t = peek(ahead);
    return t && t->category == TokenCategory::identifier;
  }

  bool accept(std::string_view text) {
    if (!at(text)) return false;
    ++pos_;
    return true;
  }

  const Token& consume() { return toks_[pos_++]; }

  void expect(std::string_view text) {
    if (!accept(text)) fail("unexpected " + describe_current(), "'" + std::string(text) + "'");
  }

  std::string expect_identifier() {
    if (!at_identifier()) fail("unexpected " + describe_current(), "identifier");
    return consume().lexeme;
  }

  std::string describe_current() const {
    const Token* t = peek();
    if (!t) return "end of input";
    return std::string(category_name(t->category)) + " '" + t->lexeme + "'";
  }

  [[noreturn]] void fail(const std::string& message, const std::string& expected = {}) const {
    int line = 1, column = 1;
    if (const Token* t = peek()) {
      line = t->line;
      column = t->column;
    } else if (!toks_.empty()) {
      const Token& last = toks_.back();
      line = last.line;
      column = last.column + static_cast<int>(last.lexeme.size());
    }
    throw ParseError(message, line, column, expected);
  }

  // ---- scopes (typedef names vs ordinary identifiers) ----

  void push_scope() { scopes_.emplace_back(); }
  void pop_scope() { scopes_.pop_back(); }

  void declare(const std::string& name, bool is_typedef) { scopes_.back()[name] = is_typedef; }

  bool is_typedef_name(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto found = it->find(name);
      if (found != it->end()) return found->second;
    }
    return false;
  }

  bool starts_type_name(std::size_t ahead = 0) const {
    const Token* t = peek(ahead);
    if (!t) return false;
    if (t->category == TokenCategory::keyword) {
      return one_of(kBasicTypes, t->lexeme) || one_of(kQualifiers, t->lexeme) ||
             t->lexeme == "struct" || t->lexeme == "union" || t->lexeme == "enum";
    }
    return t->category == TokenCategory::identifier && is_typedef_name(t->lexeme);
  }

  bool starts_declaration() const {
    const Token* t = peek();
    if (!t) return false;
    if (t->category == TokenCategory::keyword) {
      return starts_type_name() || one_of(kStorage, t->lexeme);
    }
    return t->category == TokenCategory::identifier && is_typedef_name(t->lexeme) &&
           !at(":", 1);
  }

  // ---- declarations ----

  Specifiers specifiers() {
    Specifiers spec;
    while (const Token* t = peek()) {
      if (t->category == TokenCategory::keyword) {
        if (t->lexeme == "typedef") {
          spec.is_typedef = true;
          ++pos_;
        } else if (one_of(kStorage, t->lexeme) || one_of(kQualifiers, t->lexeme)) {
          ++pos_;
        } else if (one_of(kBasicTypes, t->lexeme)) {
          if (spec.type && spec.type->kind != NodeKind::IdentifierType) {
            fail("conflicting type specifier '" + t->lexeme + "'");
          }
          if (!spec.type) spec.type = leaf(NodeKind::IdentifierType);
          ++pos_;
        } else if (t->lexeme == "struct" || t->lexeme == "union") {
          if (spec.type) fail("conflicting type specifier '" + t->lexeme + "'");
          spec.type = struct_or_union();
        } else if (t->lexeme == "enum") {
          if (spec.type) fail("conflicting type specifier 'enum'");
          spec.type = enumeration();
        } else {
          break;
        }
      } else if (t->category == TokenCategory::identifier && !spec.type &&
                 is_typedef_name(t->lexeme)) {
        spec.type = leaf(NodeKind::IdentifierType);
        ++pos_;
      } else {
        break;
      }
    }
    if (!spec.type) fail("unexpected " + describe_current(), "type specifier");
    return spec;
  }

  AstNode struct_or_union() {
    const bool is_union = consume().lexeme == "union";
    AstNode result(is_union ? NodeKind::Union : NodeKind::Struct);
    bool tagged = false;
    if (at_identifier()) {
      ++pos_;
      tagged = true;
    }
    if (!accept("{")) {
      if (!tagged) fail("unexpected " + describe_current(), "'{' or tag name");
      return result;
    }
    while (!accept("}")) {
      if (at_end()) fail("unexpected end of input", "'}'");
      Specifiers spec = specifiers();
      if (spec.is_typedef) fail("typedef inside struct declaration");
      if (accept(";")) {
        result.children.push_back(node(NodeKind::Decl, {std::move(*spec.type)}));
        continue;
      }
      do {
        Declarator d = declarator(DeclaratorMode::concrete);
        if (at(":")) fail("bit-fields are not supported");
        result.children.push_back(node(NodeKind::Decl, {build_type(d.modifiers, *spec.type)}));
      } while (accept(","));
      expect(";");
    }
    return result;
  }

  AstNode enumeration() {
    ++pos_;
    AstNode result(NodeKind::Enum);
    bool tagged = false;
    if (at_identifier()) {
      ++pos_;
      tagged = true;
    }
    if (!accept("{")) {
      if (!tagged) fail("unexpected " + describe_current(), "'{' or tag name");
      return result;
    }
    AstNode list(NodeKind::EnumeratorList);
    while (!accept("}")) {
      std::string name = expect_identifier();
      declare(name, false);
      AstNode item(NodeKind::Enumerator);
      if (accept("=")) item.children.push_back(conditional());
      list.children.push_back(std::move(item));
      if (!accept(",")) {
        expect("}");
        break;
      }
    }
    if (list.children.empty()) fail("empty enumerator list");
    result.children.push_back(std::move(list));
    return result;
  }

  bool nested_declarator_follows(DeclaratorMode mode) const {
    if (!at("(")) return false;
    if (mode == DeclaratorMode::concrete) return true;
    if (at("*", 1) || at("(", 1) || at("[", 1)) return true;
    return mode == DeclaratorMode::either && at_identifier(1) &&
           !is_typedef_name(toks_[pos_ + 1].lexeme);
  }

  Declarator declarator(DeclaratorMode mode) {
    std::size_t pointers = 0;
    while (accept("*")) {
      ++pointers;
      while (peek() && peek()->category == TokenCategory::keyword &&
             one_of(kQualifiers, peek()->lexeme)) {
        ++pos_;
      }
    }

    Declarator d;
    if (mode != DeclaratorMode::abstract && at_identifier()) {
      d.name = consume().lexeme;
    } else if (nested_declarator_follows(mode)) {
      ++pos_;
      d = declarator(mode);
      expect(")");
    } else if (mode == DeclaratorMode::concrete) {
      fail("unexpected " + describe_current(), "declarator");
    }

    while (true) {
      if (accept("[")) {
        Modifier m{Modifier::Kind::array, std::nullopt};
        if (!at("]")) m.payload = assignment();
        expect("]");
        d.modifiers.push_back(std::move(m));
      } else if (accept("(")) {
        d.modifiers.push_back(Modifier{Modifier::Kind::function, parameters()});
      } else {
        break;
      }
    }
    for (std::size_t i = 0; i < pointers; ++i) {
      d.modifiers.push_back(Modifier{Modifier::Kind::pointer, std::nullopt});
    }
    return d;
  }

  // Called after '('; consumes the closing ')'. No list at all for "()".
  std::optional<AstNode> parameters() {
    if (accept(")")) return std::nullopt;
    AstNode list(NodeKind::ParamList);
    while (true) {
      if (at("...")) fail("variadic parameter lists are not supported");
      Specifiers spec = specifiers();
      if (spec.is_typedef) fail("typedef in parameter declaration");
      Declarator d = declarator(DeclaratorMode::either);
      AstNode type = build_type(d.modifiers, *spec.type);
      list.children.push_back(node(d.name ? NodeKind::Decl : NodeKind::Typename, {std::move(type)}));
      if (accept(")")) break;
      expect(",");
    }
    return list;
  }

  AstNode build_type(const std::vector<Modifier>& mods, const AstNode& base,
                     std::size_t index = 0) const {
    if (index == mods.size()) return node(NodeKind::TypeDecl, {base});
    const Modifier& m = mods[index];
    AstNode inner = build_type(mods, base, index + 1);
    switch (m.kind) {
      case Modifier::Kind::pointer:
        return node(NodeKind::PtrDecl, {std::move(inner)});
      case Modifier::Kind::array: {
        AstNode result(NodeKind::ArrayDecl, {std::move(inner)});
        if (m.payload) result.children.push_back(*m.payload);
        return result;
      }
      case Modifier::Kind::function: {
        AstNode result(NodeKind::FuncDecl);
        if (m.payload) result.children.push_back(*m.payload);
        result.children.push_back(std::move(inner));
        return result;
      }
    }
    return inner;
  }

  AstNode type_name() {
    Specifiers spec = specifiers();
    Declarator d = declarator(DeclaratorMode::abstract);
    return node(NodeKind::Typename, {build_type(d.modifiers, *spec.type)});
  }

  // Declarations at file scope may turn out to be function definitions.
  std::vector<AstNode> external_declaration() { return declaration(true); }

  std::vector<AstNode> declaration(bool file_scope) {
    Specifiers spec = specifiers();
    std::vector<AstNode> out;
    if (accept(";")) {
      const NodeKind k = spec.type->kind;
      if (k != NodeKind::Struct && k != NodeKind::Union && k != NodeKind::Enum) {
        fail("declaration declares nothing");
      }
      if (spec.is_typedef) fail("typedef declares nothing");
      out.push_back(node(NodeKind::Decl, {std::move(*spec.type)}));
      return out;
    }
    bool first = true;
    do {
      Declarator d = declarator(DeclaratorMode::concrete);
      AstNode type = build_type(d.modifiers, *spec.type);
      const bool is_function =
          !d.modifiers.empty() && d.modifiers.front().kind == Modifier::Kind::function;
      if (first && file_scope && is_function && at("{")) {
        if (spec.is_typedef) fail("function definition declared typedef");
        declare(*d.name, false);
        AstNode body = compound();
        out.push_back(node(NodeKind::FuncDef, {node(NodeKind::Decl, {std::move(type)}),
                                               std::move(body)}));
        return out;
      }
      first = false;
      declare(*d.name, spec.is_typedef);
      if (spec.is_typedef) {
        out.push_back(node(NodeKind::Typedef, {std::move(type)}));
      } else {
        AstNode decl(NodeKind::Decl, {std::move(type)});
        if (accept("=")) decl.children.push_back(initializer());
        out.push_back(std::move(decl));
      }
    } while (accept(","));
    expect(";");
    return out;
  }

  AstNode initializer() {
    if (at("{")) return initializer_list();
    return assignment();
  }

  AstNode initializer_list() {
    expect("{");
    AstNode list(NodeKind::InitList);
    while (!accept("}")) {
      if (at(".") || at("[")) fail("designated initializers are not supported");
      list.children.push_back(initializer());
      if (!accept(",")) {
        expect("}");
        break;
      }
    }
    return list;
  }

  // ---- statements ----

  AstNode compound() {
    expect("{");
    push_scope();
    AstNode block(NodeKind::Compound);
    while (!accept("}")) {
      if (at_end()) fail("unexpected end of input", "'}'");
      if (starts_declaration()) {
        for (auto& d : declaration(false)) block.children.push_back(std::move(d));
      } else {
        block.children.push_back(statement());
      }
    }
    pop_scope();
    return block;
  }

  AstNode parenthesized_expression() {
    expect("(");
    AstNode e = expression();
    expect(")");
    return e;
  }

  AstNode statement() {
    const Token* t = peek();
    if (!t) fail("unexpected end of input", "statement");
    if (at("{")) return compound();
    if (accept(";")) return leaf(NodeKind::EmptyStatement);

    if (t->category == TokenCategory::keyword) {
      const std::string& kw = t->lexeme;
      if (kw == "if") {
        ++pos_;
        AstNode result(NodeKind::If, {parenthesized_expression()});
        result.children.push_back(statement());
        if (accept("else")) result.children.push_back(statement());
        return result;
      }
      if (kw == "switch") {
        ++pos_;
        AstNode result(NodeKind::Switch, {parenthesized_expression()});
        result.children.push_back(statement());
        regroup_switch_cases(result);
        return result;
      }
      if (kw == "while") {
        ++pos_;
        AstNode result(NodeKind::While, {parenthesized_expression()});
        result.children.push_back(statement());
        return result;
      }
      if (kw == "do") {
        ++pos_;
        AstNode body = statement();
        expect("while");
        AstNode result(NodeKind::DoWhile, {parenthesized_expression()});
        result.children.push_back(std::move(body));
        expect(";");
        return result;
      }
      if (kw == "for") return for_statement();
      if (kw == "break" || kw == "continue") {
        ++pos_;
        expect(";");
        return leaf(kw == "break" ? NodeKind::Break : NodeKind::Continue);
      }
      if (kw == "return") {
        ++pos_;
        AstNode result(NodeKind::Return);
        if (!accept(";")) {
          result.children.push_back(expression());
          expect(";");
        }
        return result;
      }
      if (kw == "goto") {
        ++pos_;
        expect_identifier();
        expect(";");
        return leaf(NodeKind::Goto);
      }
      if (kw == "case") {
        ++pos_;
        AstNode result(NodeKind::Case, {conditional()});
        expect(":");
        result.children.push_back(statement());
        return result;
      }
      if (kw == "default") {
        ++pos_;
        expect(":");
        return node(NodeKind::Default, {statement()});
      }
      if (kw == "else") fail("'else' without matching 'if'");
    }
    if (at_identifier() && at(":", 1)) {
      pos_ += 2;
      return node(NodeKind::Label, {statement()});
    }
    AstNode e = expression();
    expect(";");
    return e;
  }

  AstNode for_statement() {
    ++pos_;
    expect("(");
    push_scope();
    AstNode result(NodeKind::For);
    if (starts_declaration()) {
      result.children.push_back(node(NodeKind::DeclList, declaration(false)));
    } else if (!accept(";")) {
      result.children.push_back(expression());
      expect(";");
    }
    if (!accept(";")) {
      result.children.push_back(expression());
      expect(";");
    }
    if (!accept(")")) {
      result.children.push_back(expression());
      expect(")");
    }
    result.children.push_back(statement());
    pop_scope();
    return result;
  }

  // A case label owns every statement up to the next label, and stacked
  // labels ("case 1: case 2:") become siblings.
  static void regroup_switch_cases(AstNode& switch_node) {
    AstNode& body = switch_node.children.back();
    if (body.kind != NodeKind::Compound) return;
    std::vector<AstNode> items;
    std::optional<std::size_t> last_case;
    for (auto& child : body.children) {
      if (is_case_like(child)) {
        items.push_back(std::move(child));
        std::size_t index = items.size() - 1;
        while (true) {
          AstNode& label = items[index];
          const std::size_t first = label.kind == NodeKind::Case ? 1 : 0;
          if (label.children.size() <= first || !is_case_like(label.children[first])) break;
          AstNode nested = std::move(label.children.back());
          label.children.pop_back();
          items.push_back(std::move(nested));
          index = items.size() - 1;
        }
        last_case = index;
      } else if (last_case) {
        items[*last_case].children.push_back(std::move(child));
      } else {
        items.push_back(std::move(child));
      }
    }
    body.children = std::move(items);
  }

  // ---- expressions ----

  AstNode expression() {
    AstNode e = assignment();
    if (!at(",")) return e;
    e = node(NodeKind::ExprList, {std::move(e)});
    while (accept(",")) e.children.push_back(assignment());
    return e;
  }

  AstNode assignment() {
    AstNode lhs = conditional();
    const Token* t = peek();
    if (t && t->category == TokenCategory::op && one_of(kAssignOps, t->lexeme)) {
      ++pos_;
      AstNode rhs = assignment();
      return node(NodeKind::Assignment, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  AstNode conditional() {
    AstNode cond = binary(1);
    if (!accept("?")) return cond;
    AstNode if_true = expression();
    expect(":");
    AstNode if_false = conditional();
    return node(NodeKind::TernaryOp, {std::move(cond), std::move(if_true), std::move(if_false)});
  }

  // Precedence climbing; all binary operators are left-associative.
  AstNode binary(int min_precedence) {
    AstNode lhs = cast();
    while (const Token* t = peek()) {
      if (t->category != TokenCategory::op) break;
      const int precedence = binary_precedence(t->lexeme);
      if (precedence == 0 || precedence < min_precedence) break;
      ++pos_;
      AstNode rhs = binary(precedence + 1);
      lhs = node(NodeKind::BinaryOp, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  AstNode cast() {
    if (at("(") && starts_type_name(1)) {
      ++pos_;
      AstNode type = type_name();
      expect(")");
      if (at("{")) {
        AstNode literal(NodeKind::CompoundLiteral, {std::move(type)});
        literal.children.push_back(initializer_list());
        return postfix_tail(std::move(literal));
      }
      return node(NodeKind::Cast, {std::move(type), cast()});
    }
    return unary();
  }

  AstNode unary() {
    if (accept("++") || accept("--")) return node(NodeKind::UnaryOp, {unary()});
    if (const Token* t = peek(); t && t->category == TokenCategory::op &&
                                 one_of(kUnaryOps, t->lexeme)) {
      ++pos_;
      return node(NodeKind::UnaryOp, {cast()});
    }
    if (accept("sizeof")) {
      if (at("(") && starts_type_name(1)) {
        ++pos_;
        AstNode type = type_name();
        expect(")");
        return node(NodeKind::UnaryOp, {std::move(type)});
      }
      return node(NodeKind::UnaryOp, {unary()});
    }
    return postfix_tail(primary());
  }

  AstNode postfix_tail(AstNode base) {
    while (true) {
      if (accept("[")) {
        AstNode index = expression();
        expect("]");
        base = node(NodeKind::ArrayRef, {std::move(base), std::move(index)});
      } else if (accept("(")) {
        AstNode call(NodeKind::FuncCall, {std::move(base)});
        if (!accept(")")) {
          AstNode args(NodeKind::ExprList);
          do {
            args.children.push_back(assignment());
          } while (accept(","));
          expect(")");
          call.children.push_back(std::move(args));
        }
        base = std::move(call);
      } else if (accept(".") || accept("->")) {
        expect_identifier();
        base = node(NodeKind::StructRef, {std::move(base), leaf(NodeKind::ID)});
      } else if (accept("++") || accept("--")) {
        base = node(NodeKind::UnaryOp, {std::move(base)});
      } else {
        return base;
      }
    }
  }

  AstNode primary() {
    const Token* t = peek();
    if (!t) fail("unexpected end of input", "expression");
    if (t->category == TokenCategory::identifier) {
      ++pos_;
      return leaf(NodeKind::ID);
    }
    if (t->category == TokenCategory::constant) {
      ++pos_;
      if (is_string_literal(*t)) {
        while (peek() && is_string_literal(*peek())) ++pos_;
      }
      return leaf(NodeKind::Constant);
    }
    if (at("(")) return parenthesized_expression();
    fail("unexpected " + describe_current(), "expression");
  }

  std::span<const Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::unordered_map<std::string, bool>> scopes_;
};

}  // namespace

AstNode parse_program(std::span<const Token> tokens) { return Parser(tokens).translation_unit(); }

AstNode parse_source(std::string_view source) {
  const std::vector<Token> tokens = tokenize(source);
  return parse_program(tokens);
}

AstNode parse_file(const std::filesystem::path& path) {
  return parse_source(read_text_file(path));
}

}  // namespace astvec::cparse
