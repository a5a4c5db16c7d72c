#include "idealkit/dsl/parser.hpp"

#include "idealkit/dsl/lexer.hpp"

namespace idealkit::dsl {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view source) : tokens_(tokenize(source)) {}

  Script script() {
    Script out;
    while (peek().kind != Token::Kind::end) out.statements.push_back(statement());
    return out;
  }

  Expr lone_expression() {
    Expr e = expression();
    if (peek().kind != Token::Kind::end) fail("expected end of input");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  bool at_symbol(const char* s) const { return peek().kind == Token::Kind::symbol && peek().text == s; }
  bool at_keyword(const char* s) const { return peek().kind == Token::Kind::identifier && peek().text == s; }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    const std::string found = t.kind == Token::Kind::end ? "end of input" : "'" + t.text + "'";
    throw ScriptError(ScriptError::Stage::syntax, t.span, what + ", found " + found);
  }

  void expect_symbol(const char* s) {
    if (!at_symbol(s)) fail(std::string("expected '") + s + "'");
    take();
  }

  std::string name() {
    if (peek().kind != Token::Kind::identifier) fail("expected a name");
    return take().text;
  }

  Statement statement() {
    Statement st;
    st.span = peek().span;
    const std::string keyword = peek().kind == Token::Kind::identifier ? peek().text : "";
    if (keyword == "ring" || keyword == "ideal" || keyword == "let") {
      take();
      st.kind = keyword == "ring" ? Statement::Kind::ring
                : keyword == "ideal" ? Statement::Kind::ideal
                                     : Statement::Kind::let;
      st.name = name();
      expect_symbol("=");
      st.value = expression();
      if (st.kind == Statement::Kind::ideal && at_keyword("in")) {
        take();
        st.ring_name = name();
      }
    } else if (keyword == "use") {
      take();
      st.kind = Statement::Kind::use;
      st.name = name();
    } else if (keyword == "print") {
      take();
      st.kind = Statement::Kind::print;
      st.value = expression();
    } else {
      fail("expected a statement (ring, ideal, let, use, print)");
    }
    expect_symbol(";");
    return st;
  }

  Expr expression() {
    Expr lhs = term();
    while (at_symbol("+")) {
      const SourceSpan span = take().span;
      lhs = Expr::binary("+", std::move(lhs), term(), span);
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = factor();
    while (at_symbol("*")) {
      const SourceSpan span = take().span;
      lhs = Expr::binary("*", std::move(lhs), factor(), span);
    }
    return lhs;
  }

  Expr factor() {
    Expr lhs = primary();
    while (at_symbol("^")) {
      const SourceSpan span = take().span;
      lhs = Expr::binary("^", std::move(lhs), primary(), span);
    }
    return lhs;
  }

  std::vector<Expr> arguments(const char* close) {
    std::vector<Expr> items;
    if (!at_symbol(close)) {
      items.push_back(expression());
      while (at_symbol(",")) {
        take();
        items.push_back(expression());
      }
    }
    expect_symbol(close);
    return items;
  }

  Expr primary() {
    const Token& t = peek();
    const SourceSpan span = t.span;
    if (t.kind == Token::Kind::integer) return Expr::integer(take().text, span);
    if (t.kind == Token::Kind::identifier) {
      std::string id = take().text;
      if (at_symbol("(")) {
        take();
        return Expr::call(std::move(id), arguments(")"), span);
      }
      return Expr::identifier(std::move(id), span);
    }
    if (at_symbol("(")) {
      take();
      return Expr::tuple(arguments(")"), span);
    }
    if (at_symbol("[")) {
      take();
      return Expr::list(arguments("]"), span);
    }
    fail("expected an expression");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Script parse(std::string_view source) { return Parser(source).script(); }

Expr parse_expression(std::string_view source) { return Parser(source).lone_expression(); }

}  // namespace idealkit::dsl
