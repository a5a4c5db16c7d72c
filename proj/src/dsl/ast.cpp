#include "idealkit/dsl/ast.hpp"

namespace idealkit::dsl {

std::string to_string(SourceSpan span) { return std::to_string(span.line) + ":" + std::to_string(span.column); }

namespace {

const char* stage_name(ScriptError::Stage stage) {
  switch (stage) {
    case ScriptError::Stage::lexical: return "lexical error";
    case ScriptError::Stage::syntax: return "syntax error";
    case ScriptError::Stage::semantic: return "error";
  }
  return "error";
}

}  // namespace

ScriptError::ScriptError(Stage stage, SourceSpan span, const std::string& message)
    : std::runtime_error(to_string(span) + ": " + stage_name(stage) + ": " + message), stage_(stage), span_(span) {}

Expr Expr::identifier(std::string name, SourceSpan span) { return {Kind::identifier, std::move(name), {}, span}; }
Expr Expr::integer(std::string digits, SourceSpan span) { return {Kind::integer, std::move(digits), {}, span}; }
Expr Expr::tuple(std::vector<Expr> items, SourceSpan span) { return {Kind::tuple, "", std::move(items), span}; }
Expr Expr::list(std::vector<Expr> items, SourceSpan span) { return {Kind::list, "", std::move(items), span}; }
Expr Expr::binary(std::string op, Expr lhs, Expr rhs, SourceSpan span) {
  return {Kind::binary, std::move(op), {std::move(lhs), std::move(rhs)}, span};
}
Expr Expr::call(std::string name, std::vector<Expr> args, SourceSpan span) {
  return {Kind::call, std::move(name), std::move(args), span};
}

bool operator==(const Expr& a, const Expr& b) {
  return a.kind == b.kind && a.text == b.text && a.children == b.children;
}

bool operator==(const Statement& a, const Statement& b) {
  return a.kind == b.kind && a.name == b.name && a.value == b.value && a.ring_name == b.ring_name;
}

namespace {

std::string join(const std::vector<Expr>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += print(items[i]);
  }
  return out;
}

}  // namespace

std::string print(const Expr& expr) {
  switch (expr.kind) {
    case Expr::Kind::identifier:
    case Expr::Kind::integer: return expr.text;
    case Expr::Kind::tuple: return "(" + join(expr.children) + ")";
    case Expr::Kind::list: return "[" + join(expr.children) + "]";
    case Expr::Kind::call: return expr.text + "(" + join(expr.children) + ")";
    case Expr::Kind::binary:
      // Grouping only ever comes from explicit parentheses (tuple nodes), so
      // the tree already respects precedence and needs no extra parentheses.
      if (expr.text == "^") return print(expr.children[0]) + "^" + print(expr.children[1]);
      return print(expr.children[0]) + " " + expr.text + " " + print(expr.children[1]);
  }
  return {};
}

std::string print(const Statement& statement) {
  switch (statement.kind) {
    case Statement::Kind::ring: return "ring " + statement.name + " = " + print(*statement.value) + ";";
    case Statement::Kind::ideal: {
      std::string out = "ideal " + statement.name + " = " + print(*statement.value);
      if (statement.ring_name) out += " in " + *statement.ring_name;
      return out + ";";
    }
    case Statement::Kind::let: return "let " + statement.name + " = " + print(*statement.value) + ";";
    case Statement::Kind::use: return "use " + statement.name + ";";
    case Statement::Kind::print: return "print " + print(*statement.value) + ";";
  }
  return {};
}

std::string print(const Script& script) {
  std::string out;
  for (const auto& s : script.statements) out += print(s) + "\n";
  return out;
}

}  // namespace idealkit::dsl
