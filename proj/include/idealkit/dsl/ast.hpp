#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace idealkit::dsl {

struct SourceSpan {
  int line = 0;
  int column = 0;
};

std::string to_string(SourceSpan span);

/// Error raised by the lexer, parser or interpreter, carrying its location.
class ScriptError : public std::runtime_error {
 public:
  enum class Stage { lexical, syntax, semantic };
  ScriptError(Stage stage, SourceSpan span, const std::string& message);
  Stage stage() const { return stage_; }
  SourceSpan span() const { return span_; }

 private:
  Stage stage_;
  SourceSpan span_;
};

struct Expr {
  enum class Kind { identifier, integer, tuple, list, binary, call };

  Kind kind = Kind::identifier;
  // Identifier name, integer digits, operator symbol, or called function.
  std::string text;
  std::vector<Expr> children;
  SourceSpan span;

  static Expr identifier(std::string name, SourceSpan span = {});
  static Expr integer(std::string digits, SourceSpan span = {});
  static Expr tuple(std::vector<Expr> items, SourceSpan span = {});
  static Expr list(std::vector<Expr> items, SourceSpan span = {});
  static Expr binary(std::string op, Expr lhs, Expr rhs, SourceSpan span = {});
  static Expr call(std::string name, std::vector<Expr> args, SourceSpan span = {});

  // Structural equality; spans are ignored.
  friend bool operator==(const Expr& a, const Expr& b);
};

struct Statement {
  enum class Kind { ring, ideal, let, use, print };

  Kind kind = Kind::print;
  std::string name;                      // bound name, or the ring for `use`
  std::optional<Expr> value;             // absent only for `use`
  std::optional<std::string> ring_name;  // `ideal I = ... in A;`
  SourceSpan span;

  friend bool operator==(const Statement& a, const Statement& b);
};

struct Script {
  std::vector<Statement> statements;
  friend bool operator==(const Script& a, const Script& b) { return a.statements == b.statements; }
};

// Canonical source text; parsing it yields a structurally equal tree.
std::string print(const Expr& expr);
std::string print(const Statement& statement);
std::string print(const Script& script);

}  // namespace idealkit::dsl
