#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "idealkit/dsl/ast.hpp"
#include "idealkit/homology.hpp"

namespace idealkit::dsl {

struct NoWitness {};

struct IdealList {
  std::vector<MonomialIdeal> items;
};

struct RingValue {
  Ring ring;
};

using Value = std::variant<long long, bool, RingValue, Monomial, MonomialIdeal, SymbolicNotion, PrimeSet, AssStar,
                           PrimaryDecomposition, IdealList, BettiTable, ExtendedInt, Report, NoWitness>;

std::string render(const Value& value);
std::string type_name(const Value& value);

/// Evaluation environment for scripts.
///
/// Identifiers resolve to a binding, then to a variable of the current ring,
/// then to the notions `min` and `ass`. Declaring a ring makes it current;
/// `use` switches explicitly and `ideal ... in A` switches for one statement.
class Interpreter {
 public:
  explicit Interpreter(std::ostream& out, Characteristic characteristic = 0);

  void execute(const Statement& statement);
  void execute(const Script& script);
  Value evaluate(const Expr& expr);

  // True once a printed report has had a failing check.
  bool report_failed() const { return report_failed_; }
  const std::map<std::string, Value>& bindings() const { return bindings_; }

 private:
  Value call(const Expr& expr);
  Value identifier(const Expr& expr);
  Value tuple(const Expr& expr);
  Value binary(const Expr& expr);

  std::ostream& out_;
  Characteristic characteristic_;
  std::map<std::string, Value> bindings_;
  std::optional<Ring> current_ring_;
  bool report_failed_ = false;
};

// Every builtin function name, for the reachability audit and the REPL.
const std::vector<std::string>& builtin_names();

// Parses and runs `source`. Returns 0 on success, 1 if a printed report
// failed, 2 on a parse or evaluation error (message written to `err`).
int run_script(std::string_view source, std::ostream& out, std::ostream& err, Characteristic characteristic = 0);

}  // namespace idealkit::dsl
