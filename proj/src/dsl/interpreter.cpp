#include "idealkit/dsl/interpreter.hpp"

#include <functional>
#include <ostream>
#include <sstream>

#include "idealkit/dsl/parser.hpp"

namespace idealkit::dsl {

namespace {

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

[[noreturn]] void semantic_error(SourceSpan span, const std::string& message) {
  throw ScriptError(ScriptError::Stage::semantic, span, message);
}

std::string render_list(const std::vector<MonomialIdeal>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i].to_string();
  }
  return out + "]";
}

}  // namespace

std::string render(const Value& value) {
  return std::visit(Overloaded{
                        [](long long v) { return std::to_string(v); },
                        [](bool v) { return std::string(v ? "true" : "false"); },
                        [](const RingValue& r) { return r.ring.to_string(); },
                        [](const Monomial& m) { return m.to_string(); },
                        [](const MonomialIdeal& I) { return I.to_string(); },
                        [](SymbolicNotion n) { return to_string(n); },
                        [](const PrimeSet& p) { return to_string(p); },
                        [](const AssStar& a) {
                          return to_string(a.primes) + (a.stabilized ? " stabilized" : " not stabilized");
                        },
                        [](const PrimaryDecomposition& d) { return d.to_string(); },
                        [](const IdealList& l) { return render_list(l.items); },
                        [](const BettiTable& b) { return b.to_string(); },
                        [](const ExtendedInt& e) { return e.to_string(); },
                        [](const Report& r) { return r.to_string(); },
                        [](const NoWitness&) { return std::string("none"); },
                    },
                    value);
}

std::string type_name(const Value& value) {
  return std::visit(Overloaded{
                        [](long long) { return "integer"; },
                        [](bool) { return "boolean"; },
                        [](const RingValue&) { return "ring"; },
                        [](const Monomial&) { return "monomial"; },
                        [](const MonomialIdeal&) { return "ideal"; },
                        [](SymbolicNotion) { return "notion"; },
                        [](const PrimeSet&) { return "prime set"; },
                        [](const AssStar&) { return "bounded Ass*"; },
                        [](const PrimaryDecomposition&) { return "decomposition"; },
                        [](const IdealList&) { return "ideal list"; },
                        [](const BettiTable&) { return "Betti table"; },
                        [](const ExtendedInt&) { return "extended integer"; },
                        [](const Report&) { return "report"; },
                        [](const NoWitness&) { return "none"; },
                    },
                    value);
}

namespace {

// Coercions shared by operators and builtins.
std::optional<MonomialIdeal> as_ideal(const Value& v) {
  if (const auto* I = std::get_if<MonomialIdeal>(&v)) return *I;
  if (const auto* m = std::get_if<Monomial>(&v)) return MonomialIdeal::principal(*m);
  return std::nullopt;
}

MonomialIdeal require_ideal(const Value& v, SourceSpan span, const std::string& what) {
  if (auto I = as_ideal(v)) return *I;
  semantic_error(span, what + ": expected an ideal, got " + type_name(v));
}

unsigned require_exponent(const Value& v, SourceSpan span, const std::string& what) {
  const auto* n = std::get_if<long long>(&v);
  if (!n) semantic_error(span, what + ": expected an integer, got " + type_name(v));
  if (*n < 0 || *n > 65535) semantic_error(span, what + ": integer " + std::to_string(*n) + " out of range");
  return static_cast<unsigned>(*n);
}

class Arguments {
 public:
  Arguments(const Expr& call, std::vector<Value> values) : call_(call), values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  const Value& operator[](std::size_t i) const { return values_[i]; }
  SourceSpan span(std::size_t i) const { return call_.children[i].span; }

  void arity(std::size_t min, std::size_t max) const {
    if (size() < min || size() > max) {
      const std::string expected =
          min == max ? std::to_string(min) : std::to_string(min) + " to " + std::to_string(max);
      semantic_error(call_.span, call_.text + " takes " + expected + " arguments, got " + std::to_string(size()));
    }
  }

  std::string label(std::size_t i) const { return call_.text + " argument " + std::to_string(i + 1); }

  MonomialIdeal ideal(std::size_t i) const { return require_ideal(values_[i], span(i), label(i)); }
  unsigned integer(std::size_t i) const { return require_exponent(values_[i], span(i), label(i)); }
  std::optional<unsigned> optional_integer(std::size_t i) const {
    return i < size() ? std::optional<unsigned>(integer(i)) : std::nullopt;
  }

  SymbolicNotion notion(std::size_t i) const {
    if (const auto* n = std::get_if<SymbolicNotion>(&values_[i])) return *n;
    semantic_error(span(i), label(i) + ": expected min or ass, got " + type_name(values_[i]));
  }

  Ring ring(std::size_t i) const {
    if (const auto* r = std::get_if<RingValue>(&values_[i])) return r->ring;
    semantic_error(span(i), label(i) + ": expected a ring, got " + type_name(values_[i]));
  }

  Filtration filtration(std::size_t i) const {
    if (const auto* l = std::get_if<IdealList>(&values_[i])) return Filtration{l->items};
    semantic_error(span(i), label(i) + ": expected a list of ideals, got " + type_name(values_[i]));
  }

  MonomialPrime prime(std::size_t i) const {
    const MonomialIdeal P = ideal(i);
    std::uint32_t support = 0;
    for (const auto& g : P.generators()) {
      if (g.degree() != 1) semantic_error(span(i), label(i) + ": expected an ideal generated by variables");
      support |= g.support();
    }
    if (support == 0) semantic_error(span(i), label(i) + ": the prime must be nonzero");
    return MonomialPrime(P.ring(), support);
  }

  Characteristic characteristic(std::size_t i, Characteristic fallback) const {
    if (i >= size()) return fallback;
    const auto* n = std::get_if<long long>(&values_[i]);
    if (!n || *n < 0 || *n > 0xffffffffLL) semantic_error(span(i), label(i) + ": expected a characteristic");
    return static_cast<Characteristic>(*n);
  }

 private:
  const Expr& call_;
  std::vector<Value> values_;
};

using Builtin = std::function<Value(const Arguments&, Characteristic)>;

MonomialIdeal extend_by_name(const MonomialIdeal& I, const Ring& target) {
  RingEmbedding embedding{I.ring(), target, {}};
  for (const auto& name : I.ring().variables()) {
    auto index = target.index_of(name);
    if (!index) throw std::invalid_argument("variable " + name + " is not in " + target.to_string());
    embedding.index_map.push_back(*index);
  }
  return extend(I, embedding);
}

const std::map<std::string, Builtin>& builtins() {
  static const std::map<std::string, Builtin> table = [] {
    std::map<std::string, Builtin> t;
    // Ideal arithmetic.
    t["intersect"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(2, 64);
      MonomialIdeal acc = a.ideal(0);
      for (std::size_t i = 1; i < a.size(); ++i) acc = intersect(acc, a.ideal(i));
      return acc;
    };
    t["colon"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(2, 2);
      return colon(a.ideal(0), a.ideal(1));
    };
    t["saturate"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(2, 2);
      return saturate(a.ideal(0), a.ideal(1));
    };
    t["radical"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(1, 1);
      return radical(a.ideal(0));
    };
    t["contains"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(2, 2);
      return a.ideal(0).contains(a.ideal(1));
    };
    t["equal"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(2, 2);
      return a.ideal(0) == a.ideal(1);
    };
    t["subset"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(2, 2);
      return a.ideal(1).contains(a.ideal(0));
    };
    t["powers"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(2, 2);
      return IdealList{power_filtration(a.ideal(0), a.integer(1)).terms};
    };
    t["satpowers"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(3, 3);
      return IdealList{saturated_filtration(a.ideal(0), a.ideal(1), a.integer(2)).terms};
    };

    // Saturated and symbolic powers.
    t["satpow"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(3, 3);
      return saturated_power(a.ideal(0), a.ideal(1), a.integer(2));
    };
    t["symb_min"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(2, 2);
      return symbolic_min(a.ideal(0), a.integer(1));
    };
    t["symb_ass"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(2, 2);
      return symbolic_ass(a.ideal(0), a.integer(1));
    };
    t["symb"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(3, 3);
      return symbolic_power(a.ideal(0), a.integer(1), a.notion(2));
    };
    t["sat_min"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(2, 2);
      return saturator_min(a.ideal(0), a.integer(1));
    };
    t["sat_ass"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(2, 2);
      return saturator_ass(a.ideal(0), a.integer(1));
    };
    t["sat_min_global"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(1, 2);
      const MonomialIdeal I = a.ideal(0);
      return saturator_min_global(I, a.optional_integer(1).value_or(default_ass_star_bound(I)));
    };
    t["sat_ass_global"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(1, 2);
      const MonomialIdeal I = a.ideal(0);
      return saturator_ass_global(I, a.optional_integer(1).value_or(default_ass_star_bound(I)));
    };
    t["witness"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(2, 4);
      const MonomialIdeal I = a.ideal(0);
      auto w = regular_witness(I, a.notion(1), a.optional_integer(2).value_or(default_ass_star_bound(I)),
                               a.optional_integer(3));
      if (!w) return NoWitness{};
      return *w;
    };

    // Decomposition and primes.
    t["ass"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(1, 1);
      return associated_primes(a.ideal(0));
    };
    t["min"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(1, 1);
      return minimal_primes(a.ideal(0));
    };
    t["ass_star"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(1, 2);
      const MonomialIdeal I = a.ideal(0);
      return ass_star_bounded(I, a.optional_integer(1).value_or(default_ass_star_bound(I)));
    };
    t["grade_zero"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(2, 2);
      return grade_zero(a.prime(0), a.ideal(1));
    };
    t["ass_quot"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(2, 2);
      return ass_module_quotient(a.ideal(0), a.integer(1));
    };
    t["decompose"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(1, 1);
      return primary_decomposition(a.ideal(0));
    };
    t["irreducible"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(1, 1);
      IdealList out;
      for (const auto& c : irreducible_decomposition(a.ideal(0))) out.items.push_back(c.to_ideal());
      return out;
    };

    // Homological invariants of R/I.
    t["depth"] = [](const Arguments& a, Characteristic p) -> Value {
      a.arity(1, 2);
      return depth_quotient(a.ideal(0), a.characteristic(1, p));
    };
    t["reg"] = [](const Arguments& a, Characteristic p) -> Value {
      a.arity(1, 2);
      return reg_quotient(a.ideal(0), a.characteristic(1, p));
    };
    t["pd"] = [](const Arguments& a, Characteristic p) -> Value {
      a.arity(1, 2);
      const BettiTable table = betti_table(a.ideal(0), a.characteristic(1, p));
      if (table.is_zero_module()) return ExtendedInt::minus_infinity();
      return ExtendedInt(table.projective_dimension());
    };
    t["betti"] = [](const Arguments& a, Characteristic p) -> Value {
      a.arity(1, 2);
      return betti_table(a.ideal(0), a.characteristic(1, p));
    };
    t["dstar"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(1, 1);
      return deriv_star(a.ideal(0));
    };

    // Disjoint-variable constructions.
    t["join"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(2, 2);
      return RingValue{join_rings(a.ring(0), a.ring(1)).ring};
    };
    t["extend"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(2, 2);
      return extend_by_name(a.ideal(0), a.ring(1));
    };
    t["binom_sat"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(5, 5);
      return binomial_saturated(a.ideal(0), a.ideal(1), a.ideal(2), a.ideal(3), a.integer(4));
    };
    t["direct_sat"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(5, 5);
      return direct_saturated(a.ideal(0), a.ideal(1), a.ideal(2), a.ideal(3), a.integer(4));
    };
    t["binom_symb"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(4, 4);
      return binomial_symbolic(a.ideal(0), a.ideal(1), a.integer(2), a.notion(3));
    };
    t["direct_symb"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(4, 4);
      return direct_symbolic(a.ideal(0), a.ideal(1), a.integer(2), a.notion(3));
    };

    // Identity checks; each returns a report.
    t["check_binom_sat"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(5, 5);
      return check_binomial_saturated(a.ideal(0), a.ideal(1), a.ideal(2), a.ideal(3), a.integer(4));
    };
    t["check_binom_symb"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(4, 4);
      return check_binomial_symbolic(a.ideal(0), a.ideal(1), a.integer(2), a.notion(3));
    };
    t["check_equality"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(5, 5);
      return check_equality_criteria(a.ideal(0), a.ideal(1), a.ideal(2), a.ideal(3), a.integer(4)).report;
    };
    t["check_equality_symb"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(4, 4);
      return check_equality_criteria_symbolic(a.ideal(0), a.ideal(1), a.integer(2), a.notion(3)).report;
    };
    t["check_ass"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(3, 4);
      return check_ass_structure(a.ideal(0), a.ideal(1), a.integer(2), a.optional_integer(3));
    };
    t["check_filtration"] = [](const Arguments& a, Characteristic) -> Value {
      a.arity(5, 5);
      return check_filtration_identities(a.filtration(0), a.filtration(1), a.filtration(2), a.ideal(3), a.integer(4));
    };
    t["check_depth_reg"] = [](const Arguments& a, Characteristic p) -> Value {
      a.arity(5, 6);
      return check_depth_reg_binomial(a.ideal(0), a.ideal(1), a.ideal(2), a.ideal(3), a.integer(4),
                                      a.characteristic(5, p))
          .report;
    };
    t["check_depth_reg_symb"] = [](const Arguments& a, Characteristic p) -> Value {
      a.arity(4, 5);
      return check_depth_reg_symbolic(a.ideal(0), a.ideal(1), a.integer(2), a.notion(3), a.characteristic(4, p))
          .report;
    };
    return t;
  }();
  return table;
}

long long checked_integer(const std::string& op, long long a, long long b, SourceSpan span) {
  long long r = 0;
  bool overflow = false;
  if (op == "+") {
    overflow = __builtin_add_overflow(a, b, &r);
  } else if (op == "*") {
    overflow = __builtin_mul_overflow(a, b, &r);
  } else {
    if (b < 0) semantic_error(span, "negative exponent");
    r = 1;
    for (long long i = 0; i < b && !overflow; ++i) overflow = __builtin_mul_overflow(r, a, &r);
  }
  if (overflow) semantic_error(span, "integer overflow");
  return r;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : builtins()) out.push_back(name);
    return out;
  }();
  return names;
}

Interpreter::Interpreter(std::ostream& out, Characteristic characteristic)
    : out_(out), characteristic_(characteristic) {
  require_valid_characteristic(characteristic);
}

void Interpreter::execute(const Script& script) {
  for (const auto& st : script.statements) execute(st);
}

void Interpreter::execute(const Statement& st) {
  auto lookup_ring = [&](const std::string& name) {
    auto it = bindings_.find(name);
    if (it == bindings_.end()) semantic_error(st.span, "unbound ring '" + name + "'");
    const auto* r = std::get_if<RingValue>(&it->second);
    if (!r) semantic_error(st.span, "'" + name + "' is a " + type_name(it->second) + ", not a ring");
    return r->ring;
  };

  switch (st.kind) {
    case Statement::Kind::ring: {
      const Expr& e = *st.value;
      Ring ring;
      if (e.kind == Expr::Kind::list) {
        std::vector<std::string> names;
        for (const auto& item : e.children) {
          if (item.kind != Expr::Kind::identifier) semantic_error(item.span, "ring variables must be names");
          names.push_back(item.text);
        }
        try {
          ring = Ring(std::move(names));
        } catch (const std::exception& ex) {
          semantic_error(e.span, ex.what());
        }
      } else {
        Value v = evaluate(e);
        const auto* r = std::get_if<RingValue>(&v);
        if (!r) semantic_error(e.span, "expected a ring, got " + type_name(v));
        ring = r->ring;
      }
      bindings_[st.name] = RingValue{ring};
      current_ring_ = ring;
      return;
    }
    case Statement::Kind::ideal: {
      const std::optional<Ring> saved = current_ring_;
      if (st.ring_name) current_ring_ = lookup_ring(*st.ring_name);
      Value v = evaluate(*st.value);
      current_ring_ = saved;
      MonomialIdeal I = require_ideal(v, st.value->span, "ideal " + st.name);
      if (st.ring_name && !(I.ring() == lookup_ring(*st.ring_name))) {
        semantic_error(st.value->span, "ring mismatch: ideal lives in " + I.ring().to_string() + ", not " +
                                           *st.ring_name);
      }
      bindings_[st.name] = std::move(I);
      return;
    }
    case Statement::Kind::let:
      bindings_[st.name] = evaluate(*st.value);
      return;
    case Statement::Kind::use:
      current_ring_ = lookup_ring(st.name);
      return;
    case Statement::Kind::print: {
      Value v = evaluate(*st.value);
      if (const auto* r = std::get_if<Report>(&v); r && !r->passed()) report_failed_ = true;
      std::string text = render(v);
      out_ << text;
      if (text.empty() || text.back() != '\n') out_ << '\n';
      return;
    }
  }
}

Value Interpreter::evaluate(const Expr& expr) {
  try {
    switch (expr.kind) {
      case Expr::Kind::integer:
        try {
          return std::stoll(expr.text);
        } catch (const std::out_of_range&) {
          semantic_error(expr.span, "integer literal " + expr.text + " is too large");
        }
      case Expr::Kind::identifier: return identifier(expr);
      case Expr::Kind::tuple: return tuple(expr);
      case Expr::Kind::list: {
        IdealList out;
        for (const auto& item : expr.children) out.items.push_back(require_ideal(evaluate(item), item.span, "list item"));
        return out;
      }
      case Expr::Kind::binary: return binary(expr);
      case Expr::Kind::call: return call(expr);
    }
  } catch (const ScriptError&) {
    throw;
  } catch (const std::exception& ex) {
    semantic_error(expr.span, ex.what());
  }
  semantic_error(expr.span, "unknown expression");
}

Value Interpreter::identifier(const Expr& expr) {
  if (auto it = bindings_.find(expr.text); it != bindings_.end()) return it->second;
  if (current_ring_) {
    if (auto index = current_ring_->index_of(expr.text)) return Monomial::variable(*current_ring_, *index);
  }
  if (auto notion = parse_notion(expr.text)) return *notion;
  semantic_error(expr.span, "unbound name '" + expr.text + "'");
}

Value Interpreter::tuple(const Expr& expr) {
  if (expr.children.empty()) semantic_error(expr.span, "empty parentheses");
  std::vector<Value> items;
  for (const auto& child : expr.children) items.push_back(evaluate(child));

  if (items.size() == 1) {
    const Value& only = items.front();
    if (const auto* n = std::get_if<long long>(&only); n && *n != 0 && *n != 1) return only;  // grouping
    if (!std::holds_alternative<long long>(only) && !as_ideal(only)) return only;              // grouping
  }

  // Generators of an ideal: monomials, ideals, and the constants 0 and 1.
  std::optional<Ring> ring;
  std::vector<ExponentVector> gens;
  bool unit = false;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const SourceSpan span = expr.children[i].span;
    if (const auto* n = std::get_if<long long>(&items[i])) {
      if (*n != 0 && *n != 1) semantic_error(span, "only the constants 0 and 1 may appear as generators");
      unit = unit || *n == 1;
      continue;
    }
    MonomialIdeal I = require_ideal(items[i], span, "generator");
    if (ring && !(*ring == I.ring())) {
      semantic_error(span, "ring mismatch: " + I.ring().to_string() + " versus " + ring->to_string());
    }
    ring = I.ring();
    gens.insert(gens.end(), I.generators().begin(), I.generators().end());
  }
  if (!ring) {
    if (!current_ring_) semantic_error(expr.span, "no current ring for a constant ideal");
    ring = current_ring_;
  }
  if (unit) return MonomialIdeal::unit(*ring);
  return minimalize(*ring, std::move(gens));
}

Value Interpreter::binary(const Expr& expr) {
  const Value lhs = evaluate(expr.children[0]);
  const Value rhs = evaluate(expr.children[1]);
  const std::string& op = expr.text;
  const auto* li = std::get_if<long long>(&lhs);
  const auto* ri = std::get_if<long long>(&rhs);
  if (li && ri) return checked_integer(op, *li, *ri, expr.span);

  if (op == "^") {
    const unsigned s = require_exponent(rhs, expr.children[1].span, "exponent");
    if (const auto* m = std::get_if<Monomial>(&lhs)) return pow(*m, s);
    return power(require_ideal(lhs, expr.children[0].span, "base"), s);
  }

  const auto* lm = std::get_if<Monomial>(&lhs);
  const auto* rm = std::get_if<Monomial>(&rhs);
  if (op == "*" && lm && rm) return *lm * *rm;

  const MonomialIdeal a = require_ideal(lhs, expr.children[0].span, "left operand of " + op);
  const MonomialIdeal b = require_ideal(rhs, expr.children[1].span, "right operand of " + op);
  return op == "+" ? sum(a, b) : product(a, b);
}

Value Interpreter::call(const Expr& expr) {
  const auto& table = builtins();
  auto it = table.find(expr.text);
  if (it == table.end()) semantic_error(expr.span, "unknown function '" + expr.text + "'");
  std::vector<Value> values;
  for (const auto& child : expr.children) values.push_back(evaluate(child));
  return it->second(Arguments(expr, std::move(values)), characteristic_);
}

int run_script(std::string_view source, std::ostream& out, std::ostream& err, Characteristic characteristic) {
  try {
    const Script script = parse(source);
    Interpreter interpreter(out, characteristic);
    interpreter.execute(script);
    return interpreter.report_failed() ? 1 : 0;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 2;
  }
}

}  // namespace idealkit::dsl
