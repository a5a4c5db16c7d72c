#include "idealkit/verify.hpp"

#include <set>
#include <sstream>

#include "idealkit/dsl/interpreter.hpp"
#include "idealkit/dsl/parser.hpp"
#include "json.hpp"

namespace idealkit {

namespace {

class Golden {
 public:
  explicit Golden(Report& report) : report_(report) {}

  // Ideal written in script syntax over `ring`.
  static MonomialIdeal ideal(const Ring& ring, const std::string& text) {
    std::ostringstream sink;
    dsl::Interpreter interpreter(sink);
    interpreter.execute(dsl::parse("ring R = " + ring.to_string() + ";"));
    const dsl::Value v = interpreter.evaluate(dsl::parse_expression(text));
    if (const auto* I = std::get_if<MonomialIdeal>(&v)) return *I;
    if (const auto* m = std::get_if<Monomial>(&v)) return MonomialIdeal::principal(*m);
    throw std::invalid_argument("not an ideal: " + text);
  }

  static MonomialPrime prime(const Ring& ring, const std::string& text) {
    return MonomialPrime(ring, ideal(ring, text).lcm_of_generators().support());
  }

  void equal(const std::string& name, const MonomialIdeal& expected, const MonomialIdeal& actual) {
    report_.add(name, expected == actual, expected.to_string(), actual.to_string());
  }
  void equal(const std::string& name, PrimeSet expected, const PrimeSet& actual) {
    normalize(expected);
    report_.add(name, expected == actual, to_string(expected), to_string(actual));
  }
  void equal(const std::string& name, const std::string& expected, const std::string& actual) {
    report_.add(name, expected == actual, expected, actual);
  }
  void truth(const std::string& name, bool value) { report_.add(name, value, "true", value ? "true" : "false"); }

  // Runs `body`, turning an exception into a failed check of the same name.
  template <class F>
  void guarded(const std::string& name, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      report_.add(name, false, "no exception", e.what());
    }
  }

 private:
  Report& report_;
};

void two_variable_example(Golden& g) {
  const Ring A({"a", "b"});
  const MonomialIdeal I = Golden::ideal(A, "(a^2, a*b)");
  const MonomialIdeal m = Golden::ideal(A, "(a, b)");

  g.equal("power (a^2, a*b)^2", Golden::ideal(A, "(a^4, a^3*b, a^2*b^2)"), power(I, 2));
  g.equal("(a) cap (a^2, b)", I, intersect(Golden::ideal(A, "(a)"), Golden::ideal(A, "(a^2, b)")));
  g.equal("saturate (a^2, a*b) by (a, b)", Golden::ideal(A, "(a)"), saturate(I, m));

  g.equal("Ass (a^2, a*b)", PrimeSet{Golden::prime(A, "(a)"), Golden::prime(A, "(a, b)")}, associated_primes(I));
  g.equal("Min (a^2, a*b)", PrimeSet{Golden::prime(A, "(a)")}, minimal_primes(I));
  const AssStar star = ass_star_bounded(I, 3);
  g.equal("Ass* (a^2, a*b) up to n = 3", PrimeSet{Golden::prime(A, "(a)"), Golden::prime(A, "(a, b)")}, star.primes);
  g.truth("Ass* (a^2, a*b) stabilized by n = 3", star.stabilized);
  g.truth("grade of (a, b) on A/(a^2, a*b) is zero", grade_zero(Golden::prime(A, "(a, b)"), I));
  g.equal("Ass of A/(a^2, a*b) as first power quotient",
          PrimeSet{Golden::prime(A, "(a)"), Golden::prime(A, "(a, b)")}, ass_module_quotient(I, 1));

  g.equal("saturated power by (a, b), s = 2", Golden::ideal(A, "(a^2)"), saturated_power(I, m, 2));
  g.equal("saturated power by (b), s = 3", Golden::ideal(A, "(a^3)"), saturated_power(I, Golden::ideal(A, "(b)"), 3));
  g.equal("minimal saturator K_2", m, saturator_min(I, 2));

  for (unsigned s = 1; s <= 10; ++s) {
    const std::string at = ", s = " + std::to_string(s);
    const MonomialIdeal as = power(Golden::ideal(A, "(a)"), s);
    g.equal("minimal symbolic power" + at, as, symbolic_min(I, s));
    g.equal("associated symbolic power" + at, power(I, s), symbolic_ass(I, s));
    g.equal("minimal saturator" + at, m, saturator_min(I, s));
    g.equal("associated saturator" + at, MonomialIdeal::unit(A), saturator_ass(I, s));
  }
  const auto witness = regular_witness(I, SymbolicNotion::minimal, default_ass_star_bound(I));
  g.equal("regular witness for the minimal notion", "b", witness ? witness->to_string() : "none");

  // The associated notion gives ordinary powers on both sides of the sum.
  const Ring B({"c", "d"});
  const MonomialIdeal J = Golden::ideal(B, "(c^2, c*d)");
  const JoinedRings R = join_rings(A, B);
  g.equal("associated binomial expansion, s = 2", power(sum(extend(I, R.left), extend(J, R.right)), 2),
          binomial_symbolic(I, J, 2, SymbolicNotion::associated));
}

void four_variable_example(Golden& g) {
  const Ring A({"x", "y"});
  const Ring B({"z", "t"});
  const JoinedRings joined = join_rings(A, B);
  const Ring& R = joined.ring;
  g.equal("joined ring of [x, y] and [z, t]", "[x, y, z, t]", R.to_string());

  const MonomialIdeal I = Golden::ideal(A, "(x^2, x*y)");
  const MonomialIdeal J = Golden::ideal(B, "(z^2, z*t)");
  const MonomialIdeal sumIJ = Golden::ideal(R, "(x^2, x*y, z^2, z*t)");
  g.equal("extension of the sum", sumIJ, sum(extend(I, joined.left), extend(J, joined.right)));

  const Ring xy({"x", "y"});
  g.equal("(x) cap (y)", Golden::ideal(xy, "(x*y)"), intersect(Golden::ideal(xy, "(x)"), Golden::ideal(xy, "(y)")));
  g.equal("product equals intersection in disjoint variables",
          intersect(extend(I, joined.left), extend(J, joined.right)),
          product(extend(I, joined.left), extend(J, joined.right)));

  const MonomialIdeal E = Golden::ideal(R, "(x, y, z, t)");
  const MonomialIdeal expected_sat = Golden::ideal(R, "(x*z, x^2, x*y, z^2, z*t)");
  g.equal("saturation of the sum by the maximal ideal", expected_sat, saturate(sumIJ, E));

  std::vector<MonomialIdeal> expected_irr = {Golden::ideal(R, "(x, z)"), Golden::ideal(R, "(x, z^2, t)"),
                                             Golden::ideal(R, "(x^2, y, z)"), Golden::ideal(R, "(x^2, y, z^2, t)")};
  std::vector<MonomialIdeal> irr;
  for (const auto& c : irreducible_decomposition(sumIJ)) irr.push_back(c.to_ideal());
  auto as_set = [](const std::vector<MonomialIdeal>& v) {
    std::set<std::string> out;
    for (const auto& I : v) out.insert(I.to_string());
    std::string text;
    for (const auto& s : out) text += s + " ";
    return text;
  };
  g.equal("irreducible components of the sum", as_set(expected_irr), as_set(irr));
  g.equal("the four components intersect to the sum", sumIJ,
          intersect(intersect(expected_irr[0], expected_irr[1]), intersect(expected_irr[2], expected_irr[3])));

  const PrimaryDecomposition pd = primary_decomposition(sumIJ);
  const PrimeSet four = {Golden::prime(R, "(x, z)"), Golden::prime(R, "(x, z, t)"), Golden::prime(R, "(x, y, z)"),
                         Golden::prime(R, "(x, y, z, t)")};
  g.equal("primes of the primary decomposition", four, pd.primes());
  PrimeSet containing_E;
  for (const auto& [p, component] : pd.components) {
    if (p.to_ideal().contains(E)) containing_E.push_back(p);
  }
  g.equal("maximal ideal lies only in the last radical", PrimeSet{Golden::prime(R, "(x, y, z, t)")}, containing_E);
  g.equal("intersection of the first three components", expected_sat,
          intersect(intersect(expected_irr[0], expected_irr[1]), expected_irr[2]));

  const Report structure = check_ass_structure(I, J, 1);
  g.truth("associated-prime structure of the sum, s = 1", structure.passed());
  g.equal("Ass of R/(I+J)", four, associated_primes(sumIJ));

  // No K, L make the saturation a sum of one-sided saturations: collect every
  // value of I : K^oo and J : L^oo over a box of candidate ideals.
  auto saturations = [](const MonomialIdeal& ideal) {
    const Ring& ring = ideal.ring();
    std::vector<ExponentVector> box;
    for (int i = 0; i <= 2; ++i) {
      for (int j = 0; j <= 2; ++j) box.push_back(ExponentVector{i, j});
    }
    std::set<std::string> seen;
    std::vector<MonomialIdeal> out;
    for (unsigned mask = 1; mask < (1u << box.size()); ++mask) {
      std::vector<ExponentVector> gens;
      for (std::size_t k = 0; k < box.size(); ++k) {
        if (mask & (1u << k)) gens.push_back(box[k]);
      }
      MonomialIdeal sat = saturate(ideal, minimalize(ring, gens));
      if (seen.insert(sat.to_string()).second) out.push_back(sat);
    }
    return out;
  };
  const auto left = saturations(I);
  const auto right = saturations(J);
  g.equal("one-sided saturations of (x^2, x*y)", as_set({Golden::ideal(A, "(x)"), I, MonomialIdeal::unit(A)}),
          as_set(left));
  g.equal("one-sided saturations of (z^2, z*t)", as_set({Golden::ideal(B, "(z)"), J, MonomialIdeal::unit(B)}),
          as_set(right));
  bool factorizes = false;
  for (const auto& a : left) {
    for (const auto& b : right) {
      factorizes = factorizes || sum(extend(a, joined.left), extend(b, joined.right)) == expected_sat;
    }
  }
  g.truth("saturation by the maximal ideal is no sum of one-sided saturations", !factorizes);
}

void conventions(Golden& g) {
  const Ring A({"a", "b"});
  const MonomialIdeal unit = MonomialIdeal::unit(A);
  g.equal("depth of the zero module", "inf", depth_quotient(unit).to_string());
  g.equal("regularity of the zero module", "-inf", reg_quotient(unit).to_string());
}

void scripts(Golden& g) {
  auto run = [](const std::string& source) {
    std::ostringstream out, err;
    const int code = dsl::run_script(source, out, err);
    return code == 0 ? out.str() : "exit " + std::to_string(code) + ": " + err.str();
  };
  g.equal("script: minimal symbolic square", "(a^2)\n",
          run("ring A = [a, b];\nideal I = (a^2, a*b) in A;\nprint symb_min(I, 2);\n"));
  const Ring R({"x", "y", "z", "t"});
  g.equal("script: saturation by the maximal ideal",
          Golden::ideal(R, "(x*z, x^2, x*y, z^2, z*t)").to_string() + "\n",
          run("ring R = [x, y, z, t];\nprint saturate((x^2, x*y, z^2, z*t), (x, y, z, t));\n"));
}

}  // namespace

Report run_verify() {
  Report report{"golden examples", {}};
  Golden g(report);
  g.guarded("two-variable example", [&] { two_variable_example(g); });
  g.guarded("four-variable example", [&] { four_variable_example(g); });
  g.guarded("zero-module conventions", [&] { conventions(g); });
  g.guarded("scripts", [&] { scripts(g); });
  return report;
}

std::string verify_json(const Report& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"expected", c.expected}, {"actual", c.actual}});
  }
  j["passed"] = report.passed();
  return j.dump(2);
}

}  // namespace idealkit
