#include "idealkit/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace idealkit {

namespace {

struct CaseOutcome {
  bool passed = true;
  bool partial = false;
  std::string check;
  std::string expected;
  std::string actual;
  std::string script;
};

using SuiteFn = std::function<CaseOutcome(const FuzzInstance&, Characteristic)>;

std::string print_line(const std::string& expr) { return "print " + expr + ";\n"; }

std::string s_of(const FuzzInstance& in) { return std::to_string(in.s); }

// Folds a kernel report into the case outcome; the first failure wins.
void absorb(CaseOutcome& out, const Report& report, const std::string& script_line) {
  if (report.inconclusive()) out.partial = true;
  if (!out.passed) return;
  if (const CheckResult* f = report.first_failure()) {
    out.passed = false;
    out.check = report.title + ": " + f->name;
    out.expected = f->expected;
    out.actual = f->actual;
    out.script = script_line;
  }
}

void compare(CaseOutcome& out, const std::string& name, const MonomialIdeal& expected, const MonomialIdeal& actual,
             const std::string& script_line) {
  if (!out.passed || expected == actual) return;
  out.passed = false;
  out.check = name;
  out.expected = expected.to_string();
  out.actual = actual.to_string();
  out.script = script_line;
}

void require_inside(CaseOutcome& out, const std::string& name, const MonomialIdeal& inner, const MonomialIdeal& outer,
                    const std::string& script_line) {
  if (!out.passed || outer.contains(inner)) return;
  out.passed = false;
  out.check = name;
  out.expected = "inside " + outer.to_string();
  out.actual = inner.to_string();
  out.script = script_line;
}

CaseOutcome thm38(const FuzzInstance& in, Characteristic) {
  CaseOutcome out;
  absorb(out, check_binomial_saturated(in.I, in.K, in.J, in.L, in.s),
         print_line("check_binom_sat(I, K, J, L, " + s_of(in) + ")"));
  return out;
}

CaseOutcome thm41(const FuzzInstance& in, SymbolicNotion notion) {
  CaseOutcome out;
  absorb(out, check_binomial_symbolic(in.I, in.J, in.s, notion),
         print_line("check_binom_symb(I, J, " + s_of(in) + ", " + to_string(notion) + ")"));
  return out;
}

// Four routes to the symbolic power of I: decomposition, saturation by K_s,
// saturation by the global saturator, and saturation by a regular witness.
CaseOutcome lem22_24(const FuzzInstance& in, Characteristic) {
  CaseOutcome out;
  const unsigned s = in.s;
  const unsigned n_max = std::max(s, default_ass_star_bound(in.I));
  const std::string n = std::to_string(n_max);
  for (SymbolicNotion notion : {SymbolicNotion::minimal, SymbolicNotion::associated}) {
    const std::string tag = to_string(notion);
    const MonomialIdeal direct = symbolic_power(in.I, s, notion);
    const std::string symb = "symb_" + tag + "(I, " + s_of(in) + ")";
    compare(out, tag + ": saturation by K_s", direct, saturated_power(in.I, saturator(in.I, s, notion), s),
            print_line(symb) + print_line("satpow(I, sat_" + tag + "(I, " + s_of(in) + "), " + s_of(in) + ")"));
    // n_max >= s, so Ass(I^s) is inside the bounded union and the global
    // saturator cuts exactly the right components even before stabilization.
    compare(out, tag + ": saturation by global K", direct,
            saturated_power(in.I, saturator_global(in.I, n_max, notion), s),
            print_line(symb) + print_line("satpow(I, sat_" + tag + "_global(I, " + n + "), " + s_of(in) + ")"));
    const auto witness = regular_witness(in.I, notion, n_max);
    if (!witness) {
      out.partial = true;
      continue;
    }
    compare(out, tag + ": saturation by witness " + witness->to_string(), direct,
            saturated_power(in.I, MonomialIdeal::principal(*witness), s),
            print_line(symb) + print_line("satpow(I, witness(I, " + tag + ", " + n + "), " + s_of(in) + ")"));
  }
  return out;
}

CaseOutcome lem32_36(const FuzzInstance& in, Characteristic) {
  CaseOutcome out;
  const unsigned s = in.s;
  const std::string S = s_of(in);
  absorb(out,
         check_filtration_identities(power_filtration(in.I, s), power_filtration(in.I2, s), power_filtration(in.J, s),
                                     in.K, s),
         print_line("check_filtration(powers(I, " + S + "), powers(I2, " + S + "), powers(J, " + S + "), K, " + S +
                    ")"));
  absorb(out,
         check_filtration_identities(saturated_filtration(in.I, in.K, s), saturated_filtration(in.I2, in.K, s),
                                     saturated_filtration(in.J, in.L, s), in.K, s),
         print_line("check_filtration(satpowers(I, K, " + S + "), satpowers(I2, K, " + S + "), satpowers(J, L, " + S +
                    "), K, " + S + ")"));
  require_inside(out, "binomial sum inside saturation of the sum", binomial_saturated(in.I, in.K, in.J, in.L, s),
                 direct_saturated(in.I, in.K, in.J, in.L, s),
                 print_line("subset(binom_sat(I, K, J, L, " + S + "), direct_sat(I, K, J, L, " + S + "))"));
  return out;
}

void cross_check_quotients(CaseOutcome& out, const MonomialIdeal& ideal, const std::string& name, unsigned s) {
  for (unsigned i = 1; i <= s && out.passed; ++i) {
    const MonomialIdeal lower = power(ideal, i - 1);
    const MonomialIdeal upper = power(ideal, i);
    const unsigned cap = static_cast<unsigned>(lcm(lower.lcm_of_generators(), upper.lcm_of_generators()).degree());
    const PrimeSet fast = ass_module_quotient(ideal, i);
    const PrimeSet slow = ass_module_quotient_by_degree(ideal, i, cap);
    if (fast != slow) {
      out.passed = false;
      out.check = "ass_quot(" + name + ", " + std::to_string(i) + ") against exhaustive search to degree " +
                  std::to_string(cap);
      out.expected = to_string(slow);
      out.actual = to_string(fast);
      out.script = print_line("ass_quot(" + name + ", " + std::to_string(i) + ")");
    }
  }
}

CaseOutcome lem25_29(const FuzzInstance& in, Characteristic) {
  CaseOutcome out;
  cross_check_quotients(out, in.I, "I", in.s);
  cross_check_quotients(out, in.J, "J", in.s);
  if (!out.passed) return out;  // the structure checks rely on ass_quot
  absorb(out, check_ass_structure(in.I, in.J, in.s), print_line("check_ass(I, J, " + s_of(in) + ")"));
  return out;
}

std::string char_suffix(Characteristic p) { return p == 0 ? "" : ", " + std::to_string(p); }

CaseOutcome thm44(const FuzzInstance& in, Characteristic p) {
  CaseOutcome out;
  absorb(out, check_depth_reg_binomial(in.I, in.K, in.J, in.L, in.s, p).report,
         print_line("check_depth_reg(I, K, J, L, " + s_of(in) + char_suffix(p) + ")"));
  return out;
}

CaseOutcome cor46(const FuzzInstance& in, Characteristic p) {
  CaseOutcome out;
  for (SymbolicNotion notion : {SymbolicNotion::minimal, SymbolicNotion::associated}) {
    absorb(out, check_depth_reg_symbolic(in.I, in.J, in.s, notion, p).report,
           print_line("check_depth_reg_symb(I, J, " + s_of(in) + ", " + to_string(notion) + char_suffix(p) + ")"));
  }
  return out;
}

CaseOutcome lem45(const FuzzInstance& in, Characteristic) {
  CaseOutcome out;
  auto chain = [&](const MonomialIdeal& X, const MonomialIdeal& Y, const std::string& x, const std::string& y) {
    for (unsigned t = 1; t <= in.s; ++t) {
      const std::string T = std::to_string(t);
      const std::string prev = std::to_string(t - 1);
      require_inside(out, "dstar of " + x + "^(" + T + ")_" + y, deriv_star(saturated_power(X, Y, t)),
                     saturated_power(X, Y, t - 1),
                     print_line("subset(dstar(satpow(" + x + ", " + y + ", " + T + ")), satpow(" + x + ", " + y +
                                ", " + prev + "))"));
    }
  };
  chain(in.I, in.K, "I", "K");
  chain(in.J, in.L, "J", "L");
  for (SymbolicNotion notion : {SymbolicNotion::minimal, SymbolicNotion::associated}) {
    const std::string f = "symb_" + to_string(notion);
    for (unsigned t = 1; t <= in.s; ++t) {
      const std::string T = std::to_string(t);
      require_inside(out, "dstar of " + f + "(I, " + T + ")", deriv_star(symbolic_power(in.I, t, notion)),
                     symbolic_power(in.I, t - 1, notion),
                     print_line("subset(dstar(" + f + "(I, " + T + ")), " + f + "(I, " + std::to_string(t - 1) + "))"));
    }
  }
  return out;
}

CaseOutcome cor39_310(const FuzzInstance& in, Characteristic) {
  CaseOutcome out;
  absorb(out, check_equality_criteria(in.I, in.K, in.J, in.L, in.s).report,
         print_line("check_equality(I, K, J, L, " + s_of(in) + ")"));
  return out;
}

CaseOutcome cor43(const FuzzInstance& in, Characteristic) {
  CaseOutcome out;
  for (SymbolicNotion notion : {SymbolicNotion::minimal, SymbolicNotion::associated}) {
    absorb(out, check_equality_criteria_symbolic(in.I, in.J, in.s, notion).report,
           print_line("check_equality_symb(I, J, " + s_of(in) + ", " + to_string(notion) + ")"));
  }
  return out;
}

const std::map<std::string, SuiteFn>& suite_table() {
  static const std::map<std::string, SuiteFn> table = {
      {"thm38", thm38},
      {"thm41_min", [](const FuzzInstance& in, Characteristic) { return thm41(in, SymbolicNotion::minimal); }},
      {"thm41_ass", [](const FuzzInstance& in, Characteristic) { return thm41(in, SymbolicNotion::associated); }},
      {"lem22_24", lem22_24},
      {"lem32_36", lem32_36},
      {"lem25_29", lem25_29},
      {"thm44", thm44},
      {"cor46", cor46},
      {"lem45", lem45},
      {"cor39_310", cor39_310},
      {"cor43", cor43},
  };
  return table;
}

// Uniform draw from [lo, hi]. The modulo mapping is part of the seeded
// reproducibility contract and must not change.
unsigned draw(std::mt19937_64& rng, unsigned lo, unsigned hi) {
  return lo + static_cast<unsigned>(rng() % (static_cast<std::uint64_t>(hi) - lo + 1));
}

MonomialIdeal random_ideal(std::mt19937_64& rng, const Ring& ring, const FuzzConfig& c, bool proper) {
  while (true) {
    const unsigned count = draw(rng, 1, c.max_generators);
    std::vector<ExponentVector> gens;
    bool has_one = false;
    for (unsigned g = 0; g < count; ++g) {
      ExponentVector e(ring.size());
      for (std::size_t v = 0; v < ring.size(); ++v) e.set(v, draw(rng, 0, c.max_exponent));
      has_one = has_one || e.is_one();
      gens.push_back(e);
    }
    if (proper && has_one) continue;
    return minimalize(ring, std::move(gens));
  }
}

Ring side_ring(const std::vector<std::string>& letters, unsigned n) {
  std::vector<std::string> names(letters.begin(), letters.begin() + n);
  return Ring(std::move(names));
}

}  // namespace

const std::vector<std::string>& fuzz_suite_names() {
  static const std::vector<std::string> names = {"thm38",    "thm41_min", "thm41_ass", "lem22_24",
                                                 "lem32_36", "lem25_29",  "thm44",     "cor46",
                                                 "lem45",    "cor39_310", "cor43"};
  return names;
}

void validate(const FuzzConfig& c) {
  if (c.max_vars_per_side < 1 || c.max_generators < 1 || c.max_exponent < 1 || c.max_s < 1 || c.cases < 1) {
    throw std::invalid_argument("fuzz bounds must all be at least 1");
  }
  if (c.max_vars_per_side > kMaxVariables / 2) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables / 2) + " variables per side");
  }
  if (c.suites.empty()) throw std::invalid_argument("no fuzz suite selected");
  for (const auto& s : c.suites) {
    if (!suite_table().count(s)) throw std::invalid_argument("unknown fuzz suite '" + s + "'");
  }
  require_valid_characteristic(c.characteristic);
}

std::string FuzzInstance::declarations() const {
  std::ostringstream out;
  out << "ring A = " << A.to_string() << ";\n";
  out << "ring B = " << B.to_string() << ";\n";
  out << "ideal I = " << I.to_string() << " in A;\n";
  out << "ideal K = " << K.to_string() << " in A;\n";
  out << "ideal I2 = " << I2.to_string() << " in A;\n";
  out << "ideal J = " << J.to_string() << " in B;\n";
  out << "ideal L = " << L.to_string() << " in B;\n";
  return out.str();
}

std::vector<FuzzInstance> generate_instances(const FuzzConfig& c) {
  validate(c);
  static const std::vector<std::string> left = {"a", "b", "c", "d", "e", "f", "g", "h"};
  static const std::vector<std::string> right = {"x", "y", "z", "w", "u", "v", "p", "q"};
  std::mt19937_64 rng(c.seed);
  std::vector<FuzzInstance> out;
  out.reserve(c.cases);
  for (unsigned k = 0; k < c.cases; ++k) {
    FuzzInstance in;
    in.A = side_ring(left, draw(rng, 1, c.max_vars_per_side));
    in.B = side_ring(right, draw(rng, 1, c.max_vars_per_side));
    in.s = draw(rng, 1, c.max_s);
    in.I = random_ideal(rng, in.A, c, true);
    in.K = random_ideal(rng, in.A, c, false);
    in.I2 = random_ideal(rng, in.A, c, true);
    in.J = random_ideal(rng, in.B, c, true);
    in.L = random_ideal(rng, in.B, c, false);
    out.push_back(std::move(in));
  }
  return out;
}

PrimeSet ass_module_quotient_by_degree(const MonomialIdeal& ideal, unsigned i, unsigned max_degree) {
  require_nonzero_proper(ideal, "ass_module_quotient_by_degree");
  if (i == 0) throw std::invalid_argument("i must be positive");
  const MonomialIdeal lower = power(ideal, i - 1);
  const MonomialIdeal upper = power(ideal, i);
  const Ring& ring = ideal.ring();
  PrimeSet out;
  ExponentVector m(ring.size());
  // Depth-first over exponent vectors with total degree <= max_degree.
  std::function<void(std::size_t, unsigned)> visit = [&](std::size_t v, unsigned budget) {
    if (v == ring.size()) {
      if (!lower.contains(m) || upper.contains(m)) return;
      const MonomialIdeal q = colon(upper, m);
      if (q.generators().back().degree() == 1) {  // canonical order ends with the largest degree
        out.emplace_back(ring, q.lcm_of_generators().support());
      }
      return;
    }
    for (unsigned e = 0; e <= budget; ++e) {
      m.set(v, e);
      visit(v + 1, budget - e);
    }
    m.set(v, 0);
  };
  visit(0, max_degree);
  normalize(out);
  return out;
}

bool FuzzReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& r) { return r.passed(); });
}

std::string FuzzReport::to_text() const {
  std::ostringstream out;
  out << "fuzz seed=" << config.seed << " cases=" << config.cases << " char=" << config.characteristic << "\n";
  for (const auto& r : suites) {
    out << r.suite << ": " << r.passes << "/" << r.cases << " passed, " << r.not_applicable
        << " partially applicable\n";
    if (!r.failures.empty()) {
      const FuzzFailure& f = r.failures.front();
      out << "  first counterexample (case " << f.case_index << "): " << f.check << "\n";
      out << "  expected: " << f.expected << "\n";
      out << "  actual:   " << f.actual << "\n";
      out << "  script:\n";
      std::istringstream lines(f.instance_script);
      for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
    }
  }
  return out.str();
}

std::string FuzzReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["seed"] = config.seed;
  j["characteristic"] = config.characteristic;
  j["bounds"] = {{"max_vars_per_side", config.max_vars_per_side},
                 {"max_generators", config.max_generators},
                 {"max_exponent", config.max_exponent},
                 {"max_s", config.max_s}};
  j["suites"] = nlohmann::ordered_json::array();
  for (const auto& r : suites) {
    nlohmann::ordered_json s;
    s["suite"] = r.suite;
    s["cases"] = r.cases;
    s["passes"] = r.passes;
    s["not_applicable"] = r.not_applicable;
    s["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : r.failures) {
      s["failures"].push_back({{"case", f.case_index},
                               {"check", f.check},
                               {"instance_script", f.instance_script},
                               {"expected", f.expected},
                               {"actual", f.actual}});
    }
    j["suites"].push_back(s);
  }
  j["passed"] = passed();
  return j.dump(2);
}

FuzzReport run_fuzz(const FuzzConfig& config) {
  const std::vector<FuzzInstance> instances = generate_instances(config);
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, config.cases);

  FuzzReport report{config, {}};
  for (const auto& name : config.suites) {
    const SuiteFn& fn = suite_table().at(name);
    std::vector<CaseOutcome> outcomes(instances.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t k; (k = next.fetch_add(1)) < instances.size();) {
        try {
          outcomes[k] = fn(instances[k], config.characteristic);
        } catch (const std::exception& e) {
          outcomes[k] = CaseOutcome{false, false, "exception", "no exception", e.what(), ""};
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    // Merge in generation order.
    SuiteResult result{name, static_cast<unsigned>(instances.size()), 0, 0, {}};
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
      const CaseOutcome& o = outcomes[k];
      if (o.partial) ++result.not_applicable;
      if (o.passed) {
        ++result.passes;
      } else {
        result.failures.push_back({k, o.check, instances[k].declarations() + o.script, o.expected, o.actual});
      }
    }
    report.suites.push_back(std::move(result));
  }
  return report;
}

}  // namespace idealkit
