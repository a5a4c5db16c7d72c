// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "idealkit/fuzz.hpp"
#include "oracles.hpp"

using namespace idealkit;

namespace {

constexpr std::uint64_t kSeed = 1;

struct Outcome {
  bool passed;
  std::string detail;
};

bool run_criterion(int number, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < limit_seconds;
  const bool ok = o.passed && in_time;
  std::printf("criterion %2d %s: %s (%s; %.2f s, limit %.0f s)\n", number, ok ? "PASS" : "FAIL", title,
              o.detail.c_str(), secs, limit_seconds);
  std::fflush(stdout);
  return ok;
}

MonomialIdeal ideal(const Ring& r, std::vector<std::vector<int>> gens) {
  std::vector<ExponentVector> e;
  for (auto& g : gens) e.emplace_back(g);
  return minimalize(r, e);
}

Outcome fuzz(const std::vector<std::string>& suites, unsigned cases, Characteristic p = 0) {
  FuzzConfig c;
  c.seed = kSeed;
  c.cases = cases;
  c.suites = suites;
  c.characteristic = p;
  const FuzzReport r = run_fuzz(c);
  std::ostringstream detail;
  bool ok = true;
  for (const auto& s : r.suites) {
    if (detail.tellp() > 0) detail << ", ";
    detail << s.suite;
    if (p) detail << " char " << p;
    detail << " " << s.passes << "/" << s.cases;
    if (s.not_applicable) detail << " (" << s.not_applicable << " partial)";
    ok = ok && s.passed();
    if (!s.failures.empty()) {
      const auto& f = s.failures.front();
      detail << " first failure case " << f.case_index << " " << f.check;
    }
  }
  return {ok, detail.str()};
}

Outcome criterion1() {
  const Ring A({"a", "b"});
  const auto I = ideal(A, {{2, 0}, {1, 1}});
  const auto m = ideal(A, {{1, 0}, {0, 1}});
  unsigned good = 0;
  for (unsigned s = 1; s <= 10; ++s) {
    good += symbolic_min(I, s) == ideal(A, {{static_cast<int>(s), 0}});
    good += symbolic_ass(I, s) == power(I, s);
    good += saturator_min(I, s) == m;
  }
  const auto w = regular_witness(I, SymbolicNotion::minimal, default_ass_star_bound(I));
  // A witness lies in the global saturator and outside every minimal prime.
  const auto K = saturator_min_global(I, default_ass_star_bound(I));
  const auto mins = minimal_primes(I);
  auto valid = [&](const ExponentVector& e) {
    if (!K.contains(e)) return false;
    for (const auto& p : mins) {
      if (!p.avoids(e)) return false;
    }
    return true;
  };
  std::set<std::string> degree_one;
  for (std::size_t v = 0; v < A.size(); ++v) {
    const auto x = Monomial::variable(A, v);
    if (valid(x.exponents)) degree_one.insert(x.to_string());
  }
  const bool witness_ok = w && valid(w->exponents) && degree_one.count("b");
  return {good == 30 && witness_ok, std::to_string(good) + "/30 power identities, witness " +
                                        (w ? w->to_string() : std::string("none"))};
}

Outcome criterion2() {
  const Ring R({"x", "y", "z", "t"});
  const auto S = ideal(R, {{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 1, 1}});
  std::set<std::string> expected = {
      ideal(R, {{1, 0, 0, 0}, {0, 0, 1, 0}}).to_string(),
      ideal(R, {{1, 0, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 1}}).to_string(),
      ideal(R, {{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}).to_string(),
      ideal(R, {{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 1}}).to_string(),
  };
  std::set<std::string> actual;
  const auto comps = irreducible_decomposition(S);
  for (const auto& c : comps) actual.insert(c.to_string());
  const auto E = ideal(R, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  const auto sat = saturate(S, E);
  const auto expected_sat = ideal(R, {{1, 0, 1, 0}, {2, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 1, 1}});
  const bool ok = comps.size() == 4 && actual == expected && sat == expected_sat;
  return {ok, std::to_string(comps.size()) + " components, saturation " + sat.to_string()};
}

Outcome criterion11() {
  std::mt19937_64 rng(kSeed);
  unsigned good = 0;
  std::size_t multidegrees = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    const Ring R(names);
    const auto I = oracle::random_ideal(rng, R, 5, 3);
    bool ok = true;
    for (Characteristic p : {0u, 2u}) {
      const auto expected = oracle::taylor_betti(I, p);
      const auto table = betti_table(I, p);
      std::size_t nonzero = 0;
      for (const auto& e : table.entries()) {
        if (e.value == 0) continue;
        ++nonzero;
        const auto it = expected.find({e.homological_degree, oracle::exponents(e.multidegree)});
        ok = ok && it != expected.end() && it->second == e.value;
      }
      ok = ok && nonzero == expected.size();
      multidegrees += expected.size();
      ok = ok && table.depth() + ExtendedInt(table.projective_dimension()) == ExtendedInt(static_cast<long long>(n));
    }
    good += ok;
  }
  return {good == 50, std::to_string(good) + "/50 ideals, " + std::to_string(multidegrees) + " nonzero entries"};
}

}  // namespace

int main() {
  bool all = true;
  all &= run_criterion(1, "two-variable example, s = 1..10 and witness", 1, criterion1);
  all &= run_criterion(2, "four-variable decomposition and saturation", 1, criterion2);
  all &= run_criterion(3, "saturated binomial expansion fuzz", 60, [] { return fuzz({"thm38"}, 500); });
  all &= run_criterion(4, "symbolic binomial expansion fuzz", 120, [] { return fuzz({"thm41_min", "thm41_ass"}, 300); });
  all &= run_criterion(5, "symbolic power routes fuzz", 600, [] { return fuzz({"lem22_24"}, 300); });
  all &= run_criterion(6, "filtration identity fuzz", 600, [] { return fuzz({"lem32_36"}, 300); });
  all &= run_criterion(7, "associated-prime structure fuzz", 600, [] { return fuzz({"lem25_29"}, 200); });
  all &= run_criterion(8, "depth and regularity fuzz", 600, [] {
    const Outcome a = fuzz({"thm44", "cor46"}, 100, 0);
    const Outcome b = fuzz({"thm44", "cor46"}, 100, 2);
    return Outcome{a.passed && b.passed, a.detail + ", " + b.detail};
  });
  all &= run_criterion(9, "equality criteria fuzz", 600, [] { return fuzz({"cor39_310", "cor43"}, 200); });
  all &= run_criterion(10, "derivative containment fuzz", 600, [] { return fuzz({"lem45"}, 300); });
  all &= run_criterion(11, "Betti numbers against the Taylor complex", 600, criterion11);
  std::printf("%s\n", all ? "all criteria passed" : "some criteria failed");
  return all ? 0 : 1;
}
