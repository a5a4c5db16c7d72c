#include <random>
#include <set>

#include "doctest.h"
#include "idealkit/fuzz.hpp"
#include "oracles.hpp"

using namespace idealkit;

namespace {

MonomialIdeal ideal(const Ring& r, std::vector<std::vector<int>> gens) {
  std::vector<ExponentVector> e;
  for (auto& g : gens) e.emplace_back(g);
  return minimalize(r, e);
}

MonomialPrime prime(const Ring& r, std::uint32_t support) { return MonomialPrime(r, support); }

std::set<std::string> rendered(const std::vector<IrreducibleComponent>& cs) {
  std::set<std::string> out;
  for (const auto& c : cs) out.insert(c.to_string());
  return out;
}

PrimeSet sorted(PrimeSet p) {
  normalize(p);
  return p;
}

}  // namespace

TEST_CASE("irreducible decomposition examples") {
  const Ring A({"a", "b"});
  const auto I = ideal(A, {{2, 0}, {1, 1}});
  const auto comps = irreducible_decomposition(I);
  CHECK(rendered(comps) == std::set<std::string>{"(a)", "(b, a^2)"});
  CHECK(intersect(comps[0].to_ideal(), comps[1].to_ideal()) == I);

  const Ring R({"x", "y", "z", "t"});
  const auto E = ideal(R, {{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 1, 1}});
  std::set<std::string> expected;
  for (auto g : {ideal(R, {{1, 0, 0, 0}, {0, 0, 1, 0}}), ideal(R, {{1, 0, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 1}}),
                 ideal(R, {{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}),
                 ideal(R, {{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 1}})}) {
    expected.insert(g.to_string());
  }
  CHECK(rendered(irreducible_decomposition(E)) == expected);

  const Ring x({"x"});
  CHECK(rendered(irreducible_decomposition(ideal(x, {{3}}))) == std::set<std::string>{"(x^3)"});
  CHECK_THROWS(irreducible_decomposition(MonomialIdeal::zero(x)));
  CHECK_THROWS(irreducible_decomposition(MonomialIdeal::unit(x)));
}

TEST_CASE("decompositions of random ideals are exact and irredundant") {
  const Ring r({"x", "y", "z", "w"});
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    const auto I = oracle::random_ideal(rng, r, 5, 3);
    const auto comps = irreducible_decomposition(I);
    MonomialIdeal acc = MonomialIdeal::unit(r);
    for (const auto& c : comps) acc = intersect(acc, c.to_ideal());
    REQUIRE(acc == I);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      MonomialIdeal others = MonomialIdeal::unit(r);
      for (std::size_t j = 0; j < comps.size(); ++j) {
        if (j != i) others = intersect(others, comps[j].to_ideal());
      }
      CHECK(others != I);
    }

    const auto pd = primary_decomposition(I);
    CHECK(pd.intersection(r) == I);
    std::set<std::uint32_t> radicals;
    for (const auto& [p, q] : pd.components) {
      CHECK(radical(q) == p.to_ideal());
      radicals.insert(p.support());
      MonomialIdeal others = MonomialIdeal::unit(r);
      for (const auto& [p2, q2] : pd.components) {
        if (!(p2 == p)) others = intersect(others, q2);
      }
      CHECK_FALSE(q.contains(others));
    }
    CHECK(radicals.size() == pd.components.size());

    // Associated primes: I : m is prime for some monomial m.
    for (const auto& p : associated_primes(I)) {
      bool witnessed = false;
      for (const auto& m : oracle::box(I.lcm_of_generators())) {
        if (!I.contains(m) && colon(I, m) == p.to_ideal()) witnessed = true;
      }
      CHECK(witnessed);
    }
  }
}

TEST_CASE("primary decomposition examples") {
  const Ring A({"a", "b"});
  const auto I = ideal(A, {{2, 0}, {1, 1}});
  CHECK(primary_decomposition(I).to_string() == "{(a) => (a), (a, b) => (b, a^2)}");
  const auto m2 = power(MonomialIdeal::generated_by_variables(A, 0b11), 2);
  const auto pd = primary_decomposition(m2);
  REQUIRE(pd.components.size() == 1);
  CHECK(pd.components[0].second == m2);

  const Ring R({"x", "y", "z", "t"});
  const auto E = ideal(R, {{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 1, 1}});
  CHECK(primary_decomposition(E).primes() ==
        sorted({prime(R, 0b0101), prime(R, 0b1101), prime(R, 0b0111), prime(R, 0b1111)}));
}

TEST_CASE("associated and minimal primes") {
  const Ring A({"a", "b"});
  const auto I = ideal(A, {{2, 0}, {1, 1}});
  CHECK(associated_primes(I) == sorted({prime(A, 0b01), prime(A, 0b11)}));
  CHECK(minimal_primes(I) == PrimeSet{prime(A, 0b01)});
  const Ring R({"x", "y", "z", "t"});
  const auto E = ideal(R, {{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 1, 1}});
  CHECK(minimal_primes(E) == PrimeSet{prime(R, 0b0101)});
  const Ring xy({"x", "y"});
  const auto P = MonomialIdeal::generated_by_variables(xy, 0b11);
  CHECK(associated_primes(P) == PrimeSet{prime(xy, 0b11)});
  CHECK(minimal_primes(P) == PrimeSet{prime(xy, 0b11)});
}

TEST_CASE("bounded Ass*") {
  const Ring A({"a", "b"});
  const auto I = ideal(A, {{2, 0}, {1, 1}});
  auto star = ass_star_bounded(I, 3);
  CHECK(star.primes == sorted({prime(A, 0b01), prime(A, 0b11)}));
  CHECK(star.stabilized);
  const Ring xy({"x", "y"});
  star = ass_star_bounded(MonomialIdeal::generated_by_variables(xy, 0b11), 2);
  CHECK(star.primes == PrimeSet{prime(xy, 0b11)});
  CHECK(star.stabilized);
  const auto J = ideal(xy, {{2, 1}, {1, 2}});
  star = ass_star_bounded(J, 4);
  CHECK(is_subset(sorted({prime(xy, 0b01), prime(xy, 0b10), prime(xy, 0b11)}), star.primes));
  CHECK_THROWS(ass_star_bounded(J, 1));
}

TEST_CASE("grade zero") {
  const Ring A({"a", "b"});
  const auto I = ideal(A, {{2, 0}, {1, 1}});
  CHECK(grade_zero(prime(A, 0b11), I));
  CHECK(grade_zero(prime(A, 0b10), I));  // (b) lies in (a, b)
  CHECK_FALSE(grade_zero(prime(A, 0b10), ideal(A, {{1, 0}})));
  const Ring x({"x"});
  CHECK(grade_zero(prime(x, 0b1), ideal(x, {{1}})));
}

TEST_CASE("associated primes of power quotients") {
  const Ring A({"a", "b"});
  const auto I = ideal(A, {{2, 0}, {1, 1}});
  CHECK(ass_module_quotient(I, 1) == associated_primes(I));
  CHECK_THROWS(ass_module_quotient(I, 0));

  // Exhaustive cross-check with a degree cap well beyond the search box, and
  // the sandwich Ass(I^{i-1}/I^i) in Ass(A/I^i) in Ass(I^{i-1}/I^i) + Ass(A/I^{i-1}).
  const Ring r({"x", "y", "z"});
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const auto J = oracle::random_ideal(rng, r, 3, 2);
    for (unsigned i = 1; i <= 3; ++i) {
      const auto fast = ass_module_quotient(J, i);
      const int cap = power(J, i).lcm_of_generators().degree() + power(J, i - 1).lcm_of_generators().degree();
      CHECK(fast == ass_module_quotient_by_degree(J, i, static_cast<unsigned>(cap)));
      const auto ass_i = associated_primes(power(J, i));
      CHECK(is_subset(fast, ass_i));
      if (i >= 2) CHECK(is_subset(ass_i, set_union(fast, associated_primes(power(J, i - 1)))));
    }
  }
}
