#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace idealkit;

namespace {

MonomialIdeal ideal(const Ring& r, std::vector<std::vector<int>> gens) {
  std::vector<ExponentVector> e;
  for (auto& g : gens) e.emplace_back(g);
  return minimalize(r, e);
}

// Direct saturation of (I+J)^s by KL computed with the brute-force membership
// oracle over a box, returned as the ideal of the monomials found.
MonomialIdeal saturation_oracle(const MonomialIdeal& IJ, const MonomialIdeal& KL, unsigned s) {
  const auto Ps = power(IJ, s);
  std::vector<ExponentVector> found;
  for (const auto& m : oracle::box(Ps.lcm_of_generators())) {
    if (oracle::in_saturation(Ps, KL, m)) found.push_back(m);
  }
  return oracle::naive_ideal(IJ.ring(), found);
}

}  // namespace

TEST_CASE("joining rings") {
  const auto j = join_rings(Ring({"x", "y"}), Ring({"z", "t"}));
  CHECK(j.ring.to_string() == "[x, y, z, t]");
  CHECK(j.left.index_map == std::vector<std::size_t>{0, 1});
  CHECK(j.right.index_map == std::vector<std::size_t>{2, 3});
  CHECK(join_rings(Ring({"x"}), Ring({"x"})).ring.to_string() == "[x, x_1]");
  CHECK(join_rings(Ring({"x", "x_1"}), Ring({"x"})).ring.to_string() == "[x, x_1, x_2]");
  CHECK(join_rings(Ring({"a", "b"}), Ring({"c", "d"})).ring.to_string() == "[a, b, c, d]");
}

TEST_CASE("extension") {
  const Ring A({"x", "y"});
  const auto j = join_rings(A, Ring({"z", "t"}));
  const auto I = ideal(A, {{2, 0}, {1, 1}});
  CHECK(extend(I, j.left) == ideal(j.ring, {{2, 0, 0, 0}, {1, 1, 0, 0}}));
  CHECK(extend(MonomialIdeal::unit(A), j.left).is_unit());
  CHECK(extend(MonomialIdeal::zero(A), j.left).is_zero());
  CHECK_THROWS_AS(extend(I, j.right), RingMismatch);
}

TEST_CASE("saturated binomial expansion examples") {
  const Ring A({"x", "y"});
  const Ring B({"z", "t"});
  const auto R = join_rings(A, B).ring;
  const auto I = ideal(A, {{2, 0}, {1, 1}});
  const auto K = ideal(A, {{1, 0}, {0, 1}});
  const auto J = ideal(B, {{2, 0}, {1, 1}});
  const auto L = ideal(B, {{1, 0}, {0, 1}});
  const auto IJ = ideal(R, {{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 1, 1}});
  const auto KL = product(ideal(R, {{1, 0, 0, 0}, {0, 1, 0, 0}}), ideal(R, {{0, 0, 1, 0}, {0, 0, 0, 1}}));

  CHECK(binomial_saturated(I, K, J, L, 1) == ideal(R, {{1, 0, 0, 0}, {0, 0, 1, 0}}));
  CHECK(binomial_saturated(I, K, J, L, 2) == ideal(R, {{2, 0, 0, 0}, {1, 0, 1, 0}, {0, 0, 2, 0}}));
  for (unsigned s = 1; s <= 3; ++s) {
    CHECK(direct_saturated(I, K, J, L, s) == saturation_oracle(IJ, KL, s));
    CHECK(binomial_saturated(I, K, J, L, s) == direct_saturated(I, K, J, L, s));
    CHECK(binomial_saturated(I, MonomialIdeal::unit(A), J, MonomialIdeal::unit(B), s) == power(IJ, s));
    CHECK(check_binomial_saturated(I, K, J, L, s).passed());
  }
  CHECK_THROWS(binomial_saturated(I, K, J, L, 0));
  CHECK_THROWS(binomial_saturated(I, MonomialIdeal::zero(A), J, L, 1));
}

TEST_CASE("saturated expansion against the membership oracle on random data") {
  std::mt19937_64 rng(29);
  const Ring A({"a", "b"});
  const Ring B({"x", "y"});
  const auto joined = join_rings(A, B);
  for (int trial = 0; trial < 30; ++trial) {
    const auto I = oracle::random_ideal(rng, A, 3, 2);
    const auto K = oracle::random_ideal(rng, A, 2, 2);
    const auto J = oracle::random_ideal(rng, B, 3, 2);
    const auto L = oracle::random_ideal(rng, B, 2, 2);
    const auto IJ = sum(extend(I, joined.left), extend(J, joined.right));
    const auto KL = product(extend(K, joined.left), extend(L, joined.right));
    for (unsigned s = 1; s <= 2; ++s) {
      CHECK(binomial_saturated(I, K, J, L, s) == saturation_oracle(IJ, KL, s));
    }
  }
}

TEST_CASE("symbolic binomial expansion examples") {
  const Ring A({"a", "b"});
  const Ring B({"c", "d"});
  const auto R = join_rings(A, B).ring;
  const auto I = ideal(A, {{2, 0}, {1, 1}});
  const auto J = ideal(B, {{2, 0}, {1, 1}});
  CHECK(binomial_symbolic(I, J, 2, SymbolicNotion::minimal) ==
        ideal(R, {{2, 0, 0, 0}, {1, 0, 1, 0}, {0, 0, 2, 0}}));
  CHECK(binomial_symbolic(I, J, 2, SymbolicNotion::minimal) == direct_symbolic(I, J, 2, SymbolicNotion::minimal));
  const auto IJ = ideal(R, {{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 1, 1}});
  CHECK(binomial_symbolic(I, J, 2, SymbolicNotion::associated) == power(IJ, 2));

  const Ring X({"x"});
  const auto x = ideal(X, {{1}});
  CHECK(binomial_symbolic(x, x, 1, SymbolicNotion::minimal).to_string() == "(x, x_1)");
  CHECK(check_binomial_symbolic(I, J, 3, SymbolicNotion::minimal).passed());
  CHECK(check_binomial_symbolic(I, J, 3, SymbolicNotion::associated).passed());
}

TEST_CASE("equality criteria examples") {
  const Ring A({"x", "y"});
  const Ring B({"z", "t"});
  const auto x = ideal(A, {{1, 0}});
  const auto y = ideal(A, {{0, 1}});
  const auto z = ideal(B, {{1, 0}});
  const auto t = ideal(B, {{0, 1}});
  auto c = check_equality_criteria(x, y, z, t, 3);
  CHECK(c.joint_equal);
  CHECK(c.left_equal == std::vector<bool>{true, true, true});
  CHECK(c.right_equal == std::vector<bool>{true, true, true});
  CHECK(c.report.passed());

  const auto I = ideal(A, {{2, 0}, {1, 1}});
  c = check_equality_criteria(I, ideal(A, {{1, 0}, {0, 1}}), z, MonomialIdeal::unit(B), 1);
  CHECK_FALSE(c.left_equal[0]);
  CHECK(c.right_equal[0]);
  CHECK_FALSE(c.joint_equal);
  CHECK(c.report.passed());

  const Ring C({"a", "b"});
  const Ring D({"c", "d"});
  c = check_equality_criteria(ideal(C, {{2, 0}, {1, 1}}), ideal(C, {{1, 0}, {0, 1}}), ideal(D, {{2, 0}, {1, 1}}),
                              ideal(D, {{1, 0}, {0, 1}}), 2);
  CHECK_FALSE(c.joint_equal);
  CHECK_FALSE(c.left_equal[0]);
  CHECK(c.report.passed());

  const auto s = check_equality_criteria_symbolic(ideal(C, {{2, 0}, {1, 1}}), ideal(D, {{2, 0}, {1, 1}}), 2,
                                                  SymbolicNotion::associated);
  CHECK(s.joint_equal);
  CHECK(s.report.passed());
}

TEST_CASE("associated-prime structure of sums") {
  const Ring A({"a", "b"});
  const Ring B({"c", "d"});
  const auto I = ideal(A, {{2, 0}, {1, 1}});
  const auto J = ideal(B, {{2, 0}, {1, 1}});
  const auto R = join_rings(A, B);
  PrimeSet expected;
  for (std::uint32_t p : {0b01u, 0b11u}) {
    for (std::uint32_t q : {0b01u, 0b11u}) {
      expected.push_back(join_primes(MonomialPrime(A, p), MonomialPrime(B, q), R));
    }
  }
  normalize(expected);
  CHECK(associated_primes(sum(extend(I, R.left), extend(J, R.right))) == expected);
  for (unsigned s = 1; s <= 3; ++s) CHECK(check_ass_structure(I, J, s).passed());

  const Ring X({"x"});
  const Ring Z({"z"});
  CHECK(check_ass_structure(ideal(X, {{1}}), ideal(Z, {{1}}), 1).passed());
  const Ring XY({"x", "y"});
  const Ring ZT({"z", "t"});
  CHECK(check_ass_structure(ideal(XY, {{2, 0}, {1, 1}}), ideal(ZT, {{2, 0}, {1, 1}}), 1).passed());
}

TEST_CASE("filtration identities") {
  const Ring A({"a", "b"});
  const Ring B({"x", "y"});
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto I = oracle::random_ideal(rng, A, 3, 2);
    const auto K = oracle::random_ideal(rng, A, 3, 2);
    const auto J = oracle::random_ideal(rng, B, 3, 2);
    const auto L = oracle::random_ideal(rng, B, 2, 2);
    CHECK(check_filtration_identities(power_filtration(I, 3), power_filtration(K, 3), power_filtration(J, 3), K, 3)
              .passed());
    CHECK(check_filtration_identities(saturated_filtration(I, K, 3), saturated_filtration(K, K, 3),
                                      saturated_filtration(J, L, 3), K, 3)
              .passed());
    CHECK(check_filtration_identities(power_filtration(I, 1), power_filtration(K, 1), power_filtration(J, 1), K, 1)
              .passed());
  }
  const auto I = ideal(A, {{1, 0}});
  Filtration bad{{MonomialIdeal::unit(A), I, MonomialIdeal::unit(A)}};
  CHECK_THROWS(validate_filtration(bad, "bad"));
  Filtration not_unit{{I, I}};
  CHECK_THROWS(validate_filtration(not_unit, "bad"));
}
