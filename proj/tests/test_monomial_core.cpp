#include <algorithm>
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

}  // namespace

TEST_CASE("rings validate names and compare by value") {
  CHECK_THROWS_AS(Ring({"x", "x"}), std::invalid_argument);
  CHECK_THROWS_AS(Ring({""}), std::invalid_argument);
  CHECK(Ring({"x", "y"}) == Ring({"x", "y"}));
  CHECK_FALSE(Ring({"x", "y"}) == Ring({"y", "x"}));
  CHECK(Ring({"x", "y"}).to_string() == "[x, y]");
  std::vector<std::string> too_many;
  for (int i = 0; i < 17; ++i) too_many.push_back("v" + std::to_string(i));
  CHECK_THROWS(Ring(too_many));
}

TEST_CASE("monomial rendering and arithmetic") {
  const Ring r({"x", "y"});
  CHECK(render_monomial(r, ExponentVector{2, 1}) == "x^2*y");
  CHECK(render_monomial(r, ExponentVector{0, 0}) == "1");
  CHECK(lcm(ExponentVector{2, 0}, ExponentVector{1, 3}) == ExponentVector{2, 3});
  CHECK(gcd(ExponentVector{2, 0}, ExponentVector{1, 3}) == ExponentVector{1, 0});
  CHECK(colon(ExponentVector{2, 1}, ExponentVector{1, 4}) == ExponentVector{1, 0});
  CHECK_THROWS(ExponentVector{65535, 0} * ExponentVector{1, 0});
}

TEST_CASE("contains") {
  const Ring A({"a", "b"});
  const auto I = ideal(A, {{2, 0}, {1, 1}});
  CHECK(I.contains(ExponentVector{3, 0}));
  CHECK_FALSE(I.contains(ExponentVector{0, 5}));
  CHECK(MonomialIdeal::unit(A).contains(ExponentVector{0, 0}));
  CHECK_THROWS_AS(contains(I, Monomial(Ring({"x", "y"}), ExponentVector{1, 1})), RingMismatch);
}

TEST_CASE("minimalize") {
  const Ring A({"a", "b"});
  CHECK(ideal(A, {{2, 0}, {3, 0}, {1, 1}}).to_string() == "(a^2, a*b)");
  CHECK(ideal(A, {}).is_zero());
  CHECK(ideal(A, {{0, 0}, {1, 0}}).is_unit());
  CHECK(MonomialIdeal::zero(A).to_string() == "(0)");
  CHECK(MonomialIdeal::unit(A).to_string() == "(1)");
}

TEST_CASE("canonical form ignores generator order") {
  const Ring r({"x", "y", "z"});
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<ExponentVector> gens;
    for (int g = 0; g < 6; ++g) {
      gens.push_back(ExponentVector{int(rng() % 4), int(rng() % 4), int(rng() % 4)});
    }
    const auto reference = minimalize(r, gens);
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(minimalize(r, gens) == reference);
    CHECK(minimalize(r, reference.generators()) == reference);
    CHECK(oracle::naive_ideal(r, gens) == reference);
  }
}

TEST_CASE("sum, product, power") {
  const Ring A({"a", "b"});
  const auto I = ideal(A, {{2, 0}, {1, 1}});
  CHECK(power(I, 2) == ideal(A, {{4, 0}, {3, 1}, {2, 2}}));
  CHECK(power(I, 0).is_unit());
  const Ring xy({"x", "y"});
  CHECK(product(ideal(xy, {{1, 0}}), ideal(xy, {{0, 1}})) == ideal(xy, {{1, 1}}));
  CHECK(sum(ideal(xy, {{1, 0}}), ideal(xy, {{0, 1}})) == ideal(xy, {{1, 0}, {0, 1}}));
  CHECK_THROWS_AS(sum(I, ideal(xy, {{1, 0}})), RingMismatch);
}

TEST_CASE("intersect") {
  const Ring xy({"x", "y"});
  CHECK(intersect(ideal(xy, {{1, 0}}), ideal(xy, {{0, 1}})) == ideal(xy, {{1, 1}}));
  const Ring A({"a", "b"});
  const auto I = ideal(A, {{2, 0}, {1, 1}});
  CHECK(intersect(ideal(A, {{1, 0}}), ideal(A, {{2, 0}, {0, 1}})) == I);
  CHECK(intersect(I, MonomialIdeal::unit(A)) == I);
  CHECK(intersect(I, MonomialIdeal::zero(A)).is_zero());
}

TEST_CASE("colon agrees with brute-force membership") {
  const Ring A({"a", "b"});
  const auto I = ideal(A, {{2, 0}, {1, 1}});
  const auto m = ideal(A, {{1, 0}, {0, 1}});
  const auto q = colon(I, m);
  CHECK(q == ideal(A, {{1, 0}}));
  for (const auto& e : oracle::up_to_degree(2, 3)) CHECK(q.contains(e) == oracle::in_colon(I, m, e));
  CHECK(colon(I, MonomialIdeal::unit(A)) == I);
  CHECK(colon(ideal(A, {{1, 0}}), ideal(A, {{1, 0}})).is_unit());
  CHECK_THROWS_AS(colon(I, MonomialIdeal::zero(A)), std::invalid_argument);
}

TEST_CASE("colon and saturation properties on random ideals") {
  const Ring r({"x", "y", "z"});
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto I = oracle::random_ideal(rng, r, 4, 3);
    const auto K = oracle::random_ideal(rng, r, 3, 2);
    const auto K2 = oracle::random_ideal(rng, r, 3, 2);
    const auto q = colon(I, K);
    const auto sat = saturate(I, K);
    for (const auto& e : oracle::up_to_degree(3, 6)) {
      REQUIRE(q.contains(e) == oracle::in_colon(I, K, e));
      REQUIRE(sat.contains(e) == oracle::in_saturation(I, K, e));
    }
    CHECK(q.contains(I));
    CHECK(colon(q, K2) == colon(I, product(K, K2)));
    CHECK(colon(I, K).contains(colon(I, sum(K, K2))));  // antitone in K
    CHECK(colon(sum(I, K2), K).contains(q));            // monotone in I
    CHECK(saturate(sat, K) == sat);
    CHECK(sat.contains(I));
    CHECK(intersect(I, K).contains(product(I, K)));
    CHECK(intersect(I, K) == intersect(K, I));
    CHECK(intersect(I, intersect(K, K2)) == intersect(intersect(I, K), K2));
    CHECK(intersect(I, I) == I);
  }
}

TEST_CASE("saturation examples") {
  const Ring R({"x", "y", "z", "t"});
  const auto I = ideal(R, {{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 1, 1}});
  const auto E = MonomialIdeal::generated_by_variables(R, 0b1111);
  CHECK(saturate(I, E) == ideal(R, {{1, 0, 1, 0}, {2, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 1, 1}}));
  const Ring A({"a", "b"});
  const auto J = ideal(A, {{2, 0}, {1, 1}});
  CHECK(saturate(J, ideal(A, {{1, 0}, {0, 1}})) == ideal(A, {{1, 0}}));
  CHECK(saturate(J, MonomialIdeal::unit(A)) == J);
  CHECK_THROWS_AS(saturate(J, MonomialIdeal::zero(A)), std::invalid_argument);
}

TEST_CASE("product equals intersection in disjoint variables") {
  const Ring r({"a", "b", "x", "y"});
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto I = oracle::random_ideal(rng, r, 3, 3);
    auto J = oracle::random_ideal(rng, r, 3, 3);
    // Restrict I to {a, b} and J to {x, y}.
    std::vector<ExponentVector> gi, gj;
    for (auto g : I.generators()) {
      g.set(2, 0);
      g.set(3, 0);
      gi.push_back(g);
    }
    for (auto g : J.generators()) {
      g.set(0, 0);
      g.set(1, 0);
      gj.push_back(g);
    }
    const auto a = minimalize(r, gi);
    const auto b = minimalize(r, gj);
    CHECK(product(a, b) == intersect(a, b));
  }
}

TEST_CASE("radical") {
  const Ring A({"a", "b"});
  CHECK(radical(ideal(A, {{2, 0}, {1, 1}})) == ideal(A, {{1, 0}}));
  const Ring xy({"x", "y"});
  CHECK(radical(ideal(xy, {{2, 3}})) == ideal(xy, {{1, 1}}));
  CHECK(radical(MonomialIdeal::unit(xy)).is_unit());
}
