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

TEST_CASE("saturated powers of (a^2, a*b)") {
  const Ring A({"a", "b"});
  const auto I = ideal(A, {{2, 0}, {1, 1}});
  CHECK(saturated_power(I, ideal(A, {{1, 0}, {0, 1}}), 2) == ideal(A, {{2, 0}}));
  CHECK(saturated_power(I, ideal(A, {{0, 1}}), 3) == ideal(A, {{3, 0}}));
  CHECK(saturated_power(I, MonomialIdeal::unit(A), 3) == power(I, 3));
  CHECK(saturated_power(I, ideal(A, {{0, 1}}), 0).is_unit());
}

TEST_CASE("saturators") {
  const Ring A({"a", "b"});
  const auto I = ideal(A, {{2, 0}, {1, 1}});
  const auto m = ideal(A, {{1, 0}, {0, 1}});
  for (unsigned s = 1; s <= 5; ++s) {
    CHECK(saturator_min(I, s) == m);
    CHECK(saturator_ass(I, s).is_unit());
  }
  CHECK(saturator_min_global(I, 4) == m);
  CHECK(saturator_ass_global(I, 4).is_unit());

  const Ring xy({"x", "y"});
  const auto P = MonomialIdeal::generated_by_variables(xy, 0b11);
  CHECK(saturator_min(P, 3).is_unit());
  CHECK(saturator_ass(ideal(xy, {{1, 0}}), 2).is_unit());

  // Cut primes of the four-component example.
  const Ring R({"x", "y", "z", "t"});
  const auto E = ideal(R, {{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 1, 1}});
  const auto expected = intersect(intersect(MonomialIdeal::generated_by_variables(R, 0b1101),
                                            MonomialIdeal::generated_by_variables(R, 0b0111)),
                                  MonomialIdeal::generated_by_variables(R, 0b1111));
  CHECK(saturator_min(E, 1) == expected);
  // Every prime of Ass(E) has grade zero on R/E, so nothing is cut.
  CHECK(saturator_ass(E, 1).is_unit());
}

TEST_CASE("symbolic power examples") {
  const Ring A({"a", "b"});
  const auto I = ideal(A, {{2, 0}, {1, 1}});
  CHECK(symbolic_min(I, 3) == ideal(A, {{3, 0}}));
  CHECK(symbolic_ass(I, 2) == ideal(A, {{4, 0}, {3, 1}, {2, 2}}));
  CHECK(symbolic_min(I, 0).is_unit());
  const Ring xy({"x", "y"});
  const auto P = MonomialIdeal::generated_by_variables(xy, 0b11);
  CHECK(symbolic_min(P, 2) == power(P, 2));
  CHECK(symbolic_ass(ideal(xy, {{1, 0}}), 3) == ideal(xy, {{3, 0}}));
  CHECK(symbolic_ass(ideal(xy, {{2, 0}, {1, 1}}), 1) == ideal(xy, {{2, 0}, {1, 1}}));
  const Ring xyz({"x", "y", "z"});
  const auto T = ideal(xyz, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  CHECK(symbolic_min(T, 2) == saturated_power(T, saturator_min(T, 2), 2));
  CHECK(symbolic_min(T, 2) == oracle::symbolic_min_by_localization(T, 2));
  CHECK(symbolic_min(T, 2) != power(T, 2));  // x*y*z is a new element
}

TEST_CASE("symbolic powers agree with localization and all saturation routes") {
  const Ring r({"x", "y", "z"});
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const auto I = oracle::random_ideal(rng, r, 4, 3);
    const unsigned n_max = default_ass_star_bound(I);
    for (unsigned s = 1; s <= 3; ++s) {
      const auto smin = symbolic_min(I, s);
      const auto sass = symbolic_ass(I, s);
      REQUIRE(smin == oracle::symbolic_min_by_localization(I, s));
      REQUIRE(sass == oracle::symbolic_ass_by_localization(I, s));
      CHECK(smin == saturated_power(I, saturator_min(I, s), s));
      CHECK(sass == saturated_power(I, saturator_ass(I, s), s));
      CHECK(smin == saturated_power(I, saturator_min_global(I, std::max(s, n_max)), s));
      CHECK(sass == saturated_power(I, saturator_ass_global(I, std::max(s, n_max)), s));
      // Sandwich.
      CHECK(sass.contains(power(I, s)));
      CHECK(smin.contains(sass));

      // Colon bounds for monomials avoiding the relevant primes.
      const auto mins = minimal_primes(I);
      const auto ass = associated_primes(I);
      for (const auto& y : oracle::up_to_degree(3, 2)) {
        auto avoids_all = [&](const PrimeSet& ps) {
          for (const auto& p : ps) {
            if (!p.avoids(y)) return false;
          }
          return true;
        };
        if (avoids_all(mins)) CHECK(smin.contains(colon(power(I, s), y)));
        if (avoids_all(ass)) CHECK(sass.contains(colon(power(I, s), y)));
      }
    }
  }
}

TEST_CASE("regular witnesses") {
  const Ring A({"a", "b"});
  const auto I = ideal(A, {{2, 0}, {1, 1}});
  auto w = regular_witness(I, SymbolicNotion::minimal, 4);
  REQUIRE(w);
  CHECK(w->to_string() == "b");
  CHECK(saturated_power(I, MonomialIdeal::principal(*w), 3) == symbolic_min(I, 3));

  const Ring xy({"x", "y"});
  w = regular_witness(MonomialIdeal::generated_by_variables(xy, 0b11), SymbolicNotion::minimal, 3);
  REQUIRE(w);
  CHECK(w->exponents.is_one());

  const Ring xyz({"x", "y", "z"});
  const auto T = ideal(xyz, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  w = regular_witness(T, SymbolicNotion::associated, 4);
  if (w) {
    for (const auto& p : associated_primes(T)) CHECK(p.avoids(w->exponents));
  }
}

TEST_CASE("notion parsing") {
  CHECK(parse_notion("min") == SymbolicNotion::minimal);
  CHECK(parse_notion("ass") == SymbolicNotion::associated);
  CHECK_FALSE(parse_notion("max"));
  CHECK(to_string(SymbolicNotion::associated) == "ass");
}
