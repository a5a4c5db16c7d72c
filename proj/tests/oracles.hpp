#pragma once

// Brute-force reference computations used only by the tests. None of them
// calls the library routine it is meant to check.

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "idealkit/homology.hpp"

namespace oracle {

using idealkit::ExponentVector;
using idealkit::MonomialIdeal;
using idealkit::Ring;

// Every exponent vector with entries in [0, bound[i]].
std::vector<ExponentVector> box(const ExponentVector& bound);
// Every exponent vector of total degree <= d.
std::vector<ExponentVector> up_to_degree(std::size_t nvars, int d);

bool divides_some(const MonomialIdeal& I, const ExponentVector& m);

// m lies in I : K iff m * g lies in I for every generator g of K.
bool in_colon(const MonomialIdeal& I, const MonomialIdeal& K, const ExponentVector& m);
// m lies in I : K^oo iff m * g^N lies in I for every generator g, N large.
bool in_saturation(const MonomialIdeal& I, const MonomialIdeal& K, const ExponentVector& m);

// Ideal generated by the given monomials, minimalized by pairwise divisibility.
MonomialIdeal naive_ideal(const Ring& ring, const std::vector<ExponentVector>& gens);

// Symbolic powers by localization: intersect I^s : u_P^oo over the relevant
// primes P, with u_P the product of the variables outside P.
MonomialIdeal symbolic_min_by_localization(const MonomialIdeal& I, unsigned s);
MonomialIdeal symbolic_ass_by_localization(const MonomialIdeal& I, unsigned s);

// Multigraded Betti numbers of R/I from the Taylor complex tensored with the
// field: in degree b the basis is the generator subsets with lcm exactly b.
// Ranks over Q use GMP rationals; otherwise arithmetic mod p.
std::map<std::pair<unsigned, std::vector<int>>, std::uint64_t> taylor_betti(const MonomialIdeal& I,
                                                                              std::uint32_t characteristic);

// (f / x_i) over every monomial f of I with degree <= cap and every x_i | f.
MonomialIdeal deriv_star_by_definition(const MonomialIdeal& I, int cap);

MonomialIdeal random_ideal(std::mt19937_64& rng, const Ring& ring, unsigned max_gens, unsigned max_exp);

std::vector<int> exponents(const ExponentVector& e);

}  // namespace oracle
