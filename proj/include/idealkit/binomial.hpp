#pragma once

#include <optional>
#include <vector>

#include "idealkit/powers.hpp"
#include "idealkit/report.hpp"

namespace idealkit {

/// Injective re-indexing of a ring's variables into a larger ring.
struct RingEmbedding {
  Ring source;
  Ring target;
  std::vector<std::size_t> index_map;

  ExponentVector apply(const ExponentVector& e) const;
};

/// R = A (x) B: A's variables followed by B's. A variable of B whose name is
/// taken gets the suffix "_k" with the smallest free k >= 1.
struct JoinedRings {
  Ring ring;
  RingEmbedding left;
  RingEmbedding right;
};

JoinedRings join_rings(const Ring& a, const Ring& b);

MonomialIdeal extend(const MonomialIdeal& ideal, const RingEmbedding& embedding);
Monomial extend(const Monomial& m, const RingEmbedding& embedding);
MonomialPrime extend(const MonomialPrime& p, const RingEmbedding& embedding);
// Sum of two primes in disjoint variable sets, as a prime of the joined ring.
MonomialPrime join_primes(const MonomialPrime& p, const MonomialPrime& q, const JoinedRings& joined);

/// Sum over i of I^(i)_K * J^(s-i)_L, extended to the joined ring.
MonomialIdeal binomial_saturated(const MonomialIdeal& I, const MonomialIdeal& K, const MonomialIdeal& J,
                                 const MonomialIdeal& L, unsigned s);
/// (I + J)^s : (KL)^infinity computed directly in the joined ring.
MonomialIdeal direct_saturated(const MonomialIdeal& I, const MonomialIdeal& K, const MonomialIdeal& J,
                               const MonomialIdeal& L, unsigned s);

/// Sum over i of I^(i) * J^(s-i) for the chosen symbolic notion.
MonomialIdeal binomial_symbolic(const MonomialIdeal& I, const MonomialIdeal& J, unsigned s, SymbolicNotion notion);
/// Symbolic power of I + J computed from the primary decomposition in the joined ring.
MonomialIdeal direct_symbolic(const MonomialIdeal& I, const MonomialIdeal& J, unsigned s, SymbolicNotion notion);

// Expansion against direct saturation, plus the term-by-term inclusions.
Report check_binomial_saturated(const MonomialIdeal& I, const MonomialIdeal& K, const MonomialIdeal& J,
                                const MonomialIdeal& L, unsigned s);
Report check_binomial_symbolic(const MonomialIdeal& I, const MonomialIdeal& J, unsigned s, SymbolicNotion notion);

struct EqualityCriteria {
  std::vector<bool> left_equal;   // I^(i)_K == I^i, i = 1..s
  std::vector<bool> right_equal;  // J^(i)_L == J^i, i = 1..s
  bool joint_equal = false;       // (I+J)^(s)_{KL} == (I+J)^s
  Report report;
};

/// Saturated powers of the sum equal ordinary powers iff the same holds
/// componentwise for all i <= s.
EqualityCriteria check_equality_criteria(const MonomialIdeal& I, const MonomialIdeal& K, const MonomialIdeal& J,
                                         const MonomialIdeal& L, unsigned s);
/// The same biconditional for symbolic powers of either notion.
EqualityCriteria check_equality_criteria_symbolic(const MonomialIdeal& I, const MonomialIdeal& J, unsigned s,
                                                  SymbolicNotion notion);

/// Associated-prime structure of sums and their powers: tensor Ass/Min,
/// the power-Ass sandwich, grade additivity, and saturation by the product of
/// global saturators reproducing both symbolic powers of I + J.
Report check_ass_structure(const MonomialIdeal& I, const MonomialIdeal& J, unsigned s,
                           std::optional<unsigned> n_max = std::nullopt);

/// Descending multiplicative chain with the unit ideal at index 0.
struct Filtration {
  std::vector<MonomialIdeal> terms;

  const MonomialIdeal& operator[](std::size_t i) const { return terms[i]; }
  std::size_t size() const { return terms.size(); }
};

Filtration power_filtration(const MonomialIdeal& ideal, unsigned s);
Filtration saturated_filtration(const MonomialIdeal& ideal, const MonomialIdeal& by, unsigned s);
// Throws std::invalid_argument unless terms[0] = (1), terms descend, and
// terms[i] * terms[j] lies in terms[i + j].
void validate_filtration(const Filtration& f, const char* name);

/// Intersection and colon identities for sums of products of filtrations in
/// disjoint variables, each checked as exact equality in the joined ring.
Report check_filtration_identities(const Filtration& I, const Filtration& K_filtration, const Filtration& J,
                                   const MonomialIdeal& K, unsigned s);

}  // namespace idealkit
