#pragma once

#include <optional>
#include <string>

#include "idealkit/decomposition.hpp"

namespace idealkit {

// The two notions of symbolic power: components over minimal primes of I, or
// components whose prime sits inside some associated prime of I.
enum class SymbolicNotion { minimal, associated };

std::string to_string(SymbolicNotion notion);
std::optional<SymbolicNotion> parse_notion(std::string_view text);

/// I^s : K^infinity.
MonomialIdeal saturated_power(const MonomialIdeal& ideal, const MonomialIdeal& by, unsigned s);

// Intersection of primes of Ass(I^s) not minimal over I; (1) when there are none.
MonomialIdeal saturator_min(const MonomialIdeal& ideal, unsigned s);
// Same over the bounded approximation of Ass*(I).
MonomialIdeal saturator_min_global(const MonomialIdeal& ideal, unsigned n_max);

// Intersection of primes of Ass(I^s) having grade >= 1 on A/I; (1) when there are none.
MonomialIdeal saturator_ass(const MonomialIdeal& ideal, unsigned s);
MonomialIdeal saturator_ass_global(const MonomialIdeal& ideal, unsigned n_max);

MonomialIdeal saturator(const MonomialIdeal& ideal, unsigned s, SymbolicNotion notion);
MonomialIdeal saturator_global(const MonomialIdeal& ideal, unsigned n_max, SymbolicNotion notion);

MonomialIdeal symbolic_min(const MonomialIdeal& ideal, unsigned s);
MonomialIdeal symbolic_ass(const MonomialIdeal& ideal, unsigned s);
/// Symbolic power from the primary decomposition of I^s. s = 0 gives (1).
MonomialIdeal symbolic_power(const MonomialIdeal& ideal, unsigned s, SymbolicNotion notion);

/// A monomial of the global saturator lying outside every minimal prime
/// (minimal notion) or every associated prime (associated notion) of I.
///
/// Returns 1 when the relevant prime set is empty and nullopt when no monomial
/// of total degree <= max_degree qualifies; monomial witnesses need not exist.
/// max_degree defaults to the number of variables.
std::optional<Monomial> regular_witness(const MonomialIdeal& ideal, SymbolicNotion notion, unsigned n_max,
                                        std::optional<unsigned> max_degree = std::nullopt);

}  // namespace idealkit
