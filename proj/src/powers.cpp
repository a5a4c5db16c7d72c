#include "idealkit/powers.hpp"

#include <algorithm>

namespace idealkit {

std::string to_string(SymbolicNotion notion) {
  return notion == SymbolicNotion::minimal ? "min" : "ass";
}

std::optional<SymbolicNotion> parse_notion(std::string_view text) {
  if (text == "min") return SymbolicNotion::minimal;
  if (text == "ass") return SymbolicNotion::associated;
  return std::nullopt;
}

MonomialIdeal saturated_power(const MonomialIdeal& ideal, const MonomialIdeal& by, unsigned s) {
  require_same_ring(ideal.ring(), by.ring());
  if (ideal.is_zero()) throw std::invalid_argument("saturated_power: zero ideal");
  return saturate(power(ideal, s), by);
}

namespace {

MonomialIdeal intersect_primes(const Ring& ring, const PrimeSet& primes) {
  MonomialIdeal acc = MonomialIdeal::unit(ring);
  for (const auto& p : primes) acc = intersect(acc, p.to_ideal());
  return acc;
}

// Primes of `candidates` that the saturator of the given notion must cut out.
PrimeSet saturating_primes(const MonomialIdeal& ideal, const PrimeSet& candidates, SymbolicNotion notion) {
  PrimeSet out;
  if (notion == SymbolicNotion::minimal) {
    const PrimeSet min = minimal_primes(ideal);
    for (const auto& p : candidates) {
      if (!contains(min, p)) out.push_back(p);
    }
  } else {
    const PrimeSet ass = associated_primes(ideal);
    for (const auto& p : candidates) {
      const bool inside = std::any_of(ass.begin(), ass.end(), [&](const MonomialPrime& q) { return p.is_subset_of(q); });
      if (!inside) out.push_back(p);
    }
  }
  return out;
}

}  // namespace

MonomialIdeal saturator(const MonomialIdeal& ideal, unsigned s, SymbolicNotion notion) {
  require_nonzero_proper(ideal, "saturator");
  if (s == 0) throw std::invalid_argument("saturator: s must be positive");
  return intersect_primes(ideal.ring(), saturating_primes(ideal, associated_primes(power(ideal, s)), notion));
}

MonomialIdeal saturator_global(const MonomialIdeal& ideal, unsigned n_max, SymbolicNotion notion) {
  require_nonzero_proper(ideal, "saturator_global");
  const AssStar star = ass_star_bounded(ideal, n_max);
  return intersect_primes(ideal.ring(), saturating_primes(ideal, star.primes, notion));
}

MonomialIdeal saturator_min(const MonomialIdeal& ideal, unsigned s) {
  return saturator(ideal, s, SymbolicNotion::minimal);
}
MonomialIdeal saturator_min_global(const MonomialIdeal& ideal, unsigned n_max) {
  return saturator_global(ideal, n_max, SymbolicNotion::minimal);
}
MonomialIdeal saturator_ass(const MonomialIdeal& ideal, unsigned s) {
  return saturator(ideal, s, SymbolicNotion::associated);
}
MonomialIdeal saturator_ass_global(const MonomialIdeal& ideal, unsigned n_max) {
  return saturator_global(ideal, n_max, SymbolicNotion::associated);
}

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, unsigned s, SymbolicNotion notion) {
  require_nonzero_proper(ideal, "symbolic_power");
  if (s == 0) return MonomialIdeal::unit(ideal.ring());
  const PrimaryDecomposition decomposition = primary_decomposition(power(ideal, s));
  const PrimeSet dropped = saturating_primes(ideal, decomposition.primes(), notion);
  MonomialIdeal acc = MonomialIdeal::unit(ideal.ring());
  for (const auto& [p, component] : decomposition.components) {
    if (!contains(dropped, p)) acc = intersect(acc, component);
  }
  return acc;
}

MonomialIdeal symbolic_min(const MonomialIdeal& ideal, unsigned s) {
  return symbolic_power(ideal, s, SymbolicNotion::minimal);
}
MonomialIdeal symbolic_ass(const MonomialIdeal& ideal, unsigned s) {
  return symbolic_power(ideal, s, SymbolicNotion::associated);
}

namespace {

// All monomials of total degree d, in canonical order.
std::vector<ExponentVector> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<ExponentVector> out;
  ExponentVector e(nvars);
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == nvars) {
      e.set(var, left);
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e.set(var, k);
      self(self, var + 1, left - k);
    }
    e.set(var, 0);
  };
  if (nvars > 0) rec(rec, 0, d);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

std::optional<Monomial> regular_witness(const MonomialIdeal& ideal, SymbolicNotion notion, unsigned n_max,
                                        std::optional<unsigned> max_degree) {
  require_nonzero_proper(ideal, "regular_witness");
  const Ring& ring = ideal.ring();
  const AssStar star = ass_star_bounded(ideal, n_max);
  const PrimeSet cut = saturating_primes(ideal, star.primes, notion);
  if (cut.empty()) return Monomial::one(ring);

  const MonomialIdeal global = intersect_primes(ring, cut);
  const PrimeSet avoid = notion == SymbolicNotion::minimal ? minimal_primes(ideal) : associated_primes(ideal);
  const unsigned cap = max_degree.value_or(static_cast<unsigned>(ring.size()));
  for (unsigned d = 1; d <= cap; ++d) {
    for (const auto& m : monomials_of_degree(ring.size(), d)) {
      if (!global.contains(m)) continue;
      const bool regular = std::all_of(avoid.begin(), avoid.end(), [&](const MonomialPrime& p) { return p.avoids(m); });
      if (regular) return Monomial(ring, m);
    }
  }
  return std::nullopt;
}

}  // namespace idealkit
