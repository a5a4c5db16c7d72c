#pragma once

#include <string>
#include <utility>
#include <vector>

#include "idealkit/ideal.hpp"

namespace idealkit {

/// Prime ideal generated by a subset of the ring's variables.
class MonomialPrime {
 public:
  MonomialPrime(Ring ring, std::uint32_t support);

  const Ring& ring() const { return ring_; }
  std::uint32_t support() const { return support_; }
  std::size_t height() const;
  MonomialIdeal to_ideal() const { return MonomialIdeal::generated_by_variables(ring_, support_); }
  bool is_subset_of(const MonomialPrime& other) const {
    return (support_ & ~other.support_) == 0;
  }
  // True iff no generator of this prime divides m, i.e. m lies outside the prime.
  bool avoids(const ExponentVector& m) const { return (m.support() & support_) == 0; }
  std::string to_string() const { return to_ideal().to_string(); }

  friend bool operator==(const MonomialPrime& a, const MonomialPrime& b) {
    return a.support_ == b.support_ && a.ring_ == b.ring_;
  }
  // Ordered by height, then by support bits, for deterministic output.
  friend bool operator<(const MonomialPrime& a, const MonomialPrime& b);

 private:
  Ring ring_;
  std::uint32_t support_;
};

using PrimeSet = std::vector<MonomialPrime>;  // sorted, duplicate-free

void normalize(PrimeSet& primes);
bool contains(const PrimeSet& primes, const MonomialPrime& p);
bool is_subset(const PrimeSet& a, const PrimeSet& b);
PrimeSet set_union(const PrimeSet& a, const PrimeSet& b);
std::string to_string(const PrimeSet& primes);

/// Ideal generated by pure powers x_i^{a_i}; zero entries mean the variable is absent.
class IrreducibleComponent {
 public:
  IrreducibleComponent(Ring ring, ExponentVector powers);

  const Ring& ring() const { return ring_; }
  const ExponentVector& powers() const { return powers_; }
  MonomialPrime radical() const { return MonomialPrime(ring_, powers_.support()); }
  MonomialIdeal to_ideal() const;
  // Ideal containment of irreducible components.
  bool contains(const IrreducibleComponent& other) const;
  std::string to_string() const { return to_ideal().to_string(); }

  friend bool operator==(const IrreducibleComponent& a, const IrreducibleComponent& b) {
    return a.powers_ == b.powers_ && a.ring_ == b.ring_;
  }

 private:
  Ring ring_;
  ExponentVector powers_;
};

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal);

/// Irredundant primary decomposition keyed by the radical of each component.
struct PrimaryDecomposition {
  std::vector<std::pair<MonomialPrime, MonomialIdeal>> components;  // sorted by prime

  PrimeSet primes() const;
  MonomialIdeal intersection(const Ring& ring) const;
  std::string to_string() const;
};

PrimaryDecomposition primary_decomposition(const MonomialIdeal& ideal);

PrimeSet associated_primes(const MonomialIdeal& ideal);
PrimeSet minimal_primes(const MonomialIdeal& ideal);

struct AssStar {
  PrimeSet primes;
  // Ass(I^{n_max-1}) == Ass(I^{n_max}); evidence of stabilization, not a proof.
  bool stabilized = false;
};

AssStar ass_star_bounded(const MonomialIdeal& ideal, unsigned n_max);
unsigned default_ass_star_bound(const MonomialIdeal& ideal);

// grade(p, A/I) == 0, i.e. p lies inside some associated prime of I.
bool grade_zero(const MonomialPrime& p, const MonomialIdeal& ideal);

// Ass(I^{i-1} / I^i): primes of the form I^i : m with m in I^{i-1} \ I^i.
PrimeSet ass_module_quotient(const MonomialIdeal& ideal, unsigned i);

void require_nonzero_proper(const MonomialIdeal& ideal, const char* what);

}  // namespace idealkit
