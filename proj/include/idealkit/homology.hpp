#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "idealkit/binomial.hpp"
#include "idealkit/report.hpp"

namespace idealkit {

/// Integer extended by +inf and -inf, with depth 0 = +inf and reg 0 = -inf.
class ExtendedInt {
 public:
  constexpr ExtendedInt() = default;
  constexpr ExtendedInt(long long value) : value_(value) {}  // NOLINT: implicit by design of the formulas

  static constexpr ExtendedInt plus_infinity() { return ExtendedInt(Kind::plus_infinity); }
  static constexpr ExtendedInt minus_infinity() { return ExtendedInt(Kind::minus_infinity); }

  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_plus_infinity() const { return kind_ == Kind::plus_infinity; }
  bool is_minus_infinity() const { return kind_ == Kind::minus_infinity; }
  long long value() const;

  // Throws std::domain_error on +inf + -inf.
  friend ExtendedInt operator+(ExtendedInt a, ExtendedInt b);
  friend bool operator==(ExtendedInt a, ExtendedInt b) { return a.kind_ == b.kind_ && a.value_ == b.value_; }
  friend bool operator!=(ExtendedInt a, ExtendedInt b) { return !(a == b); }
  friend bool operator<(ExtendedInt a, ExtendedInt b);

  std::string to_string() const;

 private:
  enum class Kind { finite, plus_infinity, minus_infinity };
  constexpr explicit ExtendedInt(Kind kind) : kind_(kind) {}
  Kind kind_ = Kind::finite;
  long long value_ = 0;
};

ExtendedInt min(ExtendedInt a, ExtendedInt b);
ExtendedInt max(ExtendedInt a, ExtendedInt b);

// 0 selects exact rational arithmetic; otherwise a prime.
using Characteristic = std::uint32_t;

void require_valid_characteristic(Characteristic p);

/// Multigraded Betti numbers of R/I.
///
/// beta_{i,b}(R/I) = dim reduced H_{i-2} of the upper Koszul complex
/// K^b(I) = { F subset of supp(b) : x^(b - F) in I }, for b in the lcm lattice
/// of I; beta_{0,1} = 1. The unit ideal resolves the zero module and has no
/// entries at all.
class BettiTable {
 public:
  struct Entry {
    unsigned homological_degree;
    ExponentVector multidegree;
    std::uint64_t value;
  };

  BettiTable(MonomialIdeal against, Characteristic characteristic, std::vector<Entry> entries);

  const Ring& ring() const { return against_.ring(); }
  const MonomialIdeal& against() const { return against_; }
  Characteristic characteristic() const { return characteristic_; }
  const std::vector<Entry>& entries() const { return entries_; }

  bool is_zero_module() const { return entries_.empty(); }
  std::uint64_t at(unsigned i, const ExponentVector& b) const;
  std::uint64_t total(unsigned i) const;
  // beta_{i,j}: sum over multidegrees of total degree j.
  std::uint64_t graded(unsigned i, int degree) const;

  // Largest homological degree with an entry; throws for the zero module.
  unsigned projective_dimension() const;
  ExtendedInt depth() const;
  ExtendedInt regularity() const;

  std::string to_string() const;

 private:
  MonomialIdeal against_;
  Characteristic characteristic_;
  std::vector<Entry> entries_;  // sorted by (i, canonical multidegree)
};

BettiTable betti_table(const MonomialIdeal& ideal, Characteristic characteristic = 0);

// All lcms of nonempty subsets of the minimal generators, in canonical order.
std::vector<ExponentVector> lcm_lattice(const MonomialIdeal& ideal);

// Dimensions of reduced homology H_{-1}, H_0, ... of the upper Koszul complex
// of I at b (empty when the complex is void or acyclic).
std::vector<std::uint64_t> upper_koszul_homology(const MonomialIdeal& ideal, const ExponentVector& b,
                                                 Characteristic characteristic);

ExtendedInt depth_quotient(const MonomialIdeal& ideal, Characteristic characteristic = 0);
ExtendedInt reg_quotient(const MonomialIdeal& ideal, Characteristic characteristic = 0);

/// (f / x_i : f a monomial of I, x_i | f).
MonomialIdeal deriv_star(const MonomialIdeal& ideal);

struct DepthRegCheck {
  ExtendedInt depth_lhs;
  ExtendedInt depth_rhs;
  ExtendedInt reg_lhs;
  ExtendedInt reg_rhs;
  Report report;
};

/// Depth and regularity of R / (I+J)^(s)_{KL} against the min/max formula
/// over i in [1, s] built from depth and regularity of the two sides'
/// saturated powers.
DepthRegCheck check_depth_reg_binomial(const MonomialIdeal& I, const MonomialIdeal& K, const MonomialIdeal& J,
                                       const MonomialIdeal& L, unsigned s, Characteristic characteristic = 0);
/// The same formula with symbolic powers of the chosen notion throughout.
DepthRegCheck check_depth_reg_symbolic(const MonomialIdeal& I, const MonomialIdeal& J, unsigned s,
                                       SymbolicNotion notion, Characteristic characteristic = 0);

}  // namespace idealkit
