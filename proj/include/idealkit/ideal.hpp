#pragma once

#include <span>
#include <string>
#include <vector>

#include "idealkit/monomial.hpp"

namespace idealkit {

/// A monomial ideal held by its minimal generating set in canonical order.
///
/// The zero ideal has no generators and the unit ideal has the single
/// generator 1. Two ideals are equal iff their generator lists are identical.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(Ring ring = Ring());

  static MonomialIdeal zero(const Ring& ring) { return MonomialIdeal(ring); }
  static MonomialIdeal unit(const Ring& ring);
  static MonomialIdeal principal(const Monomial& m);
  // Prime ideal generated by the variables whose bits are set in `support`.
  static MonomialIdeal generated_by_variables(const Ring& ring, std::uint32_t support);

  const Ring& ring() const { return ring_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  std::size_t num_generators() const { return gens_.size(); }
  Monomial generator(std::size_t i) const { return Monomial(ring_, gens_[i]); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_proper() const { return !is_unit(); }

  bool contains(const ExponentVector& m) const;
  // Ideal containment: every generator of `other` lies in this ideal.
  bool contains(const MonomialIdeal& other) const;

  int max_exponent() const;
  ExponentVector lcm_of_generators() const;

  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ring_ == b.ring_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

 private:
  friend MonomialIdeal minimalize(const Ring& ring, std::vector<ExponentVector> gens);
  Ring ring_;
  std::vector<ExponentVector> gens_;
};

bool contains(const MonomialIdeal& ideal, const Monomial& m);

// Divisibility antichain of `gens`, sorted canonically.
MonomialIdeal minimalize(const Ring& ring, std::vector<ExponentVector> gens);
MonomialIdeal minimalize(std::span<const Monomial> gens);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
// power(I, 0) is the unit ideal.
MonomialIdeal power(const MonomialIdeal& ideal, unsigned s);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

MonomialIdeal colon(const MonomialIdeal& ideal, const ExponentVector& m);
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);
// Throws std::invalid_argument when `by` is the zero ideal.
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by);

// I : K^infinity, by iterating single colons until the chain stops growing.
MonomialIdeal saturate(const MonomialIdeal& ideal, const MonomialIdeal& by);

MonomialIdeal radical(const MonomialIdeal& ideal);

inline MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) { return sum(a, b); }
inline MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b) { return product(a, b); }

}  // namespace idealkit
