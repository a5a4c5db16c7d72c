#include "idealkit/ideal.hpp"

#include <algorithm>

namespace idealkit {

MonomialIdeal::MonomialIdeal(Ring ring) : ring_(std::move(ring)) {}

MonomialIdeal MonomialIdeal::unit(const Ring& ring) {
  MonomialIdeal r(ring);
  r.gens_.emplace_back(ring.size());
  return r;
}

MonomialIdeal MonomialIdeal::principal(const Monomial& m) {
  return minimalize(m.ring, {m.exponents});
}

MonomialIdeal MonomialIdeal::generated_by_variables(const Ring& ring, std::uint32_t support) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (support & (1u << i)) {
      ExponentVector e(ring.size());
      e.set(i, 1);
      gens.push_back(e);
    }
  }
  return minimalize(ring, std::move(gens));
}

bool MonomialIdeal::contains(const ExponentVector& m) const {
  for (const auto& g : gens_) {
    if (g.divides(m)) return true;
  }
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_ring(ring_, other.ring_);
  for (const auto& g : other.gens_) {
    if (!contains(g)) return false;
  }
  return true;
}

int MonomialIdeal::max_exponent() const {
  int m = 0;
  for (const auto& g : gens_) {
    for (std::size_t i = 0; i < g.size(); ++i) m = std::max<int>(m, g[i]);
  }
  return m;
}

ExponentVector MonomialIdeal::lcm_of_generators() const {
  ExponentVector l(ring_.size());
  for (const auto& g : gens_) l = lcm(l, g);
  return l;
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += render_monomial(ring_, gens_[i]);
  }
  return out + ")";
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  require_same_ring(ideal.ring(), m.ring);
  return ideal.contains(m.exponents);
}

MonomialIdeal minimalize(const Ring& ring, std::vector<ExponentVector> gens) {
  for (const auto& g : gens) {
    if (g.size() != ring.size()) throw RingMismatch("generator length differs from ring size");
  }
  std::sort(gens.begin(), gens.end(), canonical_less);
  MonomialIdeal out(ring);
  out.gens_.reserve(gens.size());
  // A divisor never comes later in degree order, so one forward pass suffices.
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& kept : out.gens_) {
      if (kept.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.gens_.push_back(g);
  }
  return out;
}

MonomialIdeal minimalize(std::span<const Monomial> gens) {
  if (gens.empty()) return MonomialIdeal();
  const Ring& ring = gens.front().ring;
  std::vector<ExponentVector> raw;
  raw.reserve(gens.size());
  for (const auto& m : gens) {
    require_same_ring(ring, m.ring);
    raw.push_back(m.exponents);
  }
  return minimalize(ring, std::move(raw));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<ExponentVector> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return minimalize(a.ring(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<ExponentVector> gens;
  gens.reserve(a.num_generators() * b.num_generators());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(g * h);
  }
  return minimalize(a.ring(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned s) {
  MonomialIdeal result = MonomialIdeal::unit(ideal.ring());
  for (unsigned i = 0; i < s; ++i) result = product(result, ideal);
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<ExponentVector> gens;
  gens.reserve(a.num_generators() * b.num_generators());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) {
#ifdef IDEALKIT_MUTATE_INTERSECT
      // Deliberately wrong (gcd in place of lcm); used only by the mutation test build.
      gens.push_back(gcd(g, h));
#else
      gens.push_back(lcm(g, h));
#endif
    }
  }
  return minimalize(a.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const ExponentVector& m) {
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.num_generators());
  for (const auto& g : ideal.generators()) gens.push_back(colon(g, m));
  return minimalize(ideal.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  require_same_ring(ideal.ring(), m.ring);
  return colon(ideal, m.exponents);
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  require_same_ring(ideal.ring(), by.ring());
  if (by.is_zero()) throw std::invalid_argument("colon by the zero ideal");
  MonomialIdeal result = colon(ideal, by.generators().front());
  for (std::size_t i = 1; i < by.num_generators(); ++i) {
    result = intersect(result, colon(ideal, by.generators()[i]));
  }
  return result;
}

MonomialIdeal saturate(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  require_same_ring(ideal.ring(), by.ring());
  if (by.is_zero()) throw std::invalid_argument("saturation by the zero ideal");
  // I : K^t is stable once t exceeds nvars * (max exponent - 1).
  const long cap = static_cast<long>(ideal.ring().size()) * std::max(1, ideal.max_exponent()) + 1;
  MonomialIdeal current = ideal;
  for (long step = 0; step <= cap; ++step) {
    MonomialIdeal next = colon(current, by);
    if (next == current) return current;
    current = std::move(next);
  }
  throw std::logic_error("saturation did not stabilize within " + std::to_string(cap) + " steps");
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.num_generators());
  for (const auto& g : ideal.generators()) {
    ExponentVector r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) r.set(i, g[i] ? 1 : 0);
    gens.push_back(r);
  }
  return minimalize(ideal.ring(), std::move(gens));
}

}  // namespace idealkit
