#include "idealkit/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace idealkit {

void require_nonzero_proper(const MonomialIdeal& ideal, const char* what) {
  if (ideal.is_zero()) throw std::invalid_argument(std::string(what) + ": zero ideal");
  if (ideal.is_unit()) throw std::invalid_argument(std::string(what) + ": unit ideal");
}

// ---------------------------------------------------------------------------
// Primes

MonomialPrime::MonomialPrime(Ring ring, std::uint32_t support) : ring_(std::move(ring)), support_(support) {
  if ((support_ >> ring_.size()) != 0) throw std::invalid_argument("prime support outside the ring");
}

std::size_t MonomialPrime::height() const { return static_cast<std::size_t>(std::popcount(support_)); }

bool operator<(const MonomialPrime& a, const MonomialPrime& b) {
  const auto ha = a.height();
  const auto hb = b.height();
  if (ha != hb) return ha < hb;
  // Equal heights: compare the sorted variable index lists lexicographically.
  const std::uint32_t diff = a.support_ ^ b.support_;
  if (!diff) return false;
  const std::uint32_t lowest = diff & (~diff + 1);
  return (a.support_ & lowest) != 0;
}

void normalize(PrimeSet& primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
}

bool contains(const PrimeSet& primes, const MonomialPrime& p) {
  return std::find(primes.begin(), primes.end(), p) != primes.end();
}

bool is_subset(const PrimeSet& a, const PrimeSet& b) {
  return std::all_of(a.begin(), a.end(), [&](const MonomialPrime& p) { return contains(b, p); });
}

PrimeSet set_union(const PrimeSet& a, const PrimeSet& b) {
  PrimeSet out = a;
  out.insert(out.end(), b.begin(), b.end());
  normalize(out);
  return out;
}

std::string to_string(const PrimeSet& primes) {
  std::string out = "{";
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i) out += ", ";
    out += primes[i].to_string();
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Irreducible components

IrreducibleComponent::IrreducibleComponent(Ring ring, ExponentVector powers)
    : ring_(std::move(ring)), powers_(powers) {
  if (powers_.size() != ring_.size()) throw RingMismatch("component length differs from ring size");
  if (powers_.is_one()) throw std::invalid_argument("irreducible component must be a proper ideal");
}

MonomialIdeal IrreducibleComponent::to_ideal() const {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < powers_.size(); ++i) {
    if (!powers_[i]) continue;
    ExponentVector e(powers_.size());
    e.set(i, powers_[i]);
    gens.push_back(e);
  }
  return minimalize(ring_, std::move(gens));
}

namespace {

// (x_i^{a_i} : i in S) contains (x_i^{b_i} : i in T) iff every x_i^{b_i} is a
// multiple of some x_i^{a_i}, i.e. T is inside S with a_i <= b_i.
bool component_contains(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] && (!a[i] || a[i] > b[i])) return false;
  }
  return true;
}

bool component_order(const ExponentVector& a, const ExponentVector& b) {
  const auto pa = std::popcount(a.support());
  const auto pb = std::popcount(b.support());
  if (pa != pb) return pa < pb;
  if (a.support() != b.support()) {
    const std::uint32_t diff = a.support() ^ b.support();
    return (a.support() & diff & (~diff + 1)) != 0;
  }
  return canonical_less(a, b);
}

// Keep only the inclusion-minimal components; their intersection is unchanged.
std::vector<ExponentVector> prune_components(std::vector<ExponentVector> comps) {
  std::sort(comps.begin(), comps.end(), component_order);
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  std::vector<ExponentVector> kept;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < comps.size() && !redundant; ++j) {
      redundant = j != i && component_contains(comps[i], comps[j]);
    }
    if (!redundant) kept.push_back(comps[i]);
  }
  return kept;
}

struct GeneratorListHash {
  std::size_t operator()(const std::vector<ExponentVector>& gens) const {
    std::size_t h = gens.size();
    for (const auto& g : gens) h = h * 31 + g.hash();
    return h;
  }
};

class Splitter {
 public:
  explicit Splitter(const Ring& ring) : ring_(ring) {}

  const std::vector<ExponentVector>& decompose(const MonomialIdeal& ideal) {
    auto found = memo_.find(ideal.generators());
    if (found != memo_.end()) return found->second;

    std::vector<ExponentVector> result;
    const auto& gens = ideal.generators();
    const auto mixed = std::find_if(gens.begin(), gens.end(), [](const ExponentVector& g) {
      return !g.pure_power_variable().has_value();
    });
    if (mixed == gens.end()) {
      // Pure powers only; minimality leaves at most one per variable.
      ExponentVector powers(ring_.size());
      for (const auto& g : gens) {
        const std::size_t v = *g.pure_power_variable();
        powers.set(v, g[v]);
      }
      result.push_back(powers);
    } else {
      // m = u * v with u the power of the first occurring variable:
      // I = (I + (u)) cap (I + (v)).
      const ExponentVector m = *mixed;
      std::size_t first = 0;
      while (!m[first]) ++first;
      ExponentVector u(ring_.size());
      u.set(first, m[first]);
      ExponentVector v = m;
      v.set(first, 0);

      std::vector<ExponentVector> left = gens;
      left.push_back(u);
      std::vector<ExponentVector> right = gens;
      right.push_back(v);
      result = decompose(minimalize(ring_, std::move(left)));
      const auto& more = decompose(minimalize(ring_, std::move(right)));
      result.insert(result.end(), more.begin(), more.end());
      result = prune_components(std::move(result));
    }
    return memo_.emplace(gens, std::move(result)).first->second;
  }

 private:
  Ring ring_;
  std::unordered_map<std::vector<ExponentVector>, std::vector<ExponentVector>, GeneratorListHash> memo_;
};

}  // namespace

bool IrreducibleComponent::contains(const IrreducibleComponent& other) const {
  require_same_ring(ring_, other.ring_);
  return component_contains(powers_, other.powers_);
}

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal) {
  require_nonzero_proper(ideal, "irreducible_decomposition");
  Splitter splitter(ideal.ring());
  std::vector<IrreducibleComponent> out;
  for (const auto& powers : splitter.decompose(ideal)) out.emplace_back(ideal.ring(), powers);
  return out;
}

// ---------------------------------------------------------------------------
// Primary decomposition

PrimeSet PrimaryDecomposition::primes() const {
  PrimeSet out;
  for (const auto& [p, q] : components) out.push_back(p);
  return out;
}

MonomialIdeal PrimaryDecomposition::intersection(const Ring& ring) const {
  MonomialIdeal acc = MonomialIdeal::unit(ring);
  for (const auto& [p, q] : components) acc = intersect(acc, q);
  return acc;
}

std::string PrimaryDecomposition::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += ", ";
    out += components[i].first.to_string() + " => " + components[i].second.to_string();
  }
  return out + "}";
}

PrimaryDecomposition primary_decomposition(const MonomialIdeal& ideal) {
  require_nonzero_proper(ideal, "primary_decomposition");
  // Components of the irredundant irreducible decomposition sharing a radical
  // intersect to the primary component for that radical.
  PrimaryDecomposition out;
  for (const auto& comp : irreducible_decomposition(ideal)) {
    const MonomialPrime p = comp.radical();
    auto it = std::find_if(out.components.begin(), out.components.end(),
                           [&](const auto& entry) { return entry.first == p; });
    if (it == out.components.end()) {
      out.components.emplace_back(p, comp.to_ideal());
    } else {
      it->second = intersect(it->second, comp.to_ideal());
    }
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

PrimeSet associated_primes(const MonomialIdeal& ideal) {
  PrimeSet out;
  for (const auto& comp : irreducible_decomposition(ideal)) out.push_back(comp.radical());
  normalize(out);
  return out;
}

PrimeSet minimal_primes(const MonomialIdeal& ideal) {
  const PrimeSet ass = associated_primes(ideal);
  PrimeSet out;
  for (const auto& p : ass) {
    const bool minimal = std::none_of(ass.begin(), ass.end(), [&](const MonomialPrime& q) {
      return !(q == p) && q.is_subset_of(p);
    });
    if (minimal) out.push_back(p);
  }
  return out;
}

AssStar ass_star_bounded(const MonomialIdeal& ideal, unsigned n_max) {
  require_nonzero_proper(ideal, "ass_star_bounded");
  if (n_max < 2) throw std::invalid_argument("ass_star_bounded: n_max must be at least 2");
  AssStar out;
  PrimeSet previous;
  MonomialIdeal current = ideal;
  for (unsigned n = 1; n <= n_max; ++n) {
    if (n > 1) current = product(current, ideal);
    PrimeSet ass = associated_primes(current);
    out.primes = set_union(out.primes, ass);
    if (n == n_max) out.stabilized = ass == previous;
    previous = std::move(ass);
  }
  return out;
}

unsigned default_ass_star_bound(const MonomialIdeal& ideal) {
  int max_degree = 0;
  for (const auto& g : ideal.generators()) max_degree = std::max(max_degree, g.degree());
  return std::max(2u, static_cast<unsigned>(ideal.ring().size() + max_degree));
}

bool grade_zero(const MonomialPrime& p, const MonomialIdeal& ideal) {
  require_same_ring(p.ring(), ideal.ring());
  if (p.support() == 0) throw std::invalid_argument("grade_zero: empty prime");
  const PrimeSet ass = associated_primes(ideal);
  return std::any_of(ass.begin(), ass.end(), [&](const MonomialPrime& q) { return p.is_subset_of(q); });
}

PrimeSet ass_module_quotient(const MonomialIdeal& ideal, unsigned i) {
  require_nonzero_proper(ideal, "ass_module_quotient");
  if (i == 0) throw std::invalid_argument("ass_module_quotient: i must be positive");
  const MonomialIdeal lower = power(ideal, i - 1);
  const MonomialIdeal upper = product(lower, ideal);
  const Ring& ring = ideal.ring();
  const std::size_t n = ring.size();

  // Raising an exponent past the largest exponent occurring in I^{i-1} and I^i
  // changes neither membership in I^{i-1} nor the colon I^i : m, so witnesses
  // may be taken inside this box.
  const ExponentVector box = lcm(lower.lcm_of_generators(), upper.lcm_of_generators());

  PrimeSet out;
  ExponentVector m(n);
  while (true) {
    if (lower.contains(m) && !upper.contains(m)) {
      const MonomialIdeal q = colon(upper, m);
      const bool prime = std::all_of(q.generators().begin(), q.generators().end(),
                                     [](const ExponentVector& g) { return g.degree() == 1; });
      if (prime) {
        std::uint32_t support = 0;
        for (const auto& g : q.generators()) support |= g.support();
        out.emplace_back(ring, support);
      }
    }
    std::size_t k = 0;
    while (k < n && m[k] == box[k]) {
      m.set(k, 0);
      ++k;
    }
    if (k == n) break;
    m.set(k, m[k] + 1);
  }
  normalize(out);
  return out;
}

}  // namespace idealkit
