#include "idealkit/homology.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "idealkit/rank.hpp"

namespace idealkit {

// ---------------------------------------------------------------------------
// ExtendedInt

long long ExtendedInt::value() const {
  if (!is_finite()) throw std::domain_error("value() of an infinite ExtendedInt");
  return value_;
}

ExtendedInt operator+(ExtendedInt a, ExtendedInt b) {
  if ((a.is_plus_infinity() && b.is_minus_infinity()) || (a.is_minus_infinity() && b.is_plus_infinity())) {
    throw std::domain_error("+inf + -inf is undefined");
  }
  if (!a.is_finite()) return a;
  if (!b.is_finite()) return b;
  return ExtendedInt(a.value_ + b.value_);
}

bool operator<(ExtendedInt a, ExtendedInt b) {
  auto rank = [](ExtendedInt x) { return x.is_minus_infinity() ? 0 : x.is_finite() ? 1 : 2; };
  if (rank(a) != rank(b)) return rank(a) < rank(b);
  return a.is_finite() && a.value_ < b.value_;
}

ExtendedInt min(ExtendedInt a, ExtendedInt b) { return b < a ? b : a; }
ExtendedInt max(ExtendedInt a, ExtendedInt b) { return a < b ? b : a; }

std::string ExtendedInt::to_string() const {
  if (is_plus_infinity()) return "inf";
  if (is_minus_infinity()) return "-inf";
  return std::to_string(value_);
}

void require_valid_characteristic(Characteristic p) {
  if (p != 0 && !is_prime(p)) throw std::invalid_argument("characteristic must be 0 or a prime, got " + std::to_string(p));
}

// ---------------------------------------------------------------------------
// Betti tables

BettiTable::BettiTable(MonomialIdeal against, Characteristic characteristic, std::vector<Entry> entries)
    : against_(std::move(against)), characteristic_(characteristic), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
    if (a.homological_degree != b.homological_degree) return a.homological_degree < b.homological_degree;
    return canonical_less(a.multidegree, b.multidegree);
  });
}

std::uint64_t BettiTable::at(unsigned i, const ExponentVector& b) const {
  for (const auto& e : entries_) {
    if (e.homological_degree == i && e.multidegree == b) return e.value;
  }
  return 0;
}

std::uint64_t BettiTable::total(unsigned i) const {
  std::uint64_t t = 0;
  for (const auto& e : entries_) {
    if (e.homological_degree == i) t += e.value;
  }
  return t;
}

std::uint64_t BettiTable::graded(unsigned i, int degree) const {
  std::uint64_t t = 0;
  for (const auto& e : entries_) {
    if (e.homological_degree == i && e.multidegree.degree() == degree) t += e.value;
  }
  return t;
}

unsigned BettiTable::projective_dimension() const {
  if (entries_.empty()) throw std::domain_error("projective dimension of the zero module");
  return entries_.back().homological_degree;
}

ExtendedInt BettiTable::depth() const {
  if (entries_.empty()) return ExtendedInt::plus_infinity();
  // Auslander-Buchsbaum over the polynomial ring.
  return static_cast<long long>(ring().size()) - static_cast<long long>(projective_dimension());
}

ExtendedInt BettiTable::regularity() const {
  if (entries_.empty()) return ExtendedInt::minus_infinity();
  long long reg = 0;
  for (const auto& e : entries_) {
    reg = std::max<long long>(reg, e.multidegree.degree() - static_cast<long long>(e.homological_degree));
  }
  return reg;
}

std::string BettiTable::to_string() const {
  if (entries_.empty()) return "zero module";
  std::string out;
  for (const auto& e : entries_) {
    out += "beta_" + std::to_string(e.homological_degree) + "," + render_monomial(ring(), e.multidegree) + " = " +
           std::to_string(e.value) + "\n";
  }
  out += "pd = " + std::to_string(projective_dimension()) + ", depth = " + depth().to_string() +
         ", reg = " + regularity().to_string();
  return out;
}

std::vector<ExponentVector> lcm_lattice(const MonomialIdeal& ideal) {
  std::vector<ExponentVector> lattice;
  std::unordered_set<ExponentVector, ExponentVectorHash> seen;
  for (const auto& g : ideal.generators()) {
    if (seen.insert(g).second) lattice.push_back(g);
  }
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    for (const auto& g : ideal.generators()) {
      ExponentVector l = lcm(lattice[k], g);
      if (seen.insert(l).second) lattice.push_back(l);
    }
  }
  std::sort(lattice.begin(), lattice.end(), canonical_less);
  return lattice;
}

namespace {

// Boundary matrix from faces of size d+1 to faces of size d, faces given as
// bitmasks over the local vertex set.
IntegerMatrix boundary_matrix(const std::vector<std::uint32_t>& higher, const std::vector<std::uint32_t>& lower) {
  IntegerMatrix m(lower.size(), std::vector<std::int64_t>(higher.size(), 0));
  for (std::size_t c = 0; c < higher.size(); ++c) {
    const std::uint32_t face = higher[c];
    int position = 0;
    for (std::uint32_t rest = face; rest; rest &= rest - 1) {
      const std::uint32_t vertex = rest & (~rest + 1);
      const std::uint32_t facet = face & ~vertex;
      const auto row = std::lower_bound(lower.begin(), lower.end(), facet) - lower.begin();
      if (row < static_cast<long>(lower.size()) && lower[row] == facet) m[row][c] = position % 2 ? -1 : 1;
      ++position;
    }
  }
  return m;
}

}  // namespace

std::vector<std::uint64_t> upper_koszul_homology(const MonomialIdeal& ideal, const ExponentVector& b,
                                                 Characteristic characteristic) {
  std::vector<std::size_t> vertices;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b[j]) vertices.push_back(j);
  }
  const std::size_t k = vertices.size();
  const std::uint32_t full = k == 32 ? ~0u : (1u << k) - 1;

  std::vector<char> is_face(std::size_t{1} << k, 0);
  for (std::uint32_t f = 0; f <= full; ++f) {
    ExponentVector shifted = b;
    for (std::size_t v = 0; v < k; ++v) {
      if (f & (1u << v)) shifted.set(vertices[v], b[vertices[v]] - 1);
    }
    is_face[f] = ideal.contains(shifted);
  }
  if (!is_face[0]) return {};
  // A cone over any vertex is acyclic.
  for (std::size_t v = 0; v < k; ++v) {
    bool cone = true;
    for (std::uint32_t f = 0; f <= full && cone; ++f) {
      if (is_face[f] && !is_face[f | (1u << v)]) cone = false;
    }
    if (cone) return {};
  }

  // faces_by_size[d] holds faces with d vertices (reduced dimension d - 1).
  std::vector<std::vector<std::uint32_t>> faces_by_size(k + 1);
  for (std::uint32_t f = 0; f <= full; ++f) {
    if (is_face[f]) faces_by_size[std::popcount(f)].push_back(f);
  }
  std::vector<std::size_t> boundary_rank(k + 2, 0);  // rank of the map out of faces of size d
  for (std::size_t d = 1; d <= k; ++d) {
    if (faces_by_size[d].empty() || faces_by_size[d - 1].empty()) continue;
    boundary_rank[d] = matrix_rank(boundary_matrix(faces_by_size[d], faces_by_size[d - 1]), characteristic);
  }
  std::vector<std::uint64_t> homology(k + 1, 0);  // index d: reduced H_{d-1}
  for (std::size_t d = 0; d <= k; ++d) {
    homology[d] = faces_by_size[d].size() - boundary_rank[d] - boundary_rank[d + 1];
  }
  return homology;
}

BettiTable betti_table(const MonomialIdeal& ideal, Characteristic characteristic) {
  require_valid_characteristic(characteristic);
  if (ideal.is_unit()) return BettiTable(ideal, characteristic, {});
  std::vector<BettiTable::Entry> entries;
  entries.push_back({0, ExponentVector(ideal.ring().size()), 1});
  for (const auto& b : lcm_lattice(ideal)) {
    const auto homology = upper_koszul_homology(ideal, b, characteristic);
    for (std::size_t d = 0; d < homology.size(); ++d) {
      // reduced H_{d-1} contributes to beta_{d+1}.
      if (homology[d]) entries.push_back({static_cast<unsigned>(d + 1), b, homology[d]});
    }
  }
  return BettiTable(ideal, characteristic, std::move(entries));
}

ExtendedInt depth_quotient(const MonomialIdeal& ideal, Characteristic characteristic) {
  return betti_table(ideal, characteristic).depth();
}

ExtendedInt reg_quotient(const MonomialIdeal& ideal, Characteristic characteristic) {
  return betti_table(ideal, characteristic).regularity();
}

MonomialIdeal deriv_star(const MonomialIdeal& ideal) {
  const Ring& ring = ideal.ring();
  // f = x_i * g gives g back, so the result always contains I; for the unit
  // ideal this yields (1) whenever the ring has a variable.
  if (ideal.is_unit()) return ring.size() ? MonomialIdeal::unit(ring) : MonomialIdeal::zero(ring);
  std::vector<ExponentVector> gens;
  for (const auto& g : ideal.generators()) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!g[i]) continue;
      ExponentVector q = g;
      q.set(i, g[i] - 1);
      gens.push_back(q);
    }
  }
  return minimalize(ring, std::move(gens));
}

// ---------------------------------------------------------------------------
// Depth and regularity of sums

namespace {

struct Invariants {
  ExtendedInt depth;
  ExtendedInt reg;
};

Invariants invariants(const MonomialIdeal& ideal, Characteristic characteristic) {
  const BettiTable table = betti_table(ideal, characteristic);
  return {table.depth(), table.regularity()};
}

// left[i], right[j] hold invariants of the i-th / j-th member of each family,
// index 0 being the unit ideal.
DepthRegCheck assemble(const MonomialIdeal& total, const std::vector<Invariants>& left,
                       const std::vector<Invariants>& right, unsigned s, Characteristic characteristic,
                       std::string title) {
  DepthRegCheck out;
  const Invariants lhs = invariants(total, characteristic);
  out.depth_lhs = lhs.depth;
  out.reg_lhs = lhs.reg;
  ExtendedInt depth_rhs = ExtendedInt::plus_infinity();
  ExtendedInt reg_rhs = ExtendedInt::minus_infinity();
  for (unsigned i = 1; i <= s; ++i) {
    depth_rhs = min(depth_rhs, left[i].depth + right[s - i].depth + 1);
    depth_rhs = min(depth_rhs, left[i].depth + right[s + 1 - i].depth);
    reg_rhs = max(reg_rhs, left[i].reg + right[s - i].reg + 1);
    reg_rhs = max(reg_rhs, left[i].reg + right[s + 1 - i].reg);
  }
  out.depth_rhs = depth_rhs;
  out.reg_rhs = reg_rhs;
  out.report.title = std::move(title);
  out.report.add("depth formula", out.depth_lhs == out.depth_rhs, out.depth_rhs.to_string(), out.depth_lhs.to_string());
  out.report.add("regularity formula", out.reg_lhs == out.reg_rhs, out.reg_rhs.to_string(), out.reg_lhs.to_string());
  return out;
}

}  // namespace

DepthRegCheck check_depth_reg_binomial(const MonomialIdeal& I, const MonomialIdeal& K, const MonomialIdeal& J,
                                       const MonomialIdeal& L, unsigned s, Characteristic characteristic) {
  require_nonzero_proper(I, "check_depth_reg_binomial");
  require_nonzero_proper(J, "check_depth_reg_binomial");
  require_valid_characteristic(characteristic);
  const MonomialIdeal total = binomial_saturated(I, K, J, L, s);
  std::vector<Invariants> left;
  std::vector<Invariants> right;
  for (unsigned i = 0; i <= s; ++i) {
    left.push_back(invariants(saturated_power(I, K, i), characteristic));
    right.push_back(invariants(saturated_power(J, L, i), characteristic));
  }
  return assemble(total, left, right, s, characteristic,
                  "depth/regularity of saturated powers (char " + std::to_string(characteristic) + ")");
}

DepthRegCheck check_depth_reg_symbolic(const MonomialIdeal& I, const MonomialIdeal& J, unsigned s,
                                       SymbolicNotion notion, Characteristic characteristic) {
  require_nonzero_proper(I, "check_depth_reg_symbolic");
  require_nonzero_proper(J, "check_depth_reg_symbolic");
  require_valid_characteristic(characteristic);
  if (s == 0) throw std::invalid_argument("check_depth_reg_symbolic needs s >= 1");
  const MonomialIdeal total = binomial_symbolic(I, J, s, notion);
  std::vector<Invariants> left;
  std::vector<Invariants> right;
  for (unsigned i = 0; i <= s; ++i) {
    left.push_back(invariants(symbolic_power(I, i, notion), characteristic));
    right.push_back(invariants(symbolic_power(J, i, notion), characteristic));
  }
  return assemble(total, left, right, s, characteristic,
                  "depth/regularity of " + to_string(notion) + "-symbolic powers (char " +
                      std::to_string(characteristic) + ")");
}

}  // namespace idealkit
