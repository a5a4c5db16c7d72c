#include "idealkit/binomial.hpp"

#include <algorithm>
#include <set>

namespace idealkit {

ExponentVector RingEmbedding::apply(const ExponentVector& e) const {
  if (e.size() != source.size()) throw RingMismatch("embedding source differs from the ideal's ring");
  ExponentVector out(target.size());
  for (std::size_t i = 0; i < e.size(); ++i) out.set(index_map[i], e[i]);
  return out;
}

JoinedRings join_rings(const Ring& a, const Ring& b) {
  std::set<std::string> taken(a.variables().begin(), a.variables().end());
  const std::set<std::string> right_names(b.variables().begin(), b.variables().end());
  std::vector<std::string> names = a.variables();
  for (const auto& name : b.variables()) {
    std::string chosen = name;
    if (taken.count(name)) {
      for (int k = 1;; ++k) {
        chosen = name + "_" + std::to_string(k);
        if (!taken.count(chosen) && !right_names.count(chosen)) break;
      }
    }
    taken.insert(chosen);
    names.push_back(chosen);
  }
  Ring joined(std::move(names));
  JoinedRings out{joined, {a, joined, {}}, {b, joined, {}}};
  for (std::size_t i = 0; i < a.size(); ++i) out.left.index_map.push_back(i);
  for (std::size_t i = 0; i < b.size(); ++i) out.right.index_map.push_back(a.size() + i);
  return out;
}

MonomialIdeal extend(const MonomialIdeal& ideal, const RingEmbedding& embedding) {
  require_same_ring(ideal.ring(), embedding.source);
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.num_generators());
  for (const auto& g : ideal.generators()) gens.push_back(embedding.apply(g));
  return minimalize(embedding.target, std::move(gens));
}

Monomial extend(const Monomial& m, const RingEmbedding& embedding) {
  require_same_ring(m.ring, embedding.source);
  return Monomial(embedding.target, embedding.apply(m.exponents));
}

MonomialPrime extend(const MonomialPrime& p, const RingEmbedding& embedding) {
  require_same_ring(p.ring(), embedding.source);
  std::uint32_t support = 0;
  for (std::size_t i = 0; i < embedding.index_map.size(); ++i) {
    if (p.support() & (1u << i)) support |= 1u << embedding.index_map[i];
  }
  return MonomialPrime(embedding.target, support);
}

MonomialPrime join_primes(const MonomialPrime& p, const MonomialPrime& q, const JoinedRings& joined) {
  return MonomialPrime(joined.ring, extend(p, joined.left).support() | extend(q, joined.right).support());
}

// ---------------------------------------------------------------------------

namespace {

MonomialIdeal sum_of_products(const std::vector<MonomialIdeal>& left, const std::vector<MonomialIdeal>& right,
                              const JoinedRings& joined, unsigned s) {
  MonomialIdeal acc = MonomialIdeal::zero(joined.ring);
  for (unsigned i = 0; i <= s; ++i) {
    acc = sum(acc, product(extend(left[i], joined.left), extend(right[s - i], joined.right)));
  }
  return acc;
}

std::vector<MonomialIdeal> saturated_powers_upto(const MonomialIdeal& ideal, const MonomialIdeal& by, unsigned s) {
  std::vector<MonomialIdeal> out;
  MonomialIdeal p = MonomialIdeal::unit(ideal.ring());
  for (unsigned i = 0; i <= s; ++i) {
    if (i) p = product(p, ideal);
    out.push_back(saturate(p, by));
  }
  return out;
}

std::vector<MonomialIdeal> symbolic_powers_upto(const MonomialIdeal& ideal, unsigned s, SymbolicNotion notion) {
  std::vector<MonomialIdeal> out;
  for (unsigned i = 0; i <= s; ++i) out.push_back(symbolic_power(ideal, i, notion));
  return out;
}

void require_inputs(const MonomialIdeal& I, const MonomialIdeal& K, const MonomialIdeal& J, const MonomialIdeal& L,
                    unsigned s) {
  require_same_ring(I.ring(), K.ring());
  require_same_ring(J.ring(), L.ring());
  if (I.is_zero() || J.is_zero()) throw std::invalid_argument("binomial expansion needs nonzero I and J");
  if (K.is_zero() || L.is_zero()) throw std::invalid_argument("binomial expansion needs nonzero K and L");
  if (s == 0) throw std::invalid_argument("binomial expansion needs s >= 1");
}

}  // namespace

MonomialIdeal binomial_saturated(const MonomialIdeal& I, const MonomialIdeal& K, const MonomialIdeal& J,
                                 const MonomialIdeal& L, unsigned s) {
  require_inputs(I, K, J, L, s);
  const JoinedRings joined = join_rings(I.ring(), J.ring());
  return sum_of_products(saturated_powers_upto(I, K, s), saturated_powers_upto(J, L, s), joined, s);
}

MonomialIdeal direct_saturated(const MonomialIdeal& I, const MonomialIdeal& K, const MonomialIdeal& J,
                               const MonomialIdeal& L, unsigned s) {
  require_inputs(I, K, J, L, s);
  const JoinedRings joined = join_rings(I.ring(), J.ring());
  const MonomialIdeal total = sum(extend(I, joined.left), extend(J, joined.right));
  const MonomialIdeal by = product(extend(K, joined.left), extend(L, joined.right));
  return saturate(power(total, s), by);
}

MonomialIdeal binomial_symbolic(const MonomialIdeal& I, const MonomialIdeal& J, unsigned s, SymbolicNotion notion) {
  require_nonzero_proper(I, "binomial_symbolic");
  require_nonzero_proper(J, "binomial_symbolic");
  if (s == 0) throw std::invalid_argument("binomial_symbolic needs s >= 1");
  const JoinedRings joined = join_rings(I.ring(), J.ring());
  return sum_of_products(symbolic_powers_upto(I, s, notion), symbolic_powers_upto(J, s, notion), joined, s);
}

MonomialIdeal direct_symbolic(const MonomialIdeal& I, const MonomialIdeal& J, unsigned s, SymbolicNotion notion) {
  require_nonzero_proper(I, "direct_symbolic");
  require_nonzero_proper(J, "direct_symbolic");
  const JoinedRings joined = join_rings(I.ring(), J.ring());
  return symbolic_power(sum(extend(I, joined.left), extend(J, joined.right)), s, notion);
}

Report check_binomial_saturated(const MonomialIdeal& I, const MonomialIdeal& K, const MonomialIdeal& J,
                                const MonomialIdeal& L, unsigned s) {
  require_inputs(I, K, J, L, s);
  Report report{"saturated binomial expansion", {}};
  const JoinedRings joined = join_rings(I.ring(), J.ring());
  const auto left = saturated_powers_upto(I, K, s);
  const auto right = saturated_powers_upto(J, L, s);
  const MonomialIdeal expansion = sum_of_products(left, right, joined, s);
  const MonomialIdeal direct = direct_saturated(I, K, J, L, s);
  report.add("expansion equals direct saturation", expansion == direct, direct.to_string(), expansion.to_string());
  for (unsigned i = 0; i <= s; ++i) {
    const MonomialIdeal term = product(extend(left[i], joined.left), extend(right[s - i], joined.right));
    report.add("term " + std::to_string(i) + " inside saturation", direct.contains(term), direct.to_string(),
               term.to_string());
  }
  return report;
}

Report check_binomial_symbolic(const MonomialIdeal& I, const MonomialIdeal& J, unsigned s, SymbolicNotion notion) {
  Report report{"symbolic binomial expansion (" + to_string(notion) + ")", {}};
  const MonomialIdeal expansion = binomial_symbolic(I, J, s, notion);
  const MonomialIdeal direct = direct_symbolic(I, J, s, notion);
  report.add("expansion equals symbolic power of the sum", expansion == direct, direct.to_string(),
             expansion.to_string());
  return report;
}

// ---------------------------------------------------------------------------

namespace {

std::string flags(const std::vector<bool>& v) {
  std::string out;
  for (bool b : v) out += b ? '1' : '0';
  return out;
}

EqualityCriteria assemble(std::vector<bool> left, std::vector<bool> right, bool joint, std::string title) {
  EqualityCriteria out{std::move(left), std::move(right), joint, {std::move(title), {}}};
  const bool all = std::all_of(out.left_equal.begin(), out.left_equal.end(), [](bool b) { return b; }) &&
                   std::all_of(out.right_equal.begin(), out.right_equal.end(), [](bool b) { return b; });
  const std::string state = "left=" + flags(out.left_equal) + " right=" + flags(out.right_equal) +
                            " joint=" + (joint ? "1" : "0");
  out.report.add("componentwise equality implies joint equality", !all || joint, "joint=1", state);
  out.report.add("joint equality implies componentwise equality", !joint || all, "all componentwise=1", state);
  return out;
}

}  // namespace

EqualityCriteria check_equality_criteria(const MonomialIdeal& I, const MonomialIdeal& K, const MonomialIdeal& J,
                                         const MonomialIdeal& L, unsigned s) {
  require_nonzero_proper(I, "check_equality_criteria");
  require_nonzero_proper(J, "check_equality_criteria");
  require_inputs(I, K, J, L, s);
  std::vector<bool> left;
  std::vector<bool> right;
  for (unsigned i = 1; i <= s; ++i) {
    left.push_back(saturated_power(I, K, i) == power(I, i));
    right.push_back(saturated_power(J, L, i) == power(J, i));
  }
  const JoinedRings joined = join_rings(I.ring(), J.ring());
  const MonomialIdeal ordinary = power(sum(extend(I, joined.left), extend(J, joined.right)), s);
  const bool joint = direct_saturated(I, K, J, L, s) == ordinary;
  return assemble(std::move(left), std::move(right), joint, "saturated equality criteria");
}

EqualityCriteria check_equality_criteria_symbolic(const MonomialIdeal& I, const MonomialIdeal& J, unsigned s,
                                                  SymbolicNotion notion) {
  require_nonzero_proper(I, "check_equality_criteria_symbolic");
  require_nonzero_proper(J, "check_equality_criteria_symbolic");
  if (s == 0) throw std::invalid_argument("check_equality_criteria_symbolic needs s >= 1");
  std::vector<bool> left;
  std::vector<bool> right;
  for (unsigned i = 1; i <= s; ++i) {
    left.push_back(symbolic_power(I, i, notion) == power(I, i));
    right.push_back(symbolic_power(J, i, notion) == power(J, i));
  }
  const JoinedRings joined = join_rings(I.ring(), J.ring());
  const MonomialIdeal total = sum(extend(I, joined.left), extend(J, joined.right));
  const bool joint = symbolic_power(total, s, notion) == power(total, s);
  return assemble(std::move(left), std::move(right), joint, "symbolic equality criteria (" + to_string(notion) + ")");
}

// ---------------------------------------------------------------------------

namespace {

PrimeSet joined_pairs(const PrimeSet& left, const PrimeSet& right, const JoinedRings& joined) {
  PrimeSet out;
  for (const auto& p : left) {
    for (const auto& q : right) out.push_back(join_primes(p, q, joined));
  }
  normalize(out);
  return out;
}

MonomialPrime restrict_prime(const MonomialPrime& P, const RingEmbedding& embedding) {
  std::uint32_t support = 0;
  for (std::size_t i = 0; i < embedding.index_map.size(); ++i) {
    if (P.support() & (1u << embedding.index_map[i])) support |= 1u << i;
  }
  return MonomialPrime(embedding.source, support);
}

// Ass(A/I^i) is covered by the quotients I^{j-1}/I^j, j <= i.
void check_quotient_cover(Report& report, const MonomialIdeal& ideal, unsigned s, const std::string& side) {
  PrimeSet cover;
  for (unsigned i = 1; i <= s; ++i) {
    cover = set_union(cover, ass_module_quotient(ideal, i));
    const PrimeSet ass = associated_primes(power(ideal, i));
    report.add("Ass(" + side + "^" + std::to_string(i) + ") covered by power quotients", is_subset(ass, cover),
               to_string(cover), to_string(ass));
  }
}

}  // namespace

Report check_ass_structure(const MonomialIdeal& I, const MonomialIdeal& J, unsigned s, std::optional<unsigned> n_max) {
  require_nonzero_proper(I, "check_ass_structure");
  require_nonzero_proper(J, "check_ass_structure");
  if (s == 0) throw std::invalid_argument("check_ass_structure needs s >= 1");
  Report report{"associated prime structure of sums", {}};
  const JoinedRings joined = join_rings(I.ring(), J.ring());
  const MonomialIdeal total = sum(extend(I, joined.left), extend(J, joined.right));

  // Tensor products of cyclic quotients.
  const PrimeSet ass_I = associated_primes(I);
  const PrimeSet ass_J = associated_primes(J);
  const PrimeSet ass_sum = associated_primes(total);
  const PrimeSet expected_ass = joined_pairs(ass_I, ass_J, joined);
  report.add("Ass(R/(I+J)) = {p+q}", ass_sum == expected_ass, to_string(expected_ass), to_string(ass_sum));
  const PrimeSet min_sum = minimal_primes(total);
  const PrimeSet expected_min = joined_pairs(minimal_primes(I), minimal_primes(J), joined);
  report.add("Min(R/(I+J)) = {p+q}", min_sum == expected_min, to_string(expected_min), to_string(min_sum));

  // Grade is additive; only its vanishing is tracked.
  for (const auto& p : ass_I) {
    for (const auto& q : ass_J) {
      const MonomialPrime P = join_primes(p, q, joined);
      const bool joint = grade_zero(P, total);
      const bool split = grade_zero(p, I) && grade_zero(q, J);
      report.add("grade additivity at " + P.to_string(), joint == split, split ? "grade 0" : "grade >= 1",
                 joint ? "grade 0" : "grade >= 1");
    }
  }

  // Sandwich for Ass((I+J)^s).
  const PrimeSet ass_power = associated_primes(power(total, s));
  PrimeSet lower;
  PrimeSet upper;
  for (unsigned i = 1; i <= s; ++i) {
    const PrimeSet right_quotient = ass_module_quotient(J, s - i + 1);
    lower = set_union(lower, joined_pairs(ass_module_quotient(I, i), right_quotient, joined));
    upper = set_union(upper, joined_pairs(associated_primes(power(I, i)), right_quotient, joined));
  }
  report.add("power-quotient lower bound inside Ass((I+J)^s)", is_subset(lower, ass_power), to_string(ass_power),
             to_string(lower));
  report.add("Ass((I+J)^s) inside upper bound", is_subset(ass_power, upper), to_string(upper), to_string(ass_power));
  check_quotient_cover(report, I, s, "I");
  check_quotient_cover(report, J, s, "J");

  // Saturating by the product of the global saturators gives the symbolic
  // power of the sum. Any bound n_max >= s already captures every prime of
  // Ass((I+J)^s) restricted to either side, so the check is exact even when
  // Ass* has not visibly stabilized.
  const unsigned bound = std::max(n_max.value_or(s + 1), std::max(2u, s));
  const PrimeSet min_total = minimal_primes(total);
  for (SymbolicNotion notion : {SymbolicNotion::minimal, SymbolicNotion::associated}) {
    const MonomialIdeal K = saturator_global(I, bound, notion);
    const MonomialIdeal L = saturator_global(J, bound, notion);
    const MonomialIdeal KL = product(extend(K, joined.left), extend(L, joined.right));
    for (const auto& P : ass_power) {
      const bool cut = notion == SymbolicNotion::minimal ? !contains(min_total, P) : !grade_zero(P, total);
      const bool inside = P.to_ideal().contains(KL);
      report.add(to_string(notion) + ": " + P.to_string() + " cut out iff KL inside it", cut == inside,
                 cut ? "KL inside" : "KL not inside", inside ? "KL inside" : "KL not inside");
    }
    const MonomialIdeal saturated = saturated_power(total, KL, s);
    const MonomialIdeal symbolic = symbolic_power(total, s, notion);
    report.add(to_string(notion) + ": saturation by KL equals symbolic power", saturated == symbolic,
               symbolic.to_string(), saturated.to_string());
  }
  // Restricting any P in Ass((I+J)^s) lands in the two sides' prime sets.
  for (const auto& P : ass_power) {
    const MonomialPrime p = restrict_prime(P, joined.left);
    const MonomialPrime q = restrict_prime(P, joined.right);
    bool found = false;
    for (unsigned i = 1; i <= s && !found; ++i) {
      found = contains(associated_primes(power(I, i)), p) && contains(ass_module_quotient(J, s - i + 1), q);
    }
    report.add("restriction of " + P.to_string() + " has a witness index", found, "some i in [1,s]",
               p.to_string() + " + " + q.to_string());
  }
  return report;
}

// ---------------------------------------------------------------------------

Filtration power_filtration(const MonomialIdeal& ideal, unsigned s) {
  Filtration f;
  MonomialIdeal p = MonomialIdeal::unit(ideal.ring());
  for (unsigned i = 0; i <= s; ++i) {
    if (i) p = product(p, ideal);
    f.terms.push_back(p);
  }
  return f;
}

Filtration saturated_filtration(const MonomialIdeal& ideal, const MonomialIdeal& by, unsigned s) {
  return Filtration{saturated_powers_upto(ideal, by, s)};
}

void validate_filtration(const Filtration& f, const char* name) {
  const std::string label(name);
  if (f.terms.empty()) throw std::invalid_argument("filtration " + label + " is empty");
  const Ring& ring = f.terms.front().ring();
  for (const auto& t : f.terms) require_same_ring(ring, t.ring());
  if (!f.terms.front().is_unit()) throw std::invalid_argument("filtration " + label + " must start with (1)");
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    if (!f[i].contains(f[i + 1])) throw std::invalid_argument("filtration " + label + " is not descending");
  }
  for (std::size_t i = 1; i < f.size(); ++i) {
    for (std::size_t j = i; i + j < f.size(); ++j) {
      if (!f[i + j].contains(product(f[i], f[j]))) {
        throw std::invalid_argument("filtration " + label + " is not multiplicative at (" + std::to_string(i) +
                                    ", " + std::to_string(j) + ")");
      }
    }
  }
}

Report check_filtration_identities(const Filtration& I, const Filtration& K_filtration, const Filtration& J,
                                   const MonomialIdeal& K, unsigned s) {
  validate_filtration(I, "I");
  validate_filtration(K_filtration, "K");
  validate_filtration(J, "J");
  if (s == 0) throw std::invalid_argument("check_filtration_identities needs s >= 1");
  if (I.size() <= s || K_filtration.size() <= s || J.size() <= s) {
    throw std::invalid_argument("filtrations must have at least s + 1 terms");
  }
  const Ring& A = I[0].ring();
  require_same_ring(A, K_filtration[0].ring());
  require_same_ring(A, K.ring());
  if (K.is_zero()) throw std::invalid_argument("colon ideal K must be nonzero");

  Report report{"filtration identities", {}};
  const JoinedRings joined = join_rings(A, J[0].ring());
  auto left = [&](const MonomialIdeal& a) { return extend(a, joined.left); };
  auto right = [&](const MonomialIdeal& b) { return extend(b, joined.right); };
  // Sum over i in [from, to] of X_i * J_{t-i}.
  auto mixed_sum = [&](const Filtration& X, unsigned from, unsigned to, unsigned t) {
    MonomialIdeal acc = MonomialIdeal::zero(joined.ring);
    for (unsigned i = from; i <= to; ++i) acc = sum(acc, product(left(X[i]), right(J[t - i])));
    return acc;
  };
  auto record = [&](const std::string& name, const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
    report.add(name, lhs == rhs, rhs.to_string(), lhs.to_string());
  };

  for (unsigned i = 0; i <= s; ++i) {
    for (unsigned j = 0; j <= s; ++j) {
      record("product equals intersection I_" + std::to_string(i) + ", J_" + std::to_string(j),
             product(left(I[i]), right(J[j])), intersect(left(I[i]), right(J[j])));
    }
  }

  for (unsigned i = 1; i <= s; ++i) {
    record("(I+J) cap (K+J) = (I cap K) + J at " + std::to_string(i),
           intersect(sum(left(I[i]), right(J[i])), sum(left(K_filtration[i]), right(J[i]))),
           sum(left(intersect(I[i], K_filtration[i])), right(J[i])));
  }

  Filtration meet;
  for (unsigned i = 0; i <= s; ++i) meet.terms.push_back(intersect(I[i], K_filtration[i]));

  for (unsigned t = 1; t <= s; ++t) {
    const std::string at = " at s=" + std::to_string(t);
    MonomialIdeal inner = left(I[t - 1]);
    if (t >= 2) inner = sum(inner, mixed_sum(I, 0, t - 2, t));
    record("J_1 cap (sum + I_{s-1})" + at, intersect(right(J[1]), inner), mixed_sum(I, 0, t - 1, t));

    record("intersection of binomial sums" + at, intersect(mixed_sum(I, 0, t, t), mixed_sum(K_filtration, 0, t, t)),
           mixed_sum(meet, 0, t, t));

    MonomialIdeal colon_terms = MonomialIdeal::zero(joined.ring);
    for (unsigned i = 0; i <= t; ++i) colon_terms = sum(colon_terms, product(left(colon(I[i], K)), right(J[t - i])));
    record("colon of binomial sum by K" + at, colon(mixed_sum(I, 0, t, t), left(K)), colon_terms);
  }

  // Single-element colon inclusion, for each generator a of K.
  for (const auto& a : K.generators()) {
    const ExponentVector ea = joined.left.apply(a);
    for (unsigned t = 0; t + 1 <= s; ++t) {
      const MonomialIdeal lhs = colon(mixed_sum(I, t, s, s), ea);
      const MonomialIdeal rhs =
          sum(product(left(colon(I[t], a)), right(J[s - t])), colon(mixed_sum(I, t + 1, s, s), ea));
      report.add("colon by " + render_monomial(A, a) + " peels term " + std::to_string(t), rhs.contains(lhs),
                 "inside " + rhs.to_string(), lhs.to_string());
    }
  }
  return report;
}

}  // namespace idealkit
