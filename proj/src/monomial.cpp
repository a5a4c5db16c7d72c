#include "idealkit/monomial.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace idealkit {

Ring::Ring() : vars_(std::make_shared<const std::vector<std::string>>()) {}

Ring::Ring(std::vector<std::string> variables) {
  if (variables.size() > kMaxVariables) {
    throw std::invalid_argument("ring has " + std::to_string(variables.size()) +
                                " variables; at most " + std::to_string(kMaxVariables) +
                                " are supported");
  }
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name '" + v + "'");
  }
  vars_ = std::make_shared<const std::vector<std::string>>(std::move(variables));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    if ((*vars_)[i] == name) return i;
  }
  return std::nullopt;
}

std::string Ring::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ", ";
    out += name(i);
  }
  return out + "]";
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) throw RingMismatch(a.to_string() + " vs " + b.to_string());
}

// ---------------------------------------------------------------------------

namespace {

std::uint16_t checked_exponent(long value) {
  if (value < 0) throw std::invalid_argument("negative exponent");
  if (value > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
  return static_cast<std::uint16_t>(value);
}

}  // namespace

ExponentVector::ExponentVector(std::size_t nvars) {
  if (nvars > kMaxVariables) throw std::invalid_argument("too many variables");
  n_ = static_cast<std::uint8_t>(nvars);
}

ExponentVector::ExponentVector(std::initializer_list<int> exps) : ExponentVector(exps.size()) {
  std::size_t i = 0;
  for (int e : exps) e_[i++] = checked_exponent(e);
}

ExponentVector::ExponentVector(const std::vector<int>& exps) : ExponentVector(exps.size()) {
  for (std::size_t i = 0; i < exps.size(); ++i) e_[i] = checked_exponent(exps[i]);
}

void ExponentVector::set(std::size_t i, long value) { e_[i] = checked_exponent(value); }

int ExponentVector::degree() const {
  int d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += e_[i];
  return d;
}

bool ExponentVector::is_one() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i]) return false;
  }
  return true;
}

std::uint32_t ExponentVector::support() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i]) mask |= 1u << i;
  }
  return mask;
}

std::optional<std::size_t> ExponentVector::pure_power_variable() const {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < n_; ++i) {
    if (!e_[i]) continue;
    if (found) return std::nullopt;
    found = i;
  }
  return found;
}

bool ExponentVector::divides(const ExponentVector& other) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

ExponentVector gcd(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
  return r;
}

ExponentVector operator*(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = checked_exponent(long{a.e_[i]} + b.e_[i]);
  return r;
}

ExponentVector colon(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] - b.e_[i] : 0;
  return r;
}

std::size_t ExponentVector::hash() const {
  std::size_t h = n_;
  for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ e_[i];
  return h;
}

bool canonical_less(const ExponentVector& a, const ExponentVector& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

std::string render_monomial(const Ring& ring, const ExponentVector& exps) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (!exps[i]) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------

Monomial::Monomial(Ring r, ExponentVector e) : ring(std::move(r)), exponents(e) {
  if (exponents.size() != ring.size()) {
    throw std::invalid_argument("exponent vector length does not match the ring");
  }
}

Monomial Monomial::variable(const Ring& ring, std::size_t index) {
  ExponentVector e(ring.size());
  e.set(index, 1);
  return Monomial(ring, e);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_ring(a.ring, b.ring);
  return Monomial(a.ring, a.exponents * b.exponents);
}

Monomial pow(const Monomial& m, unsigned s) {
  ExponentVector r(m.ring.size());
  for (std::size_t i = 0; i < r.size(); ++i) r.set(i, static_cast<long>(m.exponents[i]) * s);
  return Monomial(m.ring, r);
}

}  // namespace idealkit
