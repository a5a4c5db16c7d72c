#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace idealkit {

// Exponent vectors are stored inline; rings wider than this are rejected.
inline constexpr std::size_t kMaxVariables = 16;

class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch() : std::invalid_argument("ring mismatch") {}
  explicit RingMismatch(const std::string& what) : std::invalid_argument("ring mismatch: " + what) {}
};

/// Ordered list of distinct variable names of a polynomial ring over a field.
/// Copies share the name table; two rings compare equal iff their names agree.
class Ring {
 public:
  Ring();
  explicit Ring(std::vector<std::string> variables);

  std::size_t size() const { return vars_->size(); }
  const std::string& name(std::size_t i) const { return (*vars_)[i]; }
  const std::vector<std::string>& variables() const { return *vars_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::string to_string() const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> vars_;
};

void require_same_ring(const Ring& a, const Ring& b);

class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t nvars);
  ExponentVector(std::initializer_list<int> exps);
  explicit ExponentVector(const std::vector<int>& exps);

  std::size_t size() const { return n_; }
  std::uint16_t operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, long value);

  int degree() const;
  bool is_one() const;
  // Bit j set iff variable j occurs.
  std::uint32_t support() const;
  // Index of the only occurring variable; nullopt for 1 and mixed monomials.
  std::optional<std::size_t> pure_power_variable() const;

  bool divides(const ExponentVector& other) const;

  friend ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
  friend ExponentVector gcd(const ExponentVector& a, const ExponentVector& b);
  friend ExponentVector operator*(const ExponentVector& a, const ExponentVector& b);
  // a / gcd(a, b): the generator of (a) : (b).
  friend ExponentVector colon(const ExponentVector& a, const ExponentVector& b);

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }
  friend bool operator!=(const ExponentVector& a, const ExponentVector& b) { return !(a == b); }

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVariables> e_{};
  std::uint8_t n_ = 0;
};

// Canonical total order: ascending total degree, then descending lexicographic
// comparison of exponent vectors (x^2 before x*y before y^2).
bool canonical_less(const ExponentVector& a, const ExponentVector& b);

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& e) const { return e.hash(); }
};

std::string render_monomial(const Ring& ring, const ExponentVector& exps);

/// A monomial together with its ring.
struct Monomial {
  Ring ring;
  ExponentVector exponents;

  Monomial() = default;
  Monomial(Ring r, ExponentVector e);
  static Monomial one(const Ring& ring) { return Monomial(ring, ExponentVector(ring.size())); }
  static Monomial variable(const Ring& ring, std::size_t index);

  int degree() const { return exponents.degree(); }
  std::string to_string() const { return render_monomial(ring, exponents); }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.ring == b.ring && a.exponents == b.exponents;
  }
};

Monomial operator*(const Monomial& a, const Monomial& b);
Monomial pow(const Monomial& m, unsigned s);

}  // namespace idealkit
