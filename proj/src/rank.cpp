#include "idealkit/rank.hpp"

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <utility>

namespace idealkit {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace {

struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

// Bareiss elimination; the division by the previous pivot is exact.
template <typename T, typename Mul, typename Sub>
std::size_t bareiss_rank(std::vector<std::vector<T>> a, Mul mul, Sub sub) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  T previous = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        a[r][c] = sub(mul(a[rank][col], a[r][c]), mul(a[r][col], a[rank][c])) / previous;
      }
      a[r][col] = 0;
    }
    previous = a[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const IntegerMatrix& matrix, std::uint32_t p) {
  std::vector<std::vector<std::uint64_t>> a(matrix.size());
  for (std::size_t r = 0; r < matrix.size(); ++r) {
    for (std::int64_t v : matrix[r]) {
      std::int64_t m = v % static_cast<std::int64_t>(p);
      if (m < 0) m += p;
      a[r].push_back(static_cast<std::uint64_t>(m));
    }
  }
  auto inverse = [p](std::uint64_t x) {
    std::uint64_t result = 1;
    std::uint64_t base = x;
    for (std::uint64_t e = p - 2; e; e >>= 1) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
    }
    return result;
  };
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const std::uint64_t inv = inverse(a[rank][col]);
    for (std::size_t c = col; c < cols; ++c) a[rank][c] = a[rank][c] * inv % p;
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint64_t factor = a[r][col];
      if (!factor) continue;
      for (std::size_t c = col; c < cols; ++c) {
        a[r][c] = (a[r][c] + (p - factor) * a[rank][c]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t matrix_rank(const IntegerMatrix& matrix, std::uint32_t characteristic) {
  if (matrix.empty() || matrix.front().empty()) return 0;
  if (characteristic != 0) {
    if (!is_prime(characteristic)) throw std::invalid_argument("characteristic must be 0 or a prime");
    return rank_mod_p(matrix, characteristic);
  }
  try {
    return bareiss_rank<std::int64_t>(matrix, checked_mul, checked_sub);
  } catch (const Overflow&) {
    std::vector<std::vector<mpz_class>> big(matrix.size());
    for (std::size_t r = 0; r < matrix.size(); ++r) {
      for (std::int64_t v : matrix[r]) big[r].emplace_back(static_cast<long>(v));
    }
    return bareiss_rank<mpz_class>(
        std::move(big), [](const mpz_class& x, const mpz_class& y) -> mpz_class { return x * y; },
        [](const mpz_class& x, const mpz_class& y) -> mpz_class { return x - y; });
  }
}

}  // namespace idealkit
