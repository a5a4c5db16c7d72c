#pragma once

#include <cstdint>
#include <vector>

namespace idealkit {

using IntegerMatrix = std::vector<std::vector<std::int64_t>>;

// Rank over Q (characteristic 0) by fraction-free Bareiss elimination, or over
// F_p by Gaussian elimination. Bareiss runs in 64-bit arithmetic and restarts
// in GMP integers if an intermediate value overflows.
std::size_t matrix_rank(const IntegerMatrix& matrix, std::uint32_t characteristic);

bool is_prime(std::uint32_t p);

}  // namespace idealkit
