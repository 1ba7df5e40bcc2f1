#pragma once

#include "rimfloer/grid/diagram.hpp"

#include <cstdint>

namespace rimfloer::grid {

/// Largest grid size whose states fit the 4-bit packing and 64-bit ranks.
inline constexpr int kMaxPackedSize = 16;

[[nodiscard]] std::uint64_t factorial(int n);

/// 4 bits per column, column 0 in the low nibble.
[[nodiscard]] std::uint64_t pack_state(const Perm &x);
[[nodiscard]] Perm unpack_state(std::uint64_t packed, int n);

/// Position of x in the lexicographic order of all permutations of its size.
[[nodiscard]] std::uint64_t state_rank(const Perm &x);
[[nodiscard]] Perm state_unrank(std::uint64_t rank, int n);

}  // namespace rimfloer::grid
