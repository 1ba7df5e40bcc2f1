#include "rimfloer/grid/states.hpp"

#include "rimfloer/error.hpp"

namespace rimfloer::grid {

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

std::uint64_t pack_state(const Perm &x) {
    if (x.size() > kMaxPackedSize) throw Error(ErrorCode::TooLarge, "state too large to pack");
    std::uint64_t p = 0;
    for (std::size_t i = 0; i < x.size(); ++i) p |= static_cast<std::uint64_t>(x[i]) << (4 * i);
    return p;
}

Perm unpack_state(std::uint64_t packed, int n) {
    Perm x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = static_cast<int>((packed >> (4 * i)) & 0xFU);
    return x;
}

std::uint64_t state_rank(const Perm &x) {
    const int n = static_cast<int>(x.size());
    std::uint64_t rank = 0;
    std::uint32_t used = 0;
    for (int i = 0; i < n; ++i) {
        const int v = x[static_cast<std::size_t>(i)];
        const int smaller_unused = v - __builtin_popcount(used & ((1U << v) - 1U));
        rank += static_cast<std::uint64_t>(smaller_unused) * factorial(n - 1 - i);
        used |= 1U << v;
    }
    return rank;
}

Perm state_unrank(std::uint64_t rank, int n) {
    Perm x(static_cast<std::size_t>(n));
    std::uint32_t used = 0;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t f = factorial(n - 1 - i);
        auto k = static_cast<int>(rank / f);
        rank %= f;
        int v = 0;
        for (;; ++v) {
            if ((used >> v) & 1U) continue;
            if (k-- == 0) break;
        }
        x[static_cast<std::size_t>(i)] = v;
        used |= 1U << v;
    }
    return x;
}

}  // namespace rimfloer::grid
