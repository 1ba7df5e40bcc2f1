#include "rimfloer/error.hpp"
#include "rimfloer/grid/hfk.hpp"

#include <algorithm>
#include <cstdlib>

namespace rimfloer::grid {

namespace {

/// pairs (i, j), i < j, with p[i] < p[j]
int rising_pairs(const Perm &p) {
    int count = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) count += p[i] < p[j] ? 1 : 0;
    }
    return count;
}

/// I(x, M) + I(M, x) for lattice state x and markers at cell centers.
int mixed_pairs(const Perm &x, const Perm &m) {
    int count = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (i <= j && x[i] <= m[j]) ++count;
            if (j < i && m[j] < x[i]) ++count;
        }
    }
    return count;
}

}  // namespace

int Bigrading::alexander() const {
    if (!alexander_is_integral()) throw Error(ErrorCode::InvalidGrid, "Alexander grading is not an integer");
    return twice_alexander / 2;
}

Bigrading gradings(const Perm &x, const GridDiagram &g) {
    if (static_cast<int>(x.size()) != g.size()) {
        throw Error(ErrorCode::SizeMismatch, "state of size " + std::to_string(x.size()) + " on a grid of size " +
                                                 std::to_string(g.size()));
    }
    require_permutation(x, "state");
    const int xx = rising_pairs(x);
    const int mo = xx - mixed_pairs(x, g.o()) + rising_pairs(g.o()) + 1;
    const int mx = xx - mixed_pairs(x, g.x()) + rising_pairs(g.x()) + 1;
    return {mo, mo - mx - (g.size() - 1)};
}

std::vector<Perm> differential_tilde(const Perm &x, const GridDiagram &g) {
    (void)gradings(x, g);
    const int n = g.size();
    auto in_cyclic = [n](int v, int a, int b) { return (v - a + n) % n < (b - a + n) % n; };
    std::vector<Perm> out;
    for (int left = 0; left < n; ++left) {
        for (int right = 0; right < n; ++right) {
            if (left == right) continue;
            const int lo = x[static_cast<std::size_t>(left)], hi = x[static_cast<std::size_t>(right)];
            bool empty = true;
            for (int c = left; empty && c != right; c = (c + 1) % n) {
                const auto cc = static_cast<std::size_t>(c);
                if (in_cyclic(g.x()[cc], lo, hi) || in_cyclic(g.o()[cc], lo, hi)) empty = false;
                if (c != left && in_cyclic(x[cc], lo, hi)) empty = false;
            }
            if (!empty) continue;
            Perm y = x;
            std::swap(y[static_cast<std::size_t>(left)], y[static_cast<std::size_t>(right)]);
            out.push_back(std::move(y));
        }
    }
    std::sort(out.begin(), out.end());
    // Keep states reached an odd number of times.
    std::vector<Perm> odd;
    for (std::size_t i = 0; i < out.size();) {
        std::size_t j = i;
        while (j < out.size() && out[j] == out[i]) ++j;
        if ((j - i) % 2 == 1) odd.push_back(out[i]);
        i = j;
    }
    return odd;
}

int default_max_size() {
    if (const char *env = std::getenv("RIMFLOER_GRID_MAX_SIZE")) {
        const int v = std::atoi(env);
        if (v >= 2) return std::min(v, kMaxGridSize);
    }
    return 8;
}

}  // namespace rimfloer::grid
