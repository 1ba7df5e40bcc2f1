#include "gf2_elim.hpp"
#include "rimfloer/error.hpp"
#include "rimfloer/grid/hfk.hpp"
#include "rimfloer/grid/states.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <map>

namespace rimfloer::grid {

void require_homology_input(const GridDiagram &g, int max_size) {
    if (!g.is_knot()) {
        throw Error(ErrorCode::NotAKnot, "grid presents a link with " + std::to_string(g.components()) + " components");
    }
    const int cap = std::min(max_size, kMaxGridSize);
    if (g.size() > cap) {
        throw Error(ErrorCode::TooLarge, "grid size " + std::to_string(g.size()) + " exceeds the cap of " +
                                             std::to_string(cap));
    }
}

namespace {

constexpr int kStackSize = kMaxGridSize;
using Row = std::array<std::int8_t, kStackSize>;

/// Per-rank gradings, piece ids and local indices of every state.
struct GradedStates {
    int n = 0;
    std::vector<std::int32_t> piece;        // piece id per rank
    std::vector<std::uint32_t> local;       // index inside its piece
    std::vector<std::pair<int, int>> keys;  // piece id -> (M, 2A)
    std::map<std::pair<int, int>, std::int32_t> id_of;
    std::vector<std::vector<std::uint64_t>> members;  // piece id -> ranks, ascending
};

int rising_pairs(const Row &p, int n) {
    int c = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) c += p[i] < p[j] ? 1 : 0;
    }
    return c;
}

int mixed_pairs(const Row &x, const Row &m, int n) {
    int c = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) c += ((i <= j && x[i] <= m[j]) || (j < i && m[j] < x[i])) ? 1 : 0;
    }
    return c;
}

Row to_row(const Perm &p) {
    Row r{};
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = static_cast<std::int8_t>(p[i]);
    return r;
}

void set_threads(const HomologyOptions &options) {
    if (options.threads > 0) omp_set_num_threads(options.threads);
}

GradedStates grade_all(const GridDiagram &g) {
    const int n = g.size();
    const auto total = static_cast<std::int64_t>(factorial(n));
    const Row xs = to_row(g.x()), os = to_row(g.o());
    const int oo = rising_pairs(os, n), xx_markers = rising_pairs(xs, n);

    std::vector<std::int32_t> maslov(static_cast<std::size_t>(total)), alex2(static_cast<std::size_t>(total));
#pragma omp parallel
    {
        const int threads = omp_get_num_threads();
        const int me = omp_get_thread_num();
        const std::int64_t begin = total * me / threads, end = total * (me + 1) / threads;
        if (begin < end) {
            Perm p = state_unrank(static_cast<std::uint64_t>(begin), n);
            for (std::int64_t r = begin; r < end; ++r) {
                const Row x = to_row(p);
                const int xx = rising_pairs(x, n);
                const int mo = xx - mixed_pairs(x, os, n) + oo + 1;
                const int mx = xx - mixed_pairs(x, xs, n) + xx_markers + 1;
                maslov[static_cast<std::size_t>(r)] = mo;
                alex2[static_cast<std::size_t>(r)] = mo - mx - (n - 1);
                std::next_permutation(p.begin(), p.end());
            }
        }
    }

    GradedStates gs;
    gs.n = n;
    gs.piece.resize(static_cast<std::size_t>(total));
    gs.local.resize(static_cast<std::size_t>(total));
    for (std::int64_t r = 0; r < total; ++r) {
        const auto rr = static_cast<std::size_t>(r);
        const std::pair<int, int> key{maslov[rr], alex2[rr]};
        auto [it, inserted] = gs.id_of.try_emplace(key, static_cast<std::int32_t>(gs.keys.size()));
        if (inserted) {
            gs.keys.push_back(key);
            gs.members.emplace_back();
        }
        auto &bucket = gs.members[static_cast<std::size_t>(it->second)];
        gs.piece[rr] = it->second;
        gs.local[rr] = static_cast<std::uint32_t>(bucket.size());
        bucket.push_back(static_cast<std::uint64_t>(r));
    }
    return gs;
}

/// Ranks of the states reached from x by empty rectangles, mod 2.
detail::SparseRow boundary_ranks(const Perm &x, const Row &xs, const Row &os, int n) {
    const Row xr = to_row(x);
    detail::SparseRow out;
    auto in_cyclic = [n](int v, int a, int b) { return (v - a + n) % n < (b - a + n) % n; };
    Perm y = x;
    for (int left = 0; left < n; ++left) {
        for (int right = 0; right < n; ++right) {
            if (left == right) continue;
            const int lo = xr[left], hi = xr[right];
            bool empty = !in_cyclic(xs[left], lo, hi) && !in_cyclic(os[left], lo, hi);
            for (int c = (left + 1) % n; empty && c != right; c = (c + 1) % n) {
                empty = !in_cyclic(xs[c], lo, hi) && !in_cyclic(os[c], lo, hi) && !in_cyclic(xr[c], lo, hi);
            }
            if (!empty) continue;
            std::swap(y[static_cast<std::size_t>(left)], y[static_cast<std::size_t>(right)]);
            out.push_back(static_cast<std::uint32_t>(state_rank(y)));
            std::swap(y[static_cast<std::size_t>(left)], y[static_cast<std::size_t>(right)]);
        }
    }
    detail::normalize_mod2(out);
    return out;
}

/// Boundary of every state of `piece`, in local indices of the piece one
/// Maslov grading lower.
std::vector<detail::SparseRow> piece_boundaries(const GradedStates &gs, std::int32_t piece, const GridDiagram &g) {
    const Row xs = to_row(g.x()), os = to_row(g.o());
    const auto &members = gs.members[static_cast<std::size_t>(piece)];
    std::vector<detail::SparseRow> rows(members.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
        detail::SparseRow r = boundary_ranks(state_unrank(members[k], gs.n), xs, os, gs.n);
        for (auto &v : r) v = gs.local[v];
        std::sort(r.begin(), r.end());
        rows[k] = std::move(r);
    }
    return rows;
}

}  // namespace

BigradedRanks homology(const GridDiagram &g, const HomologyOptions &options) {
    require_homology_input(g, options.max_size);
    set_threads(options);
    const GradedStates gs = grade_all(g);
    const auto pieces = static_cast<std::int64_t>(gs.keys.size());

    std::vector<std::size_t> out_rank(static_cast<std::size_t>(pieces), 0);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t p = 0; p < pieces; ++p) {
        const auto [m, a2] = gs.keys[static_cast<std::size_t>(p)];
        const auto target = gs.id_of.find({m - 1, a2});
        if (target == gs.id_of.end()) continue;
        detail::Gf2Eliminator elim(gs.members[static_cast<std::size_t>(target->second)].size());
        for (auto &row : piece_boundaries(gs, static_cast<std::int32_t>(p), g)) elim.insert(std::move(row));
        out_rank[static_cast<std::size_t>(p)] = elim.rank();
    }

    BigradedRanks out;
    for (std::size_t p = 0; p < gs.keys.size(); ++p) {
        const auto [m, a2] = gs.keys[p];
        const auto incoming = gs.id_of.find({m + 1, a2});
        const std::size_t in_rank =
            incoming == gs.id_of.end() ? 0 : out_rank[static_cast<std::size_t>(incoming->second)];
        const auto h = static_cast<std::int64_t>(gs.members[p].size() - out_rank[p] - in_rank);
        if (h > 0) out[{m, a2 / 2}] = h;
    }
    return out;
}

BigradedRanks deconvolve(const BigradedRanks &ranks, int n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "grid size must be positive");
    // Along each diagonal M - A = d the factor (1 + q^-1 t^-1) is 1 + s with s
    // lowering M by one.
    std::map<int, std::map<int, std::int64_t>> diagonals;
    for (const auto &[key, r] : ranks) {
        if (r != 0) diagonals[key.first - key.second][key.first] += r;
    }
    for (int step = 1; step < n; ++step) {
        for (auto &[d, line] : diagonals) {
            if (line.empty()) continue;
            std::map<int, std::int64_t> quotient;
            std::int64_t carry = 0;
            const int top = line.rbegin()->first, bottom = line.begin()->first;
            for (int m = top; m > bottom; --m) {
                const auto it = line.find(m);
                const std::int64_t r = (it == line.end() ? 0 : it->second) - carry;
                if (r < 0) throw Error(ErrorCode::InexactDivision, "ranks do not factor through W");
                if (r > 0) quotient[m] = r;
                carry = r;
            }
            if (line.at(bottom) != carry) throw Error(ErrorCode::InexactDivision, "ranks do not factor through W");
            line = std::move(quotient);
        }
    }
    BigradedRanks out;
    for (const auto &[d, line] : diagonals) {
        for (const auto &[m, r] : line) out[{m, m - d}] = r;
    }
    return out;
}

polyalg::LaurentPoly euler_characteristic(const BigradedRanks &ranks) {
    polyalg::LaurentPoly p(polyalg::Ring::Int, 1);
    for (const auto &[key, r] : ranks) p.add_term({key.second}, mpq_class(static_cast<long>(key.first % 2 == 0 ? r : -r)));
    return p;
}

std::int64_t total_rank(const BigradedRanks &ranks) {
    std::int64_t t = 0;
    for (const auto &[key, r] : ranks) t += r;
    return t;
}

CycleClass transverse_state(const GridDiagram &g, bool minus) {
    if (!g.is_knot()) throw Error(ErrorCode::NotAKnot, "transverse invariant needs a knot grid");
    const int n = g.size();
    Perm x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int row = g.x()[static_cast<std::size_t>(i)];
        if (minus) {
            x[static_cast<std::size_t>(i)] = row;
        } else {
            x[static_cast<std::size_t>((i + 1) % n)] = (row + 1) % n;
        }
    }
    const Bigrading b = gradings(x, g);
    return {{std::move(x)}, b};
}

bool is_nonzero_class(const CycleClass &c, const GridDiagram &g, const HomologyOptions &options) {
    if (c.states.empty()) return false;
    for (const Perm &s : c.states) {
        if (gradings(s, g) != c.grading) {
            throw Error(ErrorCode::GradingMismatch, "chain is not homogeneous in the declared bigrading");
        }
    }
    std::vector<Perm> boundary;
    for (const Perm &s : c.states) {
        auto d = differential_tilde(s, g);
        boundary.insert(boundary.end(), d.begin(), d.end());
    }
    std::sort(boundary.begin(), boundary.end());
    for (std::size_t i = 0; i < boundary.size(); i += 2) {
        if (i + 1 >= boundary.size() || boundary[i] != boundary[i + 1]) {
            throw Error(ErrorCode::InvalidArgument, "chain is not a cycle");
        }
    }

    require_homology_input(g, options.max_size);
    set_threads(options);
    const GradedStates gs = grade_all(g);
    const auto here = gs.id_of.find({c.grading.maslov, c.grading.twice_alexander});
    const auto above = gs.id_of.find({c.grading.maslov + 1, c.grading.twice_alexander});
    if (above == gs.id_of.end()) return true;

    detail::Gf2Eliminator elim(gs.members[static_cast<std::size_t>(here->second)].size());
    for (auto &row : piece_boundaries(gs, above->second, g)) elim.insert(std::move(row));
    detail::SparseRow chain;
    for (const Perm &s : c.states) chain.push_back(gs.local[state_rank(s)]);
    detail::normalize_mod2(chain);
    return !elim.in_span(std::move(chain));
}

}  // namespace rimfloer::grid
