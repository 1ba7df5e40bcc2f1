#include "oracles/dense_grid.hpp"
#include "support.hpp"

#include "rimfloer/grid/diagram.hpp"
#include "rimfloer/grid/hfk.hpp"
#include "rimfloer/grid/states.hpp"
#include "rimfloer/polyalg/text.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

using namespace rimfloer;
using namespace rimfloer::grid;
using support::error_of;

namespace {

const GridDiagram kUnknot({1, 0}, {0, 1});
// X on the diagonal shifted by two: a torus-knot grid for the trefoil.
const GridDiagram kTrefoil({2, 3, 4, 0, 1}, {0, 1, 2, 3, 4});
const GridDiagram kFigureEight = parse_grid("X: 4 2 3 6 1 5\nO: 6 5 1 2 4 3\n");
const GridDiagram kFiveTwo = parse_grid("X: 2 6 5 4 1 7 3\nO: 4 3 7 6 5 2 1\n");

oracle::DenseGrid dense(const GridDiagram &g) { return {g.x(), g.o()}; }

BigradedRanks from_oracle(const std::map<std::pair<int, int>, long> &r) {
    BigradedRanks out;
    for (const auto &[k, v] : r) {
        REQUIRE(k.second % 2 == 0);
        out[{k.first, k.second / 2}] = v;
    }
    return out;
}

Perm random_perm(int n, std::mt19937 &rng) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

GridDiagram random_grid(int n, std::mt19937 &rng, bool knot) {
    for (;;) {
        Perm x = random_perm(n, rng), o = random_perm(n, rng);
        bool ok = true;
        for (int i = 0; i < n; ++i) ok = ok && x[static_cast<std::size_t>(i)] != o[static_cast<std::size_t>(i)];
        if (!ok) continue;
        GridDiagram g(x, o);
        if (!knot || g.is_knot()) return g;
    }
}

std::vector<Perm> all_states(int n) {
    std::vector<Perm> out;
    Perm s(static_cast<std::size_t>(n));
    std::iota(s.begin(), s.end(), 0);
    do out.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
    return out;
}

}  // namespace

TEST_CASE("grid diagram validation and text format") {
    CHECK(error_of([] { GridDiagram({0, 1}, {0, 1}); }) == ErrorCode::InvalidGrid);
    CHECK(error_of([] { GridDiagram({0, 0}, {1, 1}); }) == ErrorCode::InvalidGrid);
    CHECK(error_of([] { GridDiagram({0}, {0}); }) == ErrorCode::InvalidGrid);
    CHECK(error_of([] { GridDiagram({1, 0, 2}, {0, 1}); }) == ErrorCode::InvalidGrid);

    CHECK(format_grid(kTrefoil) == "X: 3 4 5 1 2\nO: 1 2 3 4 5\n");
    CHECK(parse_grid(format_grid(kFigureEight)) == kFigureEight);
    CHECK(parse_grid("  X: 2 1\n\nO: 1 2") == kUnknot);
    CHECK(error_of([] { (void)parse_grid("X: 1 2\n"); }) == ErrorCode::ParseError);
    CHECK(error_of([] { (void)parse_grid("X: 1 x\nO: 2 1\n"); }) == ErrorCode::ParseError);
    CHECK(error_of([] { (void)parse_grid("X: 1 2\nO: 1 2\n"); }) == ErrorCode::InvalidGrid);
    CHECK(error_of([] { (void)load_grid("/nonexistent/grid.txt"); }) == ErrorCode::FileNotFound);

    const auto path = std::filesystem::temp_directory_path() / "rimfloer_test_grid.txt";
    std::ofstream(path) << format_grid(kFiveTwo);
    CHECK(load_grid(path.string()) == kFiveTwo);
    std::filesystem::remove(path);
}

TEST_CASE("components") {
    CHECK(kUnknot.components() == 1);
    CHECK(kTrefoil.is_knot());
    CHECK(kFigureEight.is_knot());
    // Two disjoint unknots.
    CHECK(GridDiagram({1, 0, 3, 2}, {0, 1, 2, 3}).components() == 2);
    // Hopf link.
    CHECK(GridDiagram({2, 3, 0, 1}, {0, 1, 2, 3}).components() == 2);
}

TEST_CASE("state packing and ranking") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(8) == 40320);
    const auto states = all_states(5);
    for (std::size_t r = 0; r < states.size(); ++r) {
        CHECK(state_rank(states[r]) == r);
        CHECK(state_unrank(r, 5) == states[r]);
        CHECK(unpack_state(pack_state(states[r]), 5) == states[r]);
    }
    std::mt19937 rng(7);
    for (int k = 0; k < 50; ++k) {
        const Perm p = random_perm(11, rng);
        CHECK(state_unrank(state_rank(p), 11) == p);
        CHECK(unpack_state(pack_state(p), 11) == p);
    }
}

TEST_CASE("gradings agree with the oracle formula") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + trial % 5;
        const GridDiagram g = random_grid(n, rng, false);
        for (int k = 0; k < 10; ++k) {
            const Perm s = random_perm(n, rng);
            const auto [m, a2] = oracle::grading(s, dense(g));
            const Bigrading b = gradings(s, g);
            CHECK(b.maslov == m);
            CHECK(b.twice_alexander == a2);
        }
    }
    CHECK(error_of([] { (void)gradings({0, 1, 2}, kUnknot); }) == ErrorCode::SizeMismatch);
}

TEST_CASE("gradings are invariant under cyclic shifts of the fundamental domain") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + trial % 4;
        const GridDiagram g = random_grid(n, rng, true);
        const Perm s = random_perm(n, rng);
        const Bigrading base = gradings(s, g);
        for (int k = 1; k < n; ++k) {
            Perm cols(static_cast<std::size_t>(n)), rows(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                cols[static_cast<std::size_t>((i + k) % n)] = s[static_cast<std::size_t>(i)];
                rows[static_cast<std::size_t>(i)] = (s[static_cast<std::size_t>(i)] + k) % n;
            }
            CHECK(gradings(cols, cyclic_shift_columns(g, k)) == base);
            CHECK(gradings(rows, cyclic_shift_rows(g, k)) == base);
        }
    }
}

TEST_CASE("unknot grid states") {
    const Bigrading a = gradings({0, 1}, kUnknot), b = gradings({1, 0}, kUnknot);
    std::set<int> alex = {a.alexander(), b.alexander()};
    CHECK(alex == std::set<int>{0, -1});
    CHECK(std::abs(a.maslov - b.maslov) == 1);
}

TEST_CASE("differential matches the rectangle oracle") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + trial % 5;
        const GridDiagram g = random_grid(n, rng, false);
        for (int k = 0; k < 8; ++k) {
            const Perm s = random_perm(n, rng);
            CHECK(differential_tilde(s, g) == oracle::differential(s, dense(g)));
        }
    }
}

TEST_CASE("chain complex properties on random grids") {
    std::mt19937 rng(19);
    int grids = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + trial % 5;
        const GridDiagram g = random_grid(n, rng, true);
        ++grids;
        bool square_zero = true, graded = true;
        for (const Perm &s : all_states(n)) {
            const Bigrading gs = gradings(s, g);
            std::map<Perm, int> twice;
            for (const Perm &y : differential_tilde(s, g)) {
                const Bigrading gy = gradings(y, g);
                graded = graded && gy.maslov == gs.maslov - 1 && gy.twice_alexander == gs.twice_alexander;
                for (const Perm &z : differential_tilde(y, g)) twice[z] ^= 1;
            }
            for (const auto &[z, c] : twice) square_zero = square_zero && c == 0;
        }
        CHECK(square_zero);
        CHECK(graded);
        const BigradedRanks h = homology(g, {.max_size = 6});
        CHECK(total_rank(h) % (std::int64_t{1} << (n - 1)) == 0);
        CHECK_NOTHROW((void)deconvolve(h, n));
        const CycleClass plus = transverse_state(g);
        CHECK(differential_tilde(plus.states.front(), g).empty());
        const CycleClass minus = transverse_state(g, true);
        CHECK(differential_tilde(minus.states.front(), g).empty());
    }
    CHECK(grids >= 100);
}

TEST_CASE("homology matches the dense oracle") {
    CHECK(homology(kTrefoil) == from_oracle(oracle::homology(dense(kTrefoil))));
    CHECK(homology(kFigureEight) == from_oracle(oracle::homology(dense(kFigureEight))));
    std::mt19937 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        const GridDiagram g = random_grid(3 + trial % 4, rng, true);
        const BigradedRanks expected = from_oracle(oracle::homology(dense(g)));
        CHECK(homology(g) == expected);
        CHECK(homology_reference(g) == expected);
        CHECK(homology(g, {.max_size = 8, .threads = 1}) == expected);
    }
}

TEST_CASE("deconvolved knot Floer homology of small knots") {
    CHECK(deconvolve(homology(kUnknot), 2) == BigradedRanks{{{0, 0}, 1}});
    const BigradedRanks trefoil = deconvolve(homology(kTrefoil), 5);
    const BigradedRanks right{{{0, 1}, 1}, {{-1, 0}, 1}, {{-2, -1}, 1}};
    const BigradedRanks left{{{2, 1}, 1}, {{1, 0}, 1}, {{0, -1}, 1}};
    CHECK((trefoil == right || trefoil == left));
    CHECK(deconvolve(homology(mirror(kTrefoil)), 5) == (trefoil == right ? left : right));

    const BigradedRanks fig8 = deconvolve(homology(kFigureEight), 6);
    CHECK(total_rank(fig8) == 5);
    CHECK(fig8 == BigradedRanks{{{1, 1}, 1}, {{0, 0}, 3}, {{-1, -1}, 1}});
    CHECK(total_rank(deconvolve(homology(kFiveTwo), 7)) == 7);

    const auto t = polyalg::Ring::Int;
    CHECK(euler_characteristic(trefoil) == polyalg::parse_poly("t^-1 - 1 + t", t));
    CHECK(euler_characteristic(fig8) == polyalg::parse_poly("-t^-1 + 3 - t", t));
}

TEST_CASE("state sum gives the Alexander polynomial times the stabilization factor") {
    const auto ring = polyalg::Ring::Int;
    polyalg::LaurentPoly sum(ring, 1);
    for (const Perm &s : all_states(5)) {
        const Bigrading b = gradings(s, kTrefoil);
        sum += polyalg::LaurentPoly::monomial(ring, {b.alexander()}, b.maslov % 2 == 0 ? 1 : -1);
    }
    polyalg::LaurentPoly expected = polyalg::parse_poly("t^-1 - 1 + t", ring);
    const polyalg::LaurentPoly factor = polyalg::parse_poly("1 - t^-1", ring);
    for (int k = 0; k < 4; ++k) expected = expected * factor;
    CHECK(polyalg::monomial_equivalent(sum, expected));
}

TEST_CASE("deconvolve") {
    CHECK(deconvolve({{{0, 0}, 1}, {{-1, -1}, 1}}, 2) == BigradedRanks{{{0, 0}, 1}});
    CHECK(deconvolve({{{0, 0}, 1}}, 1) == BigradedRanks{{{0, 0}, 1}});
    CHECK(error_of([] { (void)deconvolve({{{0, 0}, 1}}, 2); }) == ErrorCode::InexactDivision);
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> g(-3, 3), r(1, 3);
    for (int trial = 0; trial < 30; ++trial) {
        BigradedRanks base;
        for (int k = 0; k < 4; ++k) base[{g(rng), g(rng)}] += r(rng);
        const int n = 1 + trial % 5;
        BigradedRanks full = base;
        for (int k = 1; k < n; ++k) {
            BigradedRanks next;
            for (const auto &[key, v] : full) {
                next[key] += v;
                next[{key.first - 1, key.second - 1}] += v;
            }
            full = next;
        }
        CHECK(deconvolve(full, n) == base);
    }
}

TEST_CASE("homology errors") {
    const GridDiagram hopf({2, 3, 0, 1}, {0, 1, 2, 3});
    CHECK(error_of([&] { (void)homology(hopf); }) == ErrorCode::NotAKnot);
    CHECK(error_of([&] { (void)transverse_state(hopf); }) == ErrorCode::NotAKnot);
    CHECK(error_of([] { (void)homology(kFiveTwo, {.max_size = 6}); }) == ErrorCode::TooLarge);
    CHECK(error_of([] { (void)homology_reference(kFiveTwo, {.max_size = 6}); }) == ErrorCode::TooLarge);
    std::mt19937 rng(31);
    const GridDiagram big = random_grid(9, rng, true);
    CHECK(error_of([&] { (void)homology(big); }) == ErrorCode::TooLarge);
}

TEST_CASE("size cap from the environment") {
    ::setenv("RIMFLOER_GRID_MAX_SIZE", "6", 1);
    CHECK(default_max_size() == 6);
    ::setenv("RIMFLOER_GRID_MAX_SIZE", "99", 1);
    CHECK(default_max_size() == kMaxGridSize);
    ::unsetenv("RIMFLOER_GRID_MAX_SIZE");
    CHECK(default_max_size() == 8);
}

TEST_CASE("homology is invariant under grid moves") {
    const std::vector<GridDiagram> corpus = {kTrefoil, kFigureEight, mirror(kTrefoil)};
    std::mt19937 rng(37);
    for (const GridDiagram &g : corpus) {
        const int n = g.size();
        const BigradedRanks base = deconvolve(homology(g), n);
        for (int k = 1; k < n; ++k) {
            CHECK(deconvolve(homology(cyclic_shift_columns(g, k)), n) == base);
            CHECK(deconvolve(homology(cyclic_shift_rows(g, k)), n) == base);
        }
        for (int c = 0; c + 1 < n; ++c) {
            if (can_commute_columns(g, c)) CHECK(deconvolve(homology(commute_columns(g, c)), n) == base);
            if (can_commute_rows(g, c)) CHECK(deconvolve(homology(commute_rows(g, c)), n) == base);
        }
        if (n <= 6) {
            for (int trial = 0; trial < 4; ++trial) {
                const int col = static_cast<int>(rng() % static_cast<unsigned>(n));
                const GridDiagram s = stabilize(g, col, rng() % 2 ? Marker::X : Marker::O, rng() % 2, rng() % 2);
                CHECK(s.size() == n + 1);
                CHECK(deconvolve(homology(s), n + 1) == base);
            }
        }
    }
}

TEST_CASE("stabilize and destabilize are inverse") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + trial % 5;
        const GridDiagram g = random_grid(n, rng, false);
        const int col = static_cast<int>(rng() % static_cast<unsigned>(n));
        const bool right = rng() % 2, above = rng() % 2;
        const Marker m = rng() % 2 ? Marker::X : Marker::O;
        const GridDiagram s = stabilize(g, col, m, right, above);
        CHECK(s.components() == g.components());
        bool found = false;
        for (int c = 0; c < s.size() && !found; ++c) {
            if (auto d = destabilize(s, c)) found = *d == g;
        }
        CHECK(found);
    }
    CHECK_FALSE(destabilize(kUnknot, 0).has_value());
}

TEST_CASE("commutation legality") {
    // Columns 0 and 1 of the trefoil grid interleave: rows {0,2} and {1,3}.
    CHECK_FALSE(can_commute_columns(kTrefoil, 0));
    const GridDiagram nested({3, 1, 2, 0}, {0, 2, 1, 3});
    CHECK(can_commute_columns(nested, 0));
    CHECK(commute_columns(nested, 0) == GridDiagram({1, 3, 2, 0}, {2, 0, 1, 3}));
    CHECK(error_of([&] { (void)commute_columns(kTrefoil, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("transverse state") {
    const CycleClass plus = transverse_state(kTrefoil);
    REQUIRE(plus.states.size() == 1);
    const Perm &s = plus.states.front();
    for (int i = 0; i < 5; ++i) {
        CHECK(s[static_cast<std::size_t>((i + 1) % 5)] == (kTrefoil.x()[static_cast<std::size_t>(i)] + 1) % 5);
    }
    CHECK(plus.grading == gradings(s, kTrefoil));
    CHECK(transverse_state(kTrefoil, true).states.front() == kTrefoil.x());
    CHECK(is_nonzero_class(transverse_state(kUnknot), kUnknot));

    std::mt19937 rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        const GridDiagram g = random_grid(2 + trial % 5, rng, true);
        CHECK(differential_tilde(transverse_state(g).states.front(), g).empty());
    }
}

TEST_CASE("nonzero class test") {
    CHECK_FALSE(is_nonzero_class(CycleClass{{}, {0, 0}}, kTrefoil));
    const CycleClass plus = transverse_state(kTrefoil);
    // Decide against the oracle: x+ is nonzero iff the homology in its
    // bigrading is not reduced by adding x+ to the boundaries.
    const oracle::DenseGrid d = dense(kTrefoil);
    std::vector<Perm> above;
    for (const Perm &s : all_states(5)) {
        const auto [m, a2] = oracle::grading(s, d);
        if (m == plus.grading.maslov + 1 && a2 == plus.grading.twice_alexander) above.push_back(s);
    }
    std::vector<Perm> piece;
    for (const Perm &s : all_states(5)) {
        if (gradings(s, kTrefoil) == plus.grading) piece.push_back(s);
    }
    std::sort(piece.begin(), piece.end());
    auto row_of = [&](const std::vector<Perm> &chain) {
        std::vector<std::uint64_t> row((piece.size() + 63) / 64, 0);
        for (const Perm &y : chain) {
            const auto k = static_cast<std::size_t>(std::lower_bound(piece.begin(), piece.end(), y) - piece.begin());
            row[k / 64] ^= std::uint64_t{1} << (k % 64);
        }
        return row;
    };
    std::vector<std::vector<std::uint64_t>> rows;
    for (const Perm &s : above) rows.push_back(row_of(oracle::differential(s, d)));
    const int r = oracle::gf2_rank(rows);
    rows.push_back(row_of(plus.states));
    const bool expected = oracle::gf2_rank(rows) > r;
    CHECK(is_nonzero_class(plus, kTrefoil) == expected);

    CycleClass wrong = plus;
    wrong.grading.maslov += 1;
    CHECK(error_of([&] { (void)is_nonzero_class(wrong, kTrefoil); }) == ErrorCode::GradingMismatch);

    // A single state with nonzero boundary is not a cycle.
    Perm s = plus.states.front();
    for (const Perm &t : all_states(5)) {
        if (!differential_tilde(t, kTrefoil).empty()) {
            s = t;
            break;
        }
    }
    const CycleClass broken{{s}, gradings(s, kTrefoil)};
    CHECK(error_of([&] { (void)is_nonzero_class(broken, kTrefoil); }) == ErrorCode::InvalidArgument);
}
