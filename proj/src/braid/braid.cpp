#include "rimfloer/braid/braid.hpp"

#include "rimfloer/error.hpp"
#include "rimfloer/grid/hfk.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <limits>
#include <random>

namespace rimfloer::braid {

namespace {

class Scanner {
  public:
    explicit Scanner(std::string_view s) : s_(s) {}

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
    }
    [[nodiscard]] bool done() {
        skip();
        return pos_ >= s_.size();
    }
    [[nodiscard]] char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    int integer() {
        skip();
        const std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
        int v = 0;
        const auto [p, ec] = std::from_chars(s_.data() + start + (s_[start] == '+' ? 1 : 0), s_.data() + pos_, v);
        if (ec != std::errc{} || p != s_.data() + pos_) {
            pos_ = start;
            fail("expected an integer");
        }
        return v;
    }
    [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, pos_); }
    [[nodiscard]] std::size_t position() const noexcept { return pos_; }

  private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

int strand_header(Scanner &in) {
    const int n = in.integer();
    if (n < 1) in.fail("strand count must be positive");
    in.expect(':');
    return n;
}

void check_letter(int g, int n) {
    if (g == 0 || std::abs(g) > n - 1) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "generator " + std::to_string(g) + " is outside 1.." + std::to_string(n - 1) + " for " +
                        std::to_string(n) + " strands");
    }
}

void check_strands(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "strand count must be positive");
}

std::string join_letters(const std::vector<int> &letters) {
    std::string out;
    for (int g : letters) {
        if (!out.empty()) out += ' ';
        out += std::to_string(g);
    }
    return out;
}

}  // namespace

void validate(const BraidWord &b) {
    check_strands(b.strands);
    for (int g : b.letters) check_letter(g, b.strands);
}

void validate(const BandWord &w) {
    check_strands(w.strands);
    for (const auto &[i, j] : w.bands) {
        if (i < 1 || j > w.strands || i >= j) {
            throw Error(ErrorCode::IndexOutOfRange, "band (" + std::to_string(i) + "," + std::to_string(j) +
                                                        ") is invalid on " + std::to_string(w.strands) + " strands");
        }
    }
}

void validate(const QuasipositiveWord &w) {
    check_strands(w.strands);
    for (const auto &f : w.factors) {
        if (f.generator < 1) throw Error(ErrorCode::IndexOutOfRange, "quasipositive generator must be positive");
        check_letter(f.generator, w.strands);
        for (int g : f.conjugator) check_letter(g, w.strands);
    }
}

BraidWord parse_braid(std::string_view text) {
    Scanner in(text);
    BraidWord b{strand_header(in), {}};
    while (!in.done()) {
        const std::size_t at = in.position();
        const int g = in.integer();
        if (g == 0) throw ParseError("generator index 0 is not allowed", at);
        b.letters.push_back(g);
    }
    validate(b);
    return b;
}

BandWord parse_band_word(std::string_view text) {
    Scanner in(text);
    BandWord w{strand_header(in), {}};
    while (!in.done()) {
        in.expect('(');
        const int i = in.integer();
        in.expect(',');
        const int j = in.integer();
        in.expect(')');
        w.bands.push_back({i, j});
    }
    validate(w);
    return w;
}

QuasipositiveWord parse_quasipositive(std::string_view text) {
    Scanner in(text);
    QuasipositiveWord w{strand_header(in), {}};
    while (!in.done()) {
        in.expect('[');
        QuasipositiveFactor f;
        while (in.peek() != '|') {
            if (in.done()) in.fail("unterminated factor");
            f.conjugator.push_back(in.integer());
            if (f.conjugator.back() == 0) in.fail("generator index 0 is not allowed");
        }
        in.expect('|');
        f.generator = in.integer();
        in.expect(']');
        w.factors.push_back(std::move(f));
    }
    validate(w);
    return w;
}

std::string format_braid(const BraidWord &b) {
    const std::string letters = join_letters(b.letters);
    return std::to_string(b.strands) + ":" + (letters.empty() ? "" : " " + letters);
}

std::string format_band_word(const BandWord &w) {
    std::string out = std::to_string(w.strands) + ": ";
    for (const auto &[i, j] : w.bands) out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    return out;
}

std::string format_quasipositive(const QuasipositiveWord &w) {
    std::string out = std::to_string(w.strands) + ": ";
    for (const auto &f : w.factors) out += "[" + join_letters(f.conjugator) + "|" + std::to_string(f.generator) + "]";
    return out;
}

BraidWord inverse(const BraidWord &b) {
    BraidWord r{b.strands, {}};
    for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

BraidWord mirror(const BraidWord &b) {
    BraidWord r = b;
    for (int &g : r.letters) g = -g;
    return r;
}

BraidWord free_reduce(const BraidWord &b) {
    BraidWord r{b.strands, {}};
    for (int g : b.letters) {
        if (!r.letters.empty() && r.letters.back() == -g) {
            r.letters.pop_back();
        } else {
            r.letters.push_back(g);
        }
    }
    return r;
}

BraidWord positive_stabilization(const BraidWord &b) {
    validate(b);
    BraidWord r{b.strands + 1, b.letters};
    r.letters.push_back(b.strands);
    return r;
}

QuasipositiveWord band_to_quasipositive(const BandWord &w) {
    validate(w);
    QuasipositiveWord q{w.strands, {}};
    for (const auto &[i, j] : w.bands) {
        QuasipositiveFactor f;
        for (int k = i; k <= j - 2; ++k) f.conjugator.push_back(k);
        f.generator = j - 1;
        q.factors.push_back(std::move(f));
    }
    return q;
}

BraidWord expand_quasipositive(const QuasipositiveWord &w) {
    validate(w);
    BraidWord b{w.strands, {}};
    for (const auto &f : w.factors) {
        b.letters.insert(b.letters.end(), f.conjugator.begin(), f.conjugator.end());
        b.letters.push_back(f.generator);
        for (auto it = f.conjugator.rbegin(); it != f.conjugator.rend(); ++it) b.letters.push_back(-*it);
    }
    return b;
}

BraidWord expand_band(const BandWord &w) { return expand_quasipositive(band_to_quasipositive(w)); }

std::vector<int> braid_permutation(const BraidWord &b) {
    validate(b);
    std::vector<int> at(static_cast<std::size_t>(b.strands));
    for (int k = 0; k < b.strands; ++k) at[static_cast<std::size_t>(k)] = k;
    for (int g : b.letters) {
        const auto i = static_cast<std::size_t>(std::abs(g));
        std::swap(at[i - 1], at[i]);
    }
    std::vector<int> perm(at.size());
    for (std::size_t p = 0; p < at.size(); ++p) perm[static_cast<std::size_t>(at[p])] = static_cast<int>(p);
    return perm;
}

int closure_components(const BraidWord &b) {
    const std::vector<int> perm = braid_permutation(b);
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (std::size_t k = 0; k < perm.size(); ++k) {
        if (seen[k]) continue;
        ++cycles;
        for (std::size_t j = k; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
    }
    return cycles;
}

long writhe(const BraidWord &b) {
    long w = 0;
    for (int g : b.letters) w += g > 0 ? 1 : -1;
    return w;
}

long self_linking(const BraidWord &b) {
    const int k = closure_components(b);
    if (k != 1) throw Error(ErrorCode::NotAKnot, "braid closure has " + std::to_string(k) + " components");
    return writhe(b) - b.strands;
}

int quasipositive_surface_chi(const QuasipositiveWord &w) {
    validate(w);
    return w.strands - static_cast<int>(w.factors.size());
}

int quasipositive_surface_genus(const QuasipositiveWord &w) {
    const int k = closure_components(expand_quasipositive(w));
    if (k != 1) throw Error(ErrorCode::NotAKnot, "closure has " + std::to_string(k) + " components");
    const int chi = quasipositive_surface_chi(w);
    if (chi > 1) throw Error(ErrorCode::NegativeGenus, "surface Euler characteristic " + std::to_string(chi) + " > 1");
    return (1 - chi) / 2;
}

grid::GridDiagram closure_grid(const BraidWord &b, bool zigzag_positive) {
    validate(b);
    const int n = b.strands;
    // Rows are created as ids and kept in bottom-to-top order. Position k of
    // the braid currently sits on row cur[k]. Every column is a vertical
    // segment from its X row to its O row.
    int next_id = 0;
    std::vector<int> order, cur;
    for (int k = 0; k < n; ++k) {
        order.push_back(next_id);
        cur.push_back(next_id++);
    }
    const std::vector<int> initial = cur;
    auto index_of = [&order](int id) { return std::find(order.begin(), order.end(), id) - order.begin(); };
    auto insert_below = [&](int id) {
        order.insert(order.begin() + index_of(id), next_id);
        return next_id++;
    };
    auto insert_above = [&](int id) {
        order.insert(order.begin() + index_of(id) + 1, next_id);
        return next_id++;
    };
    std::vector<std::pair<int, int>> jumps;
    for (int g : b.letters) {
        const auto i = static_cast<std::size_t>(std::abs(g) - 1);
        if (g > 0 && zigzag_positive) {
            // The lower strand climbs to row a, runs back along it and rises
            // to the top; the upper strand steps up across the backward stretch.
            const int a = insert_above(cur[i + 1]);
            const int top = insert_above(a);
            const int mid = insert_above(a);
            jumps.emplace_back(a, top);
            jumps.emplace_back(cur[i + 1], mid);
            jumps.emplace_back(cur[i], a);
            cur[i] = mid;
            cur[i + 1] = top;
        } else if (g > 0) {
            const int fresh = insert_below(cur[i]);
            jumps.emplace_back(cur[i + 1], fresh);
            cur[i + 1] = cur[i];
            cur[i] = fresh;
        } else {
            const int fresh = insert_above(cur[i + 1]);
            jumps.emplace_back(cur[i], fresh);
            cur[i] = cur[i + 1];
            cur[i + 1] = fresh;
        }
    }
    std::vector<int> ret(static_cast<std::size_t>(n));
    for (auto &r : ret) r = next_id++;
    for (int k = n - 1; k >= 0; --k) order.push_back(ret[static_cast<std::size_t>(k)]);

    std::vector<int> row_of(static_cast<std::size_t>(next_id));
    for (std::size_t r = 0; r < order.size(); ++r) row_of[static_cast<std::size_t>(order[r])] = static_cast<int>(r);
    auto row = [&row_of](int id) { return row_of[static_cast<std::size_t>(id)]; };

    grid::Perm x, o;
    for (int k = 0; k < n; ++k) {
        x.push_back(row(ret[static_cast<std::size_t>(k)]));
        o.push_back(row(initial[static_cast<std::size_t>(k)]));
    }
    for (const auto &[from, to] : jumps) {
        x.push_back(row(from));
        o.push_back(row(to));
    }
    for (int k = n - 1; k >= 0; --k) {
        x.push_back(row(cur[static_cast<std::size_t>(k)]));
        o.push_back(row(ret[static_cast<std::size_t>(k)]));
    }
    return grid::GridDiagram(std::move(x), std::move(o));
}

namespace {

grid::Bigrading plus_grading(const grid::GridDiagram &g) {
    const int n = g.size();
    grid::Perm x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        x[static_cast<std::size_t>((i + 1) % n)] = (g.x()[static_cast<std::size_t>(i)] + 1) % n;
    }
    return grid::gradings(x, g);
}

}  // namespace

namespace {

/// One destabilization anywhere on the torus, if any is admissible.
std::optional<grid::GridDiagram> destabilize_once(const grid::GridDiagram &g, bool keep_transverse,
                                                  const grid::Bigrading &target) {
    const int n = g.size();
    if (n <= 2) return std::nullopt;
    for (int c = 0; c < n; ++c) {
        // Rotate column c to index 1 and its lower marker row to index 1 so
        // that cyclic neighbours become ordinary neighbours.
        const auto cc = static_cast<std::size_t>(c);
        const int rx = g.x()[cc], ro = g.o()[cc];
        const int diff = (rx - ro + n) % n;
        if (diff != 1 && diff != n - 1) continue;
        const int low = diff == 1 ? ro : rx;
        const grid::GridDiagram h = grid::cyclic_shift_rows(grid::cyclic_shift_columns(g, 1 - c), 1 - low);
        auto reduced = grid::destabilize(h, 1);
        if (!reduced) continue;
        if (!keep_transverse || plus_grading(*reduced) == target) return reduced;
    }
    return std::nullopt;
}

}  // namespace

grid::GridDiagram reduce_grid(grid::GridDiagram g, bool keep_transverse) {
    const grid::Bigrading target = plus_grading(g);
    // Commutations and cyclic shifts are Legendrian isotopies; a seeded random
    // walk through them exposes further destabilizations.
    constexpr int kPatience = 40000;
    std::mt19937 rng(20240917);
    grid::GridDiagram walk = g;
    for (int idle = 0; idle < kPatience && g.size() > 2;) {
        if (auto smaller = destabilize_once(walk, keep_transverse, target)) {
            walk = *smaller;
            g = walk;
            idle = 0;
            continue;
        }
        ++idle;
        const int n = walk.size();
        const int k = static_cast<int>(rng() % static_cast<unsigned>(n - 1));
        switch (rng() % 4) {
        case 0:
            if (grid::can_commute_columns(walk, k)) walk = grid::commute_columns(walk, k);
            break;
        case 1:
            if (grid::can_commute_rows(walk, k)) walk = grid::commute_rows(walk, k);
            break;
        case 2:
            walk = grid::cyclic_shift_columns(walk, 1);
            break;
        default:
            walk = grid::cyclic_shift_rows(walk, 1);
            break;
        }
    }
    return g;
}

grid::GridDiagram braid_to_grid(const BraidWord &b) { return reduce_grid(closure_grid(b, false), false); }

grid::GridDiagram transverse_grid(const BraidWord &b) {
    return reduce_grid(closure_grid(mirror(b), true), true);
}

}  // namespace rimfloer::braid
