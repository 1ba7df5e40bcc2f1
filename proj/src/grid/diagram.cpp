#include "rimfloer/grid/diagram.hpp"

#include "rimfloer/error.hpp"

#include <fstream>
#include <sstream>

namespace rimfloer::grid {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

Perm inverse(const Perm &p) {
    Perm inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return inv;
}

/// Rows strictly between the two markers of a column, as an interval (lo, hi).
std::pair<int, int> span(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

bool interleave(std::pair<int, int> s, std::pair<int, int> t) {
    auto inside = [](int v, std::pair<int, int> iv) { return iv.first < v && v < iv.second; };
    return inside(t.first, s) != inside(t.second, s);
}

Perm parse_row(std::string_view line, char label, std::size_t offset) {
    std::size_t i = 0;
    while (i < line.size() && line[i] == ' ') ++i;
    if (i >= line.size() || line[i] != label) {
        throw ParseError(std::string("expected line starting with '") + label + ":'", offset + i);
    }
    ++i;
    if (i >= line.size() || line[i] != ':') throw ParseError("expected ':'", offset + i);
    ++i;
    Perm out;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        int v = 0;
        while (i < line.size() && line[i] >= '0' && line[i] <= '9') {
            v = v * 10 + (line[i] - '0');
            if (v > 1000000) throw ParseError("row index too large", offset + start);
            ++i;
        }
        if (start == i) throw ParseError(std::string("unexpected character '") + line[i] + "'", offset + i);
        if (v < 1) throw ParseError("rows are 1-indexed", offset + start);
        out.push_back(v - 1);
    }
    return out;
}

}  // namespace

void require_permutation(const Perm &p, const char *what) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[static_cast<std::size_t>(v)]) {
            throw Error(ErrorCode::InvalidGrid, std::string(what) + " is not a permutation");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

GridDiagram::GridDiagram(Perm x, Perm o) : x_(std::move(x)), o_(std::move(o)) {
    if (x_.size() != o_.size()) throw Error(ErrorCode::InvalidGrid, "X and O rows differ in length");
    if (x_.size() < 2) throw Error(ErrorCode::InvalidGrid, "grid size must be at least 2");
    require_permutation(x_, "X");
    require_permutation(o_, "O");
    for (std::size_t i = 0; i < x_.size(); ++i) {
        if (x_[i] == o_[i]) {
            throw Error(ErrorCode::InvalidGrid, "column " + std::to_string(i + 1) + " has X and O in the same cell");
        }
    }
}

int GridDiagram::components() const {
    // Column c -> the column whose X shares a row with c's O.
    const Perm x_col = inverse(x_);
    std::vector<bool> seen(x_.size(), false);
    int count = 0;
    for (std::size_t c = 0; c < x_.size(); ++c) {
        if (seen[c]) continue;
        ++count;
        for (std::size_t d = c; !seen[d]; d = static_cast<std::size_t>(x_col[static_cast<std::size_t>(o_[d])])) {
            seen[d] = true;
        }
    }
    return count;
}

GridDiagram parse_grid(std::string_view text) {
    std::vector<std::pair<std::string_view, std::size_t>> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = text.substr(start, end - start);
        if (line.find_first_not_of(" \t\r") != std::string_view::npos) lines.emplace_back(line, start);
        start = end + 1;
    }
    if (lines.size() != 2) throw ParseError("grid file must have exactly two lines, X and O", 0);
    Perm x = parse_row(lines[0].first, 'X', lines[0].second);
    Perm o = parse_row(lines[1].first, 'O', lines[1].second);
    return GridDiagram(std::move(x), std::move(o));
}

std::string format_grid(const GridDiagram &g) {
    std::string out = "X:";
    for (int v : g.x()) out += " " + std::to_string(v + 1);
    out += "\nO:";
    for (int v : g.o()) out += " " + std::to_string(v + 1);
    out += "\n";
    return out;
}

GridDiagram load_grid(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::FileNotFound, "file not found: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_grid(buf.str());
}

GridDiagram cyclic_shift_columns(const GridDiagram &g, int k) {
    const int n = g.size();
    Perm x(g.x().size()), o(g.o().size());
    for (int i = 0; i < n; ++i) {
        x[static_cast<std::size_t>(mod(i + k, n))] = g.x()[static_cast<std::size_t>(i)];
        o[static_cast<std::size_t>(mod(i + k, n))] = g.o()[static_cast<std::size_t>(i)];
    }
    return GridDiagram(std::move(x), std::move(o));
}

GridDiagram cyclic_shift_rows(const GridDiagram &g, int k) {
    const int n = g.size();
    Perm x = g.x(), o = g.o();
    for (auto &v : x) v = mod(v + k, n);
    for (auto &v : o) v = mod(v + k, n);
    return GridDiagram(std::move(x), std::move(o));
}

bool can_commute_columns(const GridDiagram &g, int c) {
    if (c < 0 || c + 1 >= g.size()) return false;
    const auto i = static_cast<std::size_t>(c);
    return !interleave(span(g.x()[i], g.o()[i]), span(g.x()[i + 1], g.o()[i + 1]));
}

GridDiagram commute_columns(const GridDiagram &g, int c) {
    if (!can_commute_columns(g, c)) throw Error(ErrorCode::InvalidArgument, "columns interleave");
    Perm x = g.x(), o = g.o();
    std::swap(x[static_cast<std::size_t>(c)], x[static_cast<std::size_t>(c) + 1]);
    std::swap(o[static_cast<std::size_t>(c)], o[static_cast<std::size_t>(c) + 1]);
    return GridDiagram(std::move(x), std::move(o));
}

bool can_commute_rows(const GridDiagram &g, int r) {
    if (r < 0 || r + 1 >= g.size()) return false;
    const Perm xi = inverse(g.x()), oi = inverse(g.o());
    const auto i = static_cast<std::size_t>(r);
    return !interleave(span(xi[i], oi[i]), span(xi[i + 1], oi[i + 1]));
}

GridDiagram commute_rows(const GridDiagram &g, int r) {
    if (!can_commute_rows(g, r)) throw Error(ErrorCode::InvalidArgument, "rows interleave");
    Perm x = g.x(), o = g.o();
    auto swap_rows = [r](int v) { return v == r ? r + 1 : (v == r + 1 ? r : v); };
    for (auto &v : x) v = swap_rows(v);
    for (auto &v : o) v = swap_rows(v);
    return GridDiagram(std::move(x), std::move(o));
}

GridDiagram stabilize(const GridDiagram &g, int column, Marker marker, bool new_column_right, bool new_row_above) {
    const int n = g.size();
    if (column < 0 || column >= n) throw Error(ErrorCode::IndexOutOfRange, "column out of range");
    const auto cp = static_cast<std::size_t>(column);
    const int b = marker == Marker::O ? g.o()[cp] : g.x()[cp];
    // Old row v maps to v or v + 1 around the inserted row.
    const int new_row = new_row_above ? b + 1 : b;
    const int new_col = new_column_right ? column + 1 : column;
    auto lift_row = [&](int v) { return v >= new_row ? v + 1 : v; };
    Perm x, o;
    for (int c = 0; c < n; ++c) {
        if (c == new_col) {
            x.push_back(0);
            o.push_back(0);
        }
        x.push_back(lift_row(g.x()[static_cast<std::size_t>(c)]));
        o.push_back(lift_row(g.o()[static_cast<std::size_t>(c)]));
    }
    if (new_col == n) {
        x.push_back(0);
        o.push_back(0);
    }
    const int old_col = new_column_right ? column : column + 1;
    const int b_lifted = lift_row(b);
    Perm &same = marker == Marker::O ? o : x;
    Perm &other = marker == Marker::O ? x : o;
    same[static_cast<std::size_t>(old_col)] = new_row;
    same[static_cast<std::size_t>(new_col)] = b_lifted;
    other[static_cast<std::size_t>(new_col)] = new_row;
    return GridDiagram(std::move(x), std::move(o));
}

std::optional<GridDiagram> destabilize(const GridDiagram &g, int column) {
    const int n = g.size();
    if (n <= 2 || column < 0 || column >= n) return std::nullopt;
    const auto c = static_cast<std::size_t>(column);
    const int rx = g.x()[c], ro = g.o()[c];
    if (rx - ro != 1 && ro - rx != 1) return std::nullopt;
    const Perm xi = inverse(g.x()), oi = inverse(g.o());
    // Try row a = rx (its other marker is an O) and row a = ro (other is an X).
    for (const Marker kind : {Marker::O, Marker::X}) {
        const int a = kind == Marker::O ? rx : ro;
        const int b = kind == Marker::O ? ro : rx;
        const int partner = kind == Marker::O ? oi[static_cast<std::size_t>(a)] : xi[static_cast<std::size_t>(a)];
        if (partner != column - 1 && partner != column + 1) continue;
        const auto pp = static_cast<std::size_t>(partner);
        // A partner whose other marker also sits in row b closes a split unknot.
        if ((kind == Marker::O ? g.x()[pp] : g.o()[pp]) == b) continue;
        Perm x, o;
        auto drop_row = [a](int v) { return v > a ? v - 1 : v; };
        for (int k = 0; k < n; ++k) {
            if (k == column) continue;
            const auto kk = static_cast<std::size_t>(k);
            int vx = g.x()[kk], vo = g.o()[kk];
            if (k == partner) (kind == Marker::O ? vo : vx) = b;
            x.push_back(drop_row(vx));
            o.push_back(drop_row(vo));
        }
        return GridDiagram(std::move(x), std::move(o));
    }
    return std::nullopt;
}

GridDiagram mirror(const GridDiagram &g) {
    Perm x(g.x().rbegin(), g.x().rend());
    Perm o(g.o().rbegin(), g.o().rend());
    return GridDiagram(std::move(x), std::move(o));
}

}  // namespace rimfloer::grid
