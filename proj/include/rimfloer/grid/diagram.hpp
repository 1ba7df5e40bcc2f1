#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rimfloer::grid {

/// Permutation of {0, ..., n-1}; entry i is the row used in column i.
using Perm = std::vector<int>;

/// n x n toroidal grid: column i carries an X in row x[i] and an O in row o[i],
/// drawn at cell centers (i + 1/2, row + 1/2).
class GridDiagram {
  public:
    /// Throws InvalidGrid unless x and o are permutations of equal size >= 2
    /// with x[i] != o[i] in every column.
    GridDiagram(Perm x, Perm o);

    [[nodiscard]] int size() const noexcept { return static_cast<int>(x_.size()); }
    [[nodiscard]] const Perm &x() const noexcept { return x_; }
    [[nodiscard]] const Perm &o() const noexcept { return o_; }

    /// Number of components of the associated link.
    [[nodiscard]] int components() const;
    [[nodiscard]] bool is_knot() const { return components() == 1; }

    friend bool operator==(const GridDiagram &, const GridDiagram &) = default;

  private:
    Perm x_;
    Perm o_;
};

/// Two lines "X: x1 ... xn" and "O: o1 ... on", rows 1-indexed.
[[nodiscard]] GridDiagram parse_grid(std::string_view text);
[[nodiscard]] std::string format_grid(const GridDiagram &g);
/// Reads a grid file; throws FileNotFound or ParseError.
[[nodiscard]] GridDiagram load_grid(const std::string &path);

/// Throws InvalidGrid unless p is a permutation of {0, ..., n-1}.
void require_permutation(const Perm &p, const char *what);

// Grid moves. All preserve the link type of the diagram.

/// Column i moves to column (i + k) mod n.
[[nodiscard]] GridDiagram cyclic_shift_columns(const GridDiagram &g, int k);
/// Row r moves to row (r + k) mod n.
[[nodiscard]] GridDiagram cyclic_shift_rows(const GridDiagram &g, int k);

/// Columns c and c+1 may be exchanged when their marker intervals are nested
/// or disjoint (do not interleave).
[[nodiscard]] bool can_commute_columns(const GridDiagram &g, int c);
[[nodiscard]] GridDiagram commute_columns(const GridDiagram &g, int c);
[[nodiscard]] bool can_commute_rows(const GridDiagram &g, int r);
[[nodiscard]] GridDiagram commute_rows(const GridDiagram &g, int r);

enum class Marker { X, O };

/// Replaces the `marker` cell of `column` by a 2 x 2 block: a new column is
/// inserted to its right (or left) and a new row above (or below) the marker
/// row. The new column holds both new-block markers.
[[nodiscard]] GridDiagram stabilize(const GridDiagram &g, int column, Marker marker, bool new_column_right,
                                    bool new_row_above);

/// Inverse of stabilize: removes `column` when its markers occupy adjacent
/// rows a, b and the other marker of row a sits in a neighbouring column.
/// nullopt when the configuration is absent or n == 2.
[[nodiscard]] std::optional<GridDiagram> destabilize(const GridDiagram &g, int column);

/// Reflection in a vertical line; presents the mirror link.
[[nodiscard]] GridDiagram mirror(const GridDiagram &g);

}  // namespace rimfloer::grid
