#pragma once

#include "rimfloer/grid/diagram.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace rimfloer::braid {

/// Word in the Artin generators of B_n: g > 0 is sigma_g, g < 0 is sigma_{-g}^-1.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    friend bool operator==(const BraidWord &, const BraidWord &) = default;
};

/// Band generator sigma_{i,j}, 1 <= i < j <= n.
struct Band {
    int i = 1;
    int j = 2;

    friend bool operator==(const Band &, const Band &) = default;
};

struct BandWord {
    int strands = 2;
    std::vector<Band> bands;
};

/// w sigma_j w^-1.
struct QuasipositiveFactor {
    std::vector<int> conjugator;
    int generator = 1;
};

struct QuasipositiveWord {
    int strands = 2;
    std::vector<QuasipositiveFactor> factors;
};

/// Throws IndexOutOfRange for letters outside 1..n-1 and InvalidArgument for
/// n < 1.
void validate(const BraidWord &b);
void validate(const BandWord &w);
void validate(const QuasipositiveWord &w);

/// "n: g1 g2 ...". Throws ParseError (with offset) or IndexOutOfRange.
[[nodiscard]] BraidWord parse_braid(std::string_view text);
/// "n: (i,j)(i,j)..."
[[nodiscard]] BandWord parse_band_word(std::string_view text);
/// "n: [w|j][w|j]..." where w is a space separated conjugator word.
[[nodiscard]] QuasipositiveWord parse_quasipositive(std::string_view text);

[[nodiscard]] std::string format_braid(const BraidWord &b);
[[nodiscard]] std::string format_band_word(const BandWord &w);
[[nodiscard]] std::string format_quasipositive(const QuasipositiveWord &w);

[[nodiscard]] BraidWord inverse(const BraidWord &b);
/// Every letter negated; its closure is the mirror image.
[[nodiscard]] BraidWord mirror(const BraidWord &b);
/// Cancels adjacent g, -g pairs.
[[nodiscard]] BraidWord free_reduce(const BraidWord &b);
/// Positive Markov stabilization: b sigma_n on n + 1 strands.
[[nodiscard]] BraidWord positive_stabilization(const BraidWord &b);

/// (sigma_i ... sigma_{j-2}) sigma_{j-1} (sigma_i ... sigma_{j-2})^-1 per band.
[[nodiscard]] BraidWord expand_band(const BandWord &w);
[[nodiscard]] QuasipositiveWord band_to_quasipositive(const BandWord &w);
[[nodiscard]] BraidWord expand_quasipositive(const QuasipositiveWord &w);

/// Permutation of strand positions (0-based): position k at the bottom ends at
/// position perm[k].
[[nodiscard]] std::vector<int> braid_permutation(const BraidWord &b);
[[nodiscard]] int closure_components(const BraidWord &b);

[[nodiscard]] long writhe(const BraidWord &b);
/// writhe - n of a knotted closure; throws NotAKnot.
[[nodiscard]] long self_linking(const BraidWord &b);

/// n - k for k factors.
[[nodiscard]] int quasipositive_surface_chi(const QuasipositiveWord &w);
/// (1 - chi) / 2; throws NotAKnot and NegativeGenus.
[[nodiscard]] int quasipositive_surface_genus(const QuasipositiveWord &w);

/// Grid for the closure built strand by strand: one column per crossing plus
/// 2n closing columns, without any simplification. With zigzag_positive set,
/// each positive letter is drawn as a three-column zig-zag in which the lower
/// strand doubles back, so the x+ state records the self-linking number of
/// the mirror closure.
[[nodiscard]] grid::GridDiagram closure_grid(const BraidWord &b, bool zigzag_positive = false);

/// Destabilization along a seeded random walk of commutations and cyclic
/// shifts. With keep_transverse set, only moves that fix the bigrading of
/// the state x+ are taken.
[[nodiscard]] grid::GridDiagram reduce_grid(grid::GridDiagram g, bool keep_transverse);

/// reduce_grid(closure_grid(b), false): a small grid for the closure.
[[nodiscard]] grid::GridDiagram braid_to_grid(const BraidWord &b);

/// Grid carrying the transverse invariant of the closure of b: the x+ state
/// of this grid has bigrading (sl + 1, (sl + 1) / 2). It is built from the
/// mirror word, so its homology is that of the mirror knot.
[[nodiscard]] grid::GridDiagram transverse_grid(const BraidWord &b);

}  // namespace rimfloer::braid
