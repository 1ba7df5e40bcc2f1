#pragma once

#include "rimfloer/braid/braid.hpp"
#include "rimfloer/grid/hfk.hpp"
#include "rimfloer/polyalg/laurent.hpp"
#include "rimfloer/polyalg/omega.hpp"

#include <json.hpp>

#include <array>
#include <string>
#include <vector>

namespace rimfloer::rimcalc {

/// Omega of the surface bounded by a quasipositive closure, with the data it
/// rests on.
struct QuasipositiveOmega {
    polyalg::OmegaValue value;
    int genus = 0;
    braid::QuasipositiveWord word;
    std::string provenance;
};

/// Omega = 0 for the quasipositive surface of w. Throws NotAKnot or GenusZero.
[[nodiscard]] QuasipositiveOmega omega_quasipositive(const braid::QuasipositiveWord &w);

/// Delta^n, symmetric with value 1 at t = 1. Throws NotNormalized or
/// InvalidArgument for n < 1.
[[nodiscard]] polyalg::LaurentPoly lefschetz_of_twist(const polyalg::LaurentPoly &delta, int n);

struct FamilySpec {
    int genus = 1;
    polyalg::Exponent curve;
    polyalg::LaurentPoly pattern{polyalg::Ring::Int, 1};
    /// Text of the pattern's source, echoed in certificates.
    std::string pattern_source;
    polyalg::OmegaValue base{0};
    std::string base_provenance = "default";
    std::vector<int> indices;
    polyalg::Ring ring = polyalg::Ring::GF2;
};

struct FamilyRow {
    int n = 0;
    polyalg::LaurentPoly lefschetz{polyalg::Ring::Int, 1};
    polyalg::OmegaValue omega_f2;
    polyalg::OmegaValue omega_q;
};

struct Certificate {
    FamilySpec spec;
    std::vector<FamilyRow> rows;
    /// U with U * curve = e1, used for every row.
    polyalg::UnimodularMap basis_change;
    std::vector<std::string> hypothesis_log;
    bool verdict = false;
};

/// Omega_n = Omega(S) + Omega(Delta^n(z^v)) for every index, computed by
/// substitution and reduction along v. Throws NonPrimitiveCurve,
/// NegativeBase, DimensionMismatch, InvalidArgument or NotNormalized. A
/// pattern without irreducible factors yields verdict false.
[[nodiscard]] Certificate certify_family(const FamilySpec &spec);

[[nodiscard]] nlohmann::json to_json(const Certificate &c);

/// Non-vanishing of the transverse class of the closure of w, on a grid of
/// size at most max_size. Throws NotAKnot or TooLarge.
[[nodiscard]] bool verify_nonvanishing(const braid::QuasipositiveWord &w, int max_size = grid::default_max_size());

/// Outcome of the non-vanishing hypothesis check.
struct NonvanishingCheck {
    bool nonzero = false;
    bool machine_checked = false;
    int grid_size = 0;
    std::string note;
};

/// verify_nonvanishing with the TooLarge case recorded as asserted rather
/// than checked.
[[nodiscard]] NonvanishingCheck check_nonvanishing(const braid::QuasipositiveWord &w,
                                                   int max_size = grid::default_max_size());

/// One summand F^rank in bigrading (gr_w, gr_z).
struct BigradedRank {
    int gr_w = 0;
    int gr_z = 0;
    int rank = 0;
};

/// Recorded constant, not computed: link Floer homology (hat version) of the
/// two-fiber link L_2 in S^1 x S^2. Total rank 4. Nothing in this library
/// derives it; it is the input the rim surgery gluing argument rests on.
inline constexpr std::array<BigradedRank, 3> kTwoFiberLinkHfl{{{1, -1, 1}, {0, 0, 2}, {-1, 1, 1}}};

}  // namespace rimfloer::rimcalc
