#pragma once

#include "rimfloer/grid/diagram.hpp"
#include "rimfloer/polyalg/laurent.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rimfloer::grid {

/// Maslov grading and twice the Alexander grading of a state.
struct Bigrading {
    int maslov = 0;
    int twice_alexander = 0;

    [[nodiscard]] bool alexander_is_integral() const noexcept { return twice_alexander % 2 == 0; }
    /// Integral Alexander grading; throws InvalidGrid if it is a half-integer.
    [[nodiscard]] int alexander() const;

    friend bool operator==(const Bigrading &, const Bigrading &) = default;
    friend auto operator<=>(const Bigrading &, const Bigrading &) = default;
};

/// Ranks keyed by (Maslov, Alexander).
using BigradedRanks = std::map<std::pair<int, int>, std::int64_t>;

/// A GF(2) chain (sorted, duplicate-free states) with its common bigrading.
struct CycleClass {
    std::vector<Perm> states;
    Bigrading grading;
};

/// M_O(x) = I(x,x) - I(x,O) - I(O,x) + I(O,O) + 1 and
/// A = (M_O - M_X)/2 - (n-1)/2, with I(P,Q) counting pairs p strictly
/// southwest of q. Throws SizeMismatch.
[[nodiscard]] Bigrading gradings(const Perm &x, const GridDiagram &g);

/// States y reached from x by an empty rectangle (no markers, no points of x
/// in the interior), counted mod 2.
[[nodiscard]] std::vector<Perm> differential_tilde(const Perm &x, const GridDiagram &g);

/// Hard ceiling for any configured cap.
inline constexpr int kMaxGridSize = 11;

/// Default size cap, overridable through RIMFLOER_GRID_MAX_SIZE.
[[nodiscard]] int default_max_size();

struct HomologyOptions {
    int max_size = default_max_size();
    /// Worker threads for the OpenMP kernel; 0 keeps the runtime default.
    int threads = 0;
};

/// Bigraded GF(2) homology of the tilde complex (OpenMP kernel).
/// Throws NotAKnot or TooLarge.
[[nodiscard]] BigradedRanks homology(const GridDiagram &g, const HomologyOptions &options = {});

/// Straightforward single-threaded implementation of homology(), kept as the
/// reference for tests and benchmarks.
[[nodiscard]] BigradedRanks homology_reference(const GridDiagram &g, const HomologyOptions &options = {});

/// Divides the Poincare polynomial by (1 + q^-1 t^-1)^(n-1). Throws
/// InexactDivision when the ranks do not factor.
[[nodiscard]] BigradedRanks deconvolve(const BigradedRanks &ranks, int n);

/// sum (-1)^M rank t^A, over Z.
[[nodiscard]] polyalg::LaurentPoly euler_characteristic(const BigradedRanks &ranks);

[[nodiscard]] std::int64_t total_rank(const BigradedRanks &ranks);

/// Canonical transverse cycle: x+ takes row x_X(i)+1 in column i+1 (northeast
/// corners of the X cells); with minus set, x- takes row x_X(i) in column i
/// (southwest corners). Throws NotAKnot.
[[nodiscard]] CycleClass transverse_state(const GridDiagram &g, bool minus = false);

/// True iff the cycle is not a boundary, decided by elimination against the
/// image of the (M+1, A) piece. The zero chain is never nonzero. Throws
/// GradingMismatch if a state has a different bigrading, InvalidArgument if
/// the chain is not a cycle.
[[nodiscard]] bool is_nonzero_class(const CycleClass &c, const GridDiagram &g, const HomologyOptions &options = {});

}  // namespace rimfloer::grid
