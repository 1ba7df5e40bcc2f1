#pragma once

#include "rimfloer/braid/braid.hpp"
#include "rimfloer/polyalg/laurent.hpp"
#include "rimfloer/polyalg/omega.hpp"

#include <vector>

namespace rimfloer::alexander {

/// Square matrix of univariate integer Laurent polynomials.
using PolyMatrix = std::vector<std::vector<polyalg::LaurentPoly>>;

/// Integer Seifert matrix of size 2g.
using SeifertMatrix = std::vector<std::vector<long>>;

/// Reduced Burau image of b, size (n-1) x (n-1), over Z[t, t^-1].
[[nodiscard]] PolyMatrix reduced_burau(const braid::BraidWord &b);

/// Fraction-free determinant over Z[t, t^-1].
[[nodiscard]] polyalg::LaurentPoly determinant(PolyMatrix m);

/// Shifts p so that p(t) = p(1/t) and flips the sign so that p(1) = 1.
/// Throws NotNormalized when no shift and sign achieve this.
[[nodiscard]] polyalg::LaurentPoly symmetrize(const polyalg::LaurentPoly &p);

/// True iff p is univariate, symmetric under t -> 1/t and p(1) = 1.
[[nodiscard]] bool is_normalized(const polyalg::LaurentPoly &p);

/// det(rho(b) - I) (1 - t) / (1 - t^n), symmetrized. Throws NotAKnot.
[[nodiscard]] polyalg::LaurentPoly alexander_from_braid(const braid::BraidWord &b);

/// det(V - t V^T), symmetrized. Throws InvalidSeifertMatrix unless V is square
/// of even size with det(V - V^T) = 1.
[[nodiscard]] polyalg::LaurentPoly alexander_from_seifert(const SeifertMatrix &v);

/// Product of normalized polynomials. Throws NotNormalized.
[[nodiscard]] polyalg::LaurentPoly connected_sum_alexander(const std::vector<polyalg::LaurentPoly> &ps);

/// Irreducible factor count after reducing coefficients into `ring` (GF2 or Rat).
[[nodiscard]] polyalg::OmegaValue irr_count(const polyalg::LaurentPoly &delta, polyalg::Ring ring);

}  // namespace rimfloer::alexander
