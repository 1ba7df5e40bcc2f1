#pragma once

#include "rimfloer/polyalg/laurent.hpp"

#include <vector>

namespace rimfloer::polyalg {

struct Factor {
    LaurentPoly poly;  ///< monic ordinary polynomial with nonzero constant term
    int multiplicity = 0;

    friend bool operator==(const Factor &, const Factor &) = default;
};

/// p == unit * prod(factor^multiplicity), unit == c * t^k.
struct Factorization {
    LaurentPoly unit;
    std::vector<Factor> factors;  ///< sorted by degree, then coefficients

    [[nodiscard]] int irreducible_count() const;
    [[nodiscard]] LaurentPoly expand() const;
};

/// Largest span (max_degree - min_degree) accepted by factor().
inline constexpr std::int64_t kFactorDegreeCap = 64;

/// Factors a nonzero univariate Laurent polynomial into irreducibles over its
/// field: squarefree decomposition plus Berlekamp over GF(2); Yun plus
/// Zassenhaus (Berlekamp mod p, Hensel lifting, subset recombination) over Q.
/// Int input is factored over Q and reported in the Rat ring.
/// Throws ZeroPolynomial, DimensionMismatch for multivariate input and
/// DegreeTooLarge beyond kFactorDegreeCap.
[[nodiscard]] Factorization factor(const LaurentPoly &p);

/// Monic gcd of univariate polynomials over GF(2) or Q, as an ordinary
/// polynomial (Laurent units stripped). Zero entries are ignored; all-zero
/// input yields the zero polynomial.
[[nodiscard]] LaurentPoly univariate_gcd(const std::vector<LaurentPoly> &polys);

}  // namespace rimfloer::polyalg
