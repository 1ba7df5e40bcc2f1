#pragma once

#include "rimfloer/polyalg/laurent.hpp"
#include "rimfloer/polyalg/omega.hpp"
#include "rimfloer/polyalg/unimodular.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace rimfloer::polyalg {

using RationalExponent = std::vector<mpq_class>;

/// Element of GF(2)[R^n] tensor M0 with M0 = GF(2)^basis_size: a finite set of
/// terms (exponent in Q^n, basis index). Adding a term twice cancels it.
class PerturbedElement {
  public:
    using Term = std::pair<RationalExponent, std::size_t>;

    PerturbedElement(std::size_t dim, std::size_t basis_size);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t basis_size() const noexcept { return basis_size_; }
    [[nodiscard]] const std::set<Term> &terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

    /// Toggles the term; throws DimensionMismatch / IndexOutOfRange.
    void add_term(const RationalExponent &exponent, std::size_t index);

    friend bool operator==(const PerturbedElement &, const PerturbedElement &) = default;

  private:
    std::size_t dim_;
    std::size_t basis_size_;
    std::set<Term> terms_;
};

/// q - floor(q), in [0, 1).
[[nodiscard]] mpq_class fractional_part(const mpq_class &q);

/// Witness a in [0,1)^n with every exponent in a + Z^n, or nullopt. The zero
/// element is integral with witness 0.
[[nodiscard]] std::optional<RationalExponent> is_projectively_integral(const PerturbedElement &x);

/// Coordinates of z^-a x in GF(2)[Z^n]^basis_size for a projectively integral
/// x with witness a.
[[nodiscard]] std::vector<LaurentPoly> integral_coordinates(const PerturbedElement &x);

/// Omega of a projectively integral element (InvalidArgument otherwise).
[[nodiscard]] OmegaValue omega_perturbed(const PerturbedElement &x);

/// Image under (phi tensor f_u): exponents move by u, basis vectors by the
/// GF(2) matrix phi (column j is the image of basis vector j). An empty phi
/// means the identity. Throws NotUnimodular if phi is singular.
[[nodiscard]] PerturbedElement apply_unimodular(const PerturbedElement &x, const UnimodularMap &u,
                                                const std::vector<std::vector<int>> &phi = {});

}  // namespace rimfloer::polyalg
