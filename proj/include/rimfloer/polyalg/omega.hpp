#pragma once

#include "rimfloer/polyalg/laurent.hpp"
#include "rimfloer/polyalg/unimodular.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rimfloer::polyalg {

/// Value of Omega: a nonnegative integer or -infinity. -infinity absorbs
/// addition.
class OmegaValue {
  public:
    constexpr OmegaValue() = default;
    constexpr explicit OmegaValue(std::int64_t v) : finite_(true), value_(v) {}

    static constexpr OmegaValue neg_infinity() { return OmegaValue(); }

    [[nodiscard]] constexpr bool is_neg_infinity() const noexcept { return !finite_; }
    /// Finite value; throws InvalidArgument on -infinity.
    [[nodiscard]] std::int64_t value() const;
    [[nodiscard]] std::string to_string() const;

    friend constexpr OmegaValue operator+(OmegaValue a, OmegaValue b) {
        if (!a.finite_ || !b.finite_) return neg_infinity();
        return OmegaValue(a.value_ + b.value_);
    }
    friend constexpr bool operator==(OmegaValue a, OmegaValue b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    /// -infinity is below every finite value.
    friend constexpr bool operator<(OmegaValue a, OmegaValue b) {
        if (!a.finite_) return b.finite_;
        return b.finite_ && a.value_ < b.value_;
    }

  private:
    bool finite_ = false;
    std::int64_t value_ = 0;
};

/// Coordinates rewritten so that all exponent differences lie along e1.
struct LineReduction {
    Exponent direction;            ///< primitive generator of the difference lattice
    UnimodularMap map;             ///< sends direction to e1
    std::vector<LaurentPoly> line; ///< univariate images, unit factors removed
};

/// Finds a primitive w such that every coordinate has the form
/// unit * q(z^w). Returns nullopt when the exponent differences are not
/// collinear. All-monomial input uses w = e1.
[[nodiscard]] std::optional<LineReduction> reduce_to_line(const std::vector<LaurentPoly> &coords);

/// Number of irreducible factors (with multiplicity) in F[Z^n], F = GF(2) or
/// Q. Omega(0) = -infinity, Omega(unit) = 0. Multivariate input must be of
/// the form unit * q(z^w); otherwise throws UnsupportedRing, as does Int.
[[nodiscard]] OmegaValue omega_ring(const LaurentPoly &p);

/// Omega of a vector in F[Z^n]^k: Omega of the gcd of its coordinates.
/// Throws MixedRings / DimensionMismatch for incompatible coordinates.
[[nodiscard]] OmegaValue omega_module(const std::vector<LaurentPoly> &coords);

/// p(z^v): univariate p mapped into F[Z^n] via t -> z^v.
[[nodiscard]] LaurentPoly substitute_monomial(const LaurentPoly &p, const Exponent &v);

/// Record of an Omega computation along a primitive vector.
struct SubstitutionCertificate {
    Exponent vector;
    UnimodularMap basis_change;  ///< U with U v == e1
    LaurentPoly substituted;     ///< p(z^v)
    LaurentPoly reduced;         ///< U applied to p(z^v); depends on z1 only
    OmegaValue value;
};

/// Omega(p(z^v)) for univariate p and primitive v, computed by moving v to
/// e1 with a unimodular change of basis. Throws NonPrimitiveVector.
[[nodiscard]] SubstitutionCertificate omega_substituted(const LaurentPoly &p, const Exponent &v);

}  // namespace rimfloer::polyalg
