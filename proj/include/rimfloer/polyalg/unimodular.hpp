#pragma once

#include "rimfloer/polyalg/laurent.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rimfloer::polyalg {

/// Integer matrix with determinant +-1, acting on exponent vectors by
/// e -> U e. Induces the ring automorphism z^e -> z^(U e) of F[Z^n].
class UnimodularMap {
  public:
    using Matrix = std::vector<std::vector<std::int64_t>>;

    /// Throws DimensionMismatch for non-square input and NotUnimodular when
    /// det != +-1.
    explicit UnimodularMap(Matrix rows);

    static UnimodularMap identity(std::size_t n);
    /// A unimodular U with U v == e1. Throws NonPrimitiveVector unless the
    /// entries of v have gcd 1.
    static UnimodularMap sending_to_e1(const Exponent &v);

    [[nodiscard]] std::size_t dim() const noexcept { return rows_.size(); }
    [[nodiscard]] const Matrix &rows() const noexcept { return rows_; }
    [[nodiscard]] std::int64_t determinant() const noexcept { return det_; }
    [[nodiscard]] Exponent apply(const Exponent &e) const;
    [[nodiscard]] UnimodularMap inverse() const;

    friend UnimodularMap operator*(const UnimodularMap &a, const UnimodularMap &b);
    friend bool operator==(const UnimodularMap &a, const UnimodularMap &b) { return a.rows_ == b.rows_; }

  private:
    Matrix rows_;
    std::int64_t det_ = 1;
};

/// Exact integer determinant (fraction-free elimination).
[[nodiscard]] mpz_class integer_determinant(const UnimodularMap::Matrix &m);

/// gcd of the absolute values of the entries; 0 for the zero vector.
[[nodiscard]] std::int64_t content(const Exponent &v);

/// Image of p under z^e -> z^(U e).
[[nodiscard]] LaurentPoly apply_unimodular(const LaurentPoly &p, const UnimodularMap &u);

}  // namespace rimfloer::polyalg
