#pragma once

#include "rimfloer/polyalg/ring.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rimfloer::polyalg {

/// Integer exponent vector of a Laurent monomial z1^a1 ... zn^an.
/// std::vector's ordering gives the lexicographic total order used for
/// canonical term iteration.
using Exponent = std::vector<std::int64_t>;

/// Sparse Laurent polynomial in n variables over GF(2), Z or Q.
///
/// Terms live in an ordered map from exponent vector to a nonzero coefficient,
/// so equal polynomials have identical term sequences and the zero polynomial
/// is the empty map. Coefficients are stored as exact rationals normalized for
/// the ring (see normalize_in).
class LaurentPoly {
  public:
    using TermMap = std::map<Exponent, mpq_class>;

    LaurentPoly(Ring ring, std::size_t dim);

    static LaurentPoly constant(Ring ring, std::size_t dim, const mpq_class &c);
    static LaurentPoly monomial(Ring ring, Exponent exponent, const mpq_class &c = 1);
    /// Univariate polynomial sum_i coeffs[i] t^(i + shift).
    static LaurentPoly from_coefficients(Ring ring, std::span<const mpq_class> coeffs, std::int64_t shift = 0);
    static LaurentPoly from_coefficients(Ring ring, std::initializer_list<long> coeffs, std::int64_t shift = 0);

    [[nodiscard]] Ring ring() const noexcept { return ring_; }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool is_univariate() const noexcept { return dim_ == 1; }
    [[nodiscard]] std::size_t term_count() const noexcept { return terms_.size(); }
    [[nodiscard]] const TermMap &terms() const noexcept { return terms_; }
    [[nodiscard]] mpq_class coeff(const Exponent &e) const;
    /// Coefficient of t^k for a univariate polynomial.
    [[nodiscard]] mpq_class coeff(std::int64_t k) const { return coeff(Exponent{k}); }

    /// Adds c * z^e, dropping the term if the sum vanishes.
    void add_term(const Exponent &e, const mpq_class &c);

    /// A monomial c * z^e with c a unit of the ring.
    [[nodiscard]] bool is_unit() const;
    [[nodiscard]] bool is_monomial() const noexcept { return terms_.size() == 1; }

    /// Univariate only: lowest / highest exponent. Throws ZeroPolynomial on 0.
    [[nodiscard]] std::int64_t min_degree() const;
    [[nodiscard]] std::int64_t max_degree() const;
    /// Width max_degree - min_degree of a univariate polynomial.
    [[nodiscard]] std::int64_t span_degree() const { return max_degree() - min_degree(); }

    /// Univariate dense coefficients from min_degree upward.
    [[nodiscard]] std::vector<mpq_class> dense() const;

    [[nodiscard]] LaurentPoly shifted(const Exponent &by) const;
    [[nodiscard]] LaurentPoly shifted(std::int64_t by) const { return shifted(Exponent{by}); }
    [[nodiscard]] LaurentPoly scaled(const mpq_class &c) const;
    [[nodiscard]] LaurentPoly to_ring(Ring target) const;
    /// Univariate evaluation at a rational point (t != 0 if negative exponents occur).
    [[nodiscard]] mpq_class evaluate(const mpq_class &t) const;
    /// Univariate t -> t^-1.
    [[nodiscard]] LaurentPoly inverted() const;
    [[nodiscard]] LaurentPoly pow(unsigned exponent) const;

    LaurentPoly &operator+=(const LaurentPoly &other);
    LaurentPoly &operator-=(const LaurentPoly &other);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly &a) { return a.scaled(-1); }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) {
        return a.ring_ == b.ring_ && a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

  private:
    Ring ring_;
    std::size_t dim_;
    TermMap terms_;
};

/// Exact univariate division over the polynomial's ring. Returns nullopt when
/// q does not divide p in the Laurent ring (for Int: quotient must be integral).
[[nodiscard]] std::optional<LaurentPoly> exact_divide(const LaurentPoly &p, const LaurentPoly &q);

/// p == u * q for a unit monomial u. Zero is equivalent only to zero.
[[nodiscard]] bool monomial_equivalent(const LaurentPoly &p, const LaurentPoly &q);

/// Throws DimensionMismatch / MixedRings when p and q cannot be combined.
void require_compatible(const LaurentPoly &p, const LaurentPoly &q);

}  // namespace rimfloer::polyalg
