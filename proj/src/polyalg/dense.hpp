#pragma once

// Dense univariate engines behind factor(): polynomials over GF(p) for small
// primes p and over Z / Q with GMP coefficients. Coefficient vectors are stored
// low degree first and kept trimmed (no trailing zeros; the zero polynomial is
// the empty vector).

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace rimfloer::polyalg::dense {

// ---------------------------------------------------------------- GF(p) ----

using ModCoeffs = std::vector<std::uint64_t>;

class ModPoly {
  public:
    ModPoly(std::uint64_t p, ModCoeffs c = {});

    static ModPoly x_power(std::uint64_t p, std::size_t k);
    static ModPoly constant(std::uint64_t p, std::uint64_t c) { return ModPoly(p, ModCoeffs{c % p}); }

    [[nodiscard]] std::uint64_t prime() const noexcept { return p_; }
    [[nodiscard]] const ModCoeffs &coeffs() const noexcept { return c_; }
    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    [[nodiscard]] std::uint64_t lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    [[nodiscard]] std::uint64_t operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

    [[nodiscard]] ModPoly monic() const;
    [[nodiscard]] ModPoly derivative() const;
    [[nodiscard]] ModPoly scaled(std::uint64_t s) const;

    friend ModPoly operator+(const ModPoly &a, const ModPoly &b);
    friend ModPoly operator-(const ModPoly &a, const ModPoly &b);
    friend ModPoly operator*(const ModPoly &a, const ModPoly &b);
    friend bool operator==(const ModPoly &a, const ModPoly &b) { return a.p_ == b.p_ && a.c_ == b.c_; }

  private:
    void trim();

    std::uint64_t p_;
    ModCoeffs c_;
};

[[nodiscard]] std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);
/// Quotient and remainder; b must be nonzero.
[[nodiscard]] std::pair<ModPoly, ModPoly> divrem(const ModPoly &a, const ModPoly &b);
/// Monic gcd (zero if both are zero).
[[nodiscard]] ModPoly gcd(ModPoly a, ModPoly b);
/// Bezout coefficients s, t with s*a + t*b == gcd(a, b) (monic).
[[nodiscard]] std::pair<ModPoly, ModPoly> bezout(const ModPoly &a, const ModPoly &b);
[[nodiscard]] ModPoly powmod(const ModPoly &base, mpz_class exponent, const ModPoly &modulus);

/// Squarefree decomposition of a monic polynomial: pairs (g_i, i) with
/// f = prod g_i^i, each g_i squarefree, monic and of positive degree.
/// Handles f' == 0 by taking p-th roots (f = g(x^p) = g(x)^p over GF(p)).
[[nodiscard]] std::vector<std::pair<ModPoly, int>> squarefree_decomposition(const ModPoly &f);

/// Dimension of the Berlekamp subalgebra of a monic squarefree f, which equals
/// its number of distinct irreducible factors.
[[nodiscard]] std::size_t berlekamp_count(const ModPoly &f);
/// Berlekamp splitting of a monic squarefree f into monic irreducibles.
[[nodiscard]] std::vector<ModPoly> berlekamp_split(const ModPoly &f);

// ------------------------------------------------------------- Z and Q ----

using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

void trim(ZPoly &f);
void trim(QPoly &f);
[[nodiscard]] long degree(const ZPoly &f) noexcept;
[[nodiscard]] mpz_class content(const ZPoly &f);
[[nodiscard]] ZPoly primitive_part(const ZPoly &f);
[[nodiscard]] ZPoly mul(const ZPoly &a, const ZPoly &b);
/// Exact division over Z; returns false if b does not divide a over Z.
[[nodiscard]] bool divides_exactly(const ZPoly &a, const ZPoly &b, ZPoly &quotient);

/// Clears denominators: returns (primitive integer polynomial, scale) with
/// f == scale * result.
[[nodiscard]] std::pair<ZPoly, mpq_class> to_primitive_integer(const QPoly &f);
[[nodiscard]] QPoly to_rational(const ZPoly &f);

[[nodiscard]] QPoly mul(const QPoly &a, const QPoly &b);
[[nodiscard]] std::pair<QPoly, QPoly> divrem(const QPoly &a, const QPoly &b);
/// Monic gcd over Q.
[[nodiscard]] QPoly gcd(QPoly a, QPoly b);
[[nodiscard]] QPoly derivative(const QPoly &f);
[[nodiscard]] QPoly monic(const QPoly &f);

/// Yun squarefree decomposition over Q of a monic polynomial.
[[nodiscard]] std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly &f);

/// Irreducible factors over Z of a primitive squarefree integer polynomial with
/// positive leading coefficient (Zassenhaus: Berlekamp mod p, Hensel lifting,
/// subset recombination). Each factor is primitive with positive lead.
[[nodiscard]] std::vector<ZPoly> zassenhaus(const ZPoly &f);

}  // namespace rimfloer::polyalg::dense
