#include "rimfloer/polyalg/factor.hpp"

#include "dense.hpp"
#include "rimfloer/error.hpp"

#include <algorithm>

namespace rimfloer::polyalg {

namespace {

LaurentPoly from_mod2(const dense::ModPoly &f) {
    LaurentPoly r(Ring::GF2, 1);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) r.add_term(Exponent{static_cast<std::int64_t>(i)}, f[i]);
    return r;
}

dense::ModPoly to_mod2(const std::vector<mpq_class> &c) {
    dense::ModCoeffs m;
    m.reserve(c.size());
    for (const auto &v : c) m.push_back(v == 0 ? 0 : 1);
    return dense::ModPoly(2, std::move(m));
}

bool factor_less(const Factor &a, const Factor &b) {
    const auto da = a.poly.max_degree(), db = b.poly.max_degree();
    if (da != db) return da < db;
    const auto ca = a.poly.dense(), cb = b.poly.dense();
    return std::lexicographical_compare(ca.rbegin(), ca.rend(), cb.rbegin(), cb.rend());
}

void check_factorable(const LaurentPoly &p) {
    if (!p.is_univariate()) throw Error(ErrorCode::DimensionMismatch, "factor requires a univariate polynomial");
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
    if (p.span_degree() > kFactorDegreeCap) {
        throw Error(ErrorCode::DegreeTooLarge, "degree span " + std::to_string(p.span_degree()) +
                                                   " exceeds the factorization cap of " +
                                                   std::to_string(kFactorDegreeCap));
    }
}

}  // namespace

int Factorization::irreducible_count() const {
    int total = 0;
    for (const auto &f : factors) total += f.multiplicity;
    return total;
}

LaurentPoly Factorization::expand() const {
    LaurentPoly r = unit;
    for (const auto &f : factors) r = r * f.poly.pow(static_cast<unsigned>(f.multiplicity));
    return r;
}

Factorization factor(const LaurentPoly &p) {
    check_factorable(p);
    const std::int64_t shift = p.min_degree();
    const std::vector<mpq_class> coeffs = p.dense();

    if (p.ring() == Ring::GF2) {
        Factorization out{LaurentPoly::monomial(Ring::GF2, Exponent{shift}), {}};
        for (const auto &[part, mult] : dense::squarefree_decomposition(to_mod2(coeffs))) {
            for (const auto &irr : dense::berlekamp_split(part)) out.factors.push_back({from_mod2(irr), mult});
        }
        std::sort(out.factors.begin(), out.factors.end(), factor_less);
        return out;
    }

    const mpq_class lead = coeffs.back();
    Factorization out{LaurentPoly::monomial(Ring::Rat, Exponent{shift}, lead), {}};
    for (const auto &[part, mult] : dense::squarefree_decomposition(dense::monic(coeffs))) {
        const auto [integral, scale] = dense::to_primitive_integer(part);
        (void)scale;
        for (const auto &irr : dense::zassenhaus(integral)) {
            const dense::QPoly m = dense::monic(dense::to_rational(irr));
            out.factors.push_back({LaurentPoly::from_coefficients(Ring::Rat, m), mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), factor_less);
    return out;
}

LaurentPoly univariate_gcd(const std::vector<LaurentPoly> &polys) {
    if (polys.empty()) throw Error(ErrorCode::InvalidArgument, "gcd of an empty sequence");
    const Ring ring = polys.front().ring();
    for (const auto &q : polys) {
        require_compatible(polys.front(), q);
        if (!q.is_univariate()) throw Error(ErrorCode::DimensionMismatch, "gcd requires univariate polynomials");
    }
    if (ring == Ring::GF2) {
        dense::ModPoly g(2);
        for (const auto &q : polys) {
            if (!q.is_zero()) g = dense::gcd(g, to_mod2(q.dense()));
        }
        return from_mod2(g);
    }
    dense::QPoly g;
    for (const auto &q : polys) {
        if (!q.is_zero()) g = dense::gcd(g, q.dense());
    }
    return LaurentPoly::from_coefficients(Ring::Rat, g);
}

}  // namespace rimfloer::polyalg
