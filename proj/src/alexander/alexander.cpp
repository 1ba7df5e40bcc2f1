#include "rimfloer/alexander/alexander.hpp"

#include "rimfloer/error.hpp"
#include "rimfloer/polyalg/factor.hpp"

#include <cstdlib>

namespace rimfloer::alexander {

using polyalg::LaurentPoly;
using polyalg::Ring;

namespace {

LaurentPoly zero() { return LaurentPoly(Ring::Int, 1); }
LaurentPoly constant(long c) { return LaurentPoly::constant(Ring::Int, 1, c); }
LaurentPoly mono(std::int64_t e, long c) { return LaurentPoly::monomial(Ring::Int, {e}, c); }

PolyMatrix identity(std::size_t n) {
    PolyMatrix m(n, std::vector<LaurentPoly>(n, zero()));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = constant(1);
    return m;
}

/// Right multiplication of m by the reduced Burau matrix of one letter. Only
/// columns i-1, i, i+1 (0-based, letter index i) change.
void apply_letter(PolyMatrix &m, int letter) {
    const std::size_t d = m.size();
    const auto i = static_cast<std::size_t>(std::abs(letter) - 1);
    const bool positive = letter > 0;
    // Row i of the generator matrix; every other row is the identity.
    // sigma_i:      e_{i-1} -> t, e_i -> -t, e_{i+1} -> 1
    // sigma_i^-1:   e_{i-1} -> 1, e_i -> -1/t, e_{i+1} -> 1/t
    const LaurentPoly left = positive ? mono(1, 1) : constant(1);
    const LaurentPoly mid = positive ? mono(1, -1) : mono(-1, -1);
    const LaurentPoly right = positive ? constant(1) : mono(-1, 1);
    for (std::size_t r = 0; r < d; ++r) {
        const LaurentPoly a = m[r][i];
        if (a.is_zero()) continue;
        if (i > 0) m[r][i - 1] += a * left;
        if (i + 1 < d) m[r][i + 1] += a * right;
        m[r][i] = a * mid;
    }
}

std::int64_t degree_sum(const LaurentPoly &p) { return p.min_degree() + p.max_degree(); }

}  // namespace

PolyMatrix reduced_burau(const braid::BraidWord &b) {
    braid::validate(b);
    PolyMatrix m = identity(static_cast<std::size_t>(b.strands - 1));
    for (int g : b.letters) apply_letter(m, g);
    return m;
}

LaurentPoly determinant(PolyMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return constant(1);
    LaurentPoly prev = constant(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return zero();
            std::swap(m[k], m[p]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                auto q = polyalg::exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
                if (!q) throw Error(ErrorCode::InexactDivision, "Bareiss step is not exact");
                m[i][j] = std::move(*q);
            }
            m[i][k] = zero();
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

LaurentPoly symmetrize(const LaurentPoly &p) {
    if (p.ring() != Ring::Int || !p.is_univariate() || p.is_zero()) {
        throw Error(ErrorCode::NotNormalized, "expected a nonzero univariate integer polynomial");
    }
    const std::int64_t s = degree_sum(p);
    if (s % 2 != 0) throw Error(ErrorCode::NotNormalized, "polynomial has no symmetric shift");
    LaurentPoly q = p.shifted(-s / 2);
    if (q.inverted() != q) throw Error(ErrorCode::NotNormalized, "polynomial is not symmetric");
    const mpq_class at_one = q.evaluate(1);
    if (at_one == -1) q = -q;
    else if (at_one != 1) throw Error(ErrorCode::NotNormalized, "polynomial does not take the value +-1 at t = 1");
    return q;
}

bool is_normalized(const LaurentPoly &p) {
    if (!p.is_univariate() || p.is_zero()) return false;
    if (p.ring() != Ring::Int && p.ring() != Ring::Rat) return false;
    return p.inverted() == p && p.evaluate(1) == 1;
}

LaurentPoly alexander_from_braid(const braid::BraidWord &b) {
    const int k = braid::closure_components(b);
    if (k != 1) throw Error(ErrorCode::NotAKnot, "braid closure has " + std::to_string(k) + " components");
    PolyMatrix m = reduced_burau(b);
    for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= constant(1);
    const LaurentPoly det = determinant(std::move(m));
    // (1 - t^n) / (1 - t) = 1 + t + ... + t^(n-1)
    LaurentPoly geometric = zero();
    for (int e = 0; e < b.strands; ++e) geometric += mono(e, 1);
    auto q = polyalg::exact_divide(det, geometric);
    if (!q) throw Error(ErrorCode::InexactDivision, "Burau determinant is not divisible by 1 + t + ... + t^(n-1)");
    LaurentPoly delta = symmetrize(*q);
    if (delta.span_degree() > polyalg::kFactorDegreeCap) {
        throw Error(ErrorCode::DegreeTooLarge, "Alexander polynomial exceeds the degree cap");
    }
    return delta;
}

LaurentPoly alexander_from_seifert(const SeifertMatrix &v) {
    const std::size_t n = v.size();
    for (const auto &row : v) {
        if (row.size() != n) throw Error(ErrorCode::InvalidSeifertMatrix, "Seifert matrix is not square");
    }
    if (n % 2 != 0) throw Error(ErrorCode::InvalidSeifertMatrix, "Seifert matrix has odd size");
    PolyMatrix skew(n, std::vector<LaurentPoly>(n, zero())), m = skew;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            skew[i][j] = constant(v[i][j] - v[j][i]);
            m[i][j] = constant(v[i][j]) - mono(1, v[j][i]);
        }
    }
    const LaurentPoly unimodular = determinant(std::move(skew));
    if (unimodular != constant(1)) {
        throw Error(ErrorCode::InvalidSeifertMatrix, "V - V^T is not unimodular");
    }
    return symmetrize(determinant(std::move(m)));
}

LaurentPoly connected_sum_alexander(const std::vector<LaurentPoly> &ps) {
    LaurentPoly out = constant(1);
    for (const auto &p : ps) {
        if (!is_normalized(p)) throw Error(ErrorCode::NotNormalized, "factor is not symmetric with value 1 at t = 1");
        out = out * p.to_ring(Ring::Int);
        if (out.span_degree() > polyalg::kFactorDegreeCap) {
            throw Error(ErrorCode::DegreeTooLarge, "connected sum exceeds the degree cap");
        }
    }
    return out;
}

polyalg::OmegaValue irr_count(const LaurentPoly &delta, Ring ring) {
    if (ring == Ring::Int) throw Error(ErrorCode::UnsupportedRing, "irreducible factors are counted over f2 or q");
    return polyalg::omega_ring(delta.to_ring(ring));
}

}  // namespace rimfloer::alexander
