#include "rimfloer/polyalg/unimodular.hpp"

#include "rimfloer/error.hpp"

#include <numeric>

namespace rimfloer::polyalg {

namespace {

std::int64_t checked_mul_add(std::int64_t acc, std::int64_t a, std::int64_t b) {
    std::int64_t prod = 0, sum = 0;
    if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &sum)) {
        throw Error(ErrorCode::DegreeTooLarge, "exponent overflow under unimodular map");
    }
    return sum;
}

UnimodularMap::Matrix identity_matrix(std::size_t n) {
    UnimodularMap::Matrix m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

UnimodularMap::Matrix multiply(const UnimodularMap::Matrix &a, const UnimodularMap::Matrix &b) {
    const std::size_t n = a.size();
    UnimodularMap::Matrix c(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] = checked_mul_add(c[i][j], a[i][k], b[k][j]);
        }
    }
    return c;
}

}  // namespace

mpz_class integer_determinant(const UnimodularMap::Matrix &rows) {
    const std::size_t n = rows.size();
    std::vector<std::vector<mpz_class>> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (auto v : rows[i]) m[i].emplace_back(static_cast<long>(v));
    }
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * (n == 0 ? mpz_class(1) : m[n - 1][n - 1]);
}

std::int64_t content(const Exponent &v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

UnimodularMap::UnimodularMap(Matrix rows) : rows_(std::move(rows)) {
    const std::size_t n = rows_.size();
    if (n == 0) throw Error(ErrorCode::DimensionMismatch, "unimodular map of dimension 0");
    for (const auto &r : rows_) {
        if (r.size() != n) throw Error(ErrorCode::DimensionMismatch, "unimodular map must be square");
    }
    const mpz_class d = integer_determinant(rows_);
    if (d != 1 && d != -1) throw Error(ErrorCode::NotUnimodular, "matrix determinant is " + d.get_str());
    det_ = d.get_si();
}

UnimodularMap UnimodularMap::identity(std::size_t n) { return UnimodularMap(identity_matrix(n)); }

UnimodularMap UnimodularMap::sending_to_e1(const Exponent &v) {
    if (v.empty()) throw Error(ErrorCode::DimensionMismatch, "empty vector");
    if (content(v) != 1) throw Error(ErrorCode::NonPrimitiveVector, "vector is not primitive");
    // Integer row operations reduce v to e1; U accumulates them.
    const std::size_t n = v.size();
    Matrix u = identity_matrix(n);
    Exponent w = v;
    auto add_row = [&](std::size_t dst, std::size_t src, std::int64_t k) {
        w[dst] = checked_mul_add(w[dst], -k, w[src]);
        for (std::size_t j = 0; j < n; ++j) u[dst][j] = checked_mul_add(u[dst][j], -k, u[src][j]);
    };
    auto swap_rows = [&](std::size_t a, std::size_t b) {
        std::swap(w[a], w[b]);
        std::swap(u[a], u[b]);
    };
    for (;;) {
        std::size_t best = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (w[i] != 0 && (best == n || std::abs(w[i]) < std::abs(w[best]))) best = i;
        }
        bool others = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (i != best && w[i] != 0) {
                others = true;
                add_row(i, best, w[i] / w[best]);
            }
        }
        if (!others) {
            swap_rows(0, best);
            break;
        }
    }
    if (w[0] == -1) {
        w[0] = 1;
        for (auto &x : u[0]) x = -x;
    }
    return UnimodularMap(std::move(u));
}

Exponent UnimodularMap::apply(const Exponent &e) const {
    if (e.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "exponent vector has wrong dimension");
    Exponent r(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
        for (std::size_t j = 0; j < dim(); ++j) r[i] = checked_mul_add(r[i], rows_[i][j], e[j]);
    }
    return r;
}

UnimodularMap UnimodularMap::inverse() const {
    // Adjugate over Z: inverse entries are signed cofactors times det.
    const std::size_t n = dim();
    Matrix inv(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Matrix minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<std::int64_t> row;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c != i) row.push_back(rows_[r][c]);
                }
                minor.push_back(std::move(row));
            }
            const mpz_class cof = (n == 1 ? mpz_class(1) : integer_determinant(minor)) * (((i + j) % 2 == 0) ? 1 : -1);
            inv[i][j] = mpz_class(cof * det_).get_si();
        }
    }
    return UnimodularMap(std::move(inv));
}

UnimodularMap operator*(const UnimodularMap &a, const UnimodularMap &b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "cannot compose maps of different dimension");
    return UnimodularMap(multiply(a.rows_, b.rows_));
}

LaurentPoly apply_unimodular(const LaurentPoly &p, const UnimodularMap &u) {
    if (p.dim() != u.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "map of dimension " + std::to_string(u.dim()) +
                                                      " applied to a polynomial of dimension " +
                                                      std::to_string(p.dim()));
    }
    LaurentPoly r(p.ring(), p.dim());
    for (const auto &[e, c] : p.terms()) r.add_term(u.apply(e), c);
    return r;
}

}  // namespace rimfloer::polyalg
