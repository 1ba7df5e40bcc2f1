#include "dense.hpp"

#include <algorithm>
#include <stdexcept>

namespace rimfloer::polyalg::dense {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

ModPoly exact_quotient(const ModPoly &a, const ModPoly &b) { return divrem(a, b).first; }

/// Nullspace basis of a d x d matrix over GF(p) (row-major), by reduction to
/// row echelon form.
std::vector<std::vector<std::uint64_t>> nullspace(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<long> pivot_col_of_row;
    std::vector<bool> is_pivot(cols, false);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        const std::uint64_t inv = mod_inverse(m[r][c], p);
        for (auto &v : m[r]) v = mulmod(v, inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const std::uint64_t f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = (m[i][j] + p - mulmod(f, m[r][j], p)) % p;
        }
        pivot_col_of_row.push_back(static_cast<long>(c));
        is_pivot[c] = true;
        ++r;
    }
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint64_t> v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) {
            v[static_cast<std::size_t>(pivot_col_of_row[i])] = (p - m[i][free]) % p;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Rows of the Berlekamp matrix Q - I, transposed so that its nullspace is the
/// Berlekamp subalgebra {g : g^p == g mod f}.
std::vector<std::vector<std::uint64_t>> berlekamp_matrix(const ModPoly &f) {
    const std::uint64_t p = f.prime();
    const auto d = static_cast<std::size_t>(f.degree());
    const ModPoly xp = powmod(ModPoly::x_power(p, 1), mpz_class(static_cast<unsigned long>(p)), f);
    std::vector<std::vector<std::uint64_t>> t(d, std::vector<std::uint64_t>(d, 0));
    ModPoly row = ModPoly::constant(p, 1);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) t[j][i] = row[j];
        t[i][i] = (t[i][i] + p - 1) % p;
        row = divrem(row * xp, f).second;
    }
    return t;
}

}  // namespace

ModPoly::ModPoly(std::uint64_t p, ModCoeffs c) : p_(p), c_(std::move(c)) {
    for (auto &v : c_) v %= p_;
    trim();
}

ModPoly ModPoly::x_power(std::uint64_t p, std::size_t k) {
    ModCoeffs c(k + 1, 0);
    c[k] = 1;
    return ModPoly(p, std::move(c));
}

void ModPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(mod_inverse(lead(), p_));
}

ModPoly ModPoly::derivative() const {
    ModCoeffs d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(mulmod(c_[i], i % p_, p_));
    return ModPoly(p_, std::move(d));
}

ModPoly ModPoly::scaled(std::uint64_t s) const {
    ModCoeffs d(c_);
    for (auto &v : d) v = mulmod(v, s % p_, p_);
    return ModPoly(p_, std::move(d));
}

ModPoly operator+(const ModPoly &a, const ModPoly &b) {
    ModCoeffs c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + b[i]) % a.p_;
    return ModPoly(a.p_, std::move(c));
}

ModPoly operator-(const ModPoly &a, const ModPoly &b) {
    ModCoeffs c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + a.p_ - b[i]) % a.p_;
    return ModPoly(a.p_, std::move(c));
}

ModPoly operator*(const ModPoly &a, const ModPoly &b) {
    if (a.is_zero() || b.is_zero()) return ModPoly(a.p_);
    ModCoeffs c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = (c[i + j] + mulmod(a.c_[i], b.c_[j], a.p_)) % a.p_;
    }
    return ModPoly(a.p_, std::move(c));
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    auto r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    if (new_r == 0) throw std::domain_error("mod_inverse of zero");
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

std::pair<ModPoly, ModPoly> divrem(const ModPoly &a, const ModPoly &b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const std::uint64_t p = a.prime();
    if (a.degree() < b.degree()) return {ModPoly(p), a};
    ModCoeffs rem = a.coeffs();
    const auto db = static_cast<std::size_t>(b.degree());
    ModCoeffs quot(rem.size() - db, 0);
    const std::uint64_t inv = mod_inverse(b.lead(), p);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const std::uint64_t c = mulmod(rem[k + db], inv, p);
        quot[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] = (rem[k + j] + p - mulmod(c, b[j], p)) % p;
    }
    return {ModPoly(p, std::move(quot)), ModPoly(p, std::move(rem))};
}

ModPoly gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::pair<ModPoly, ModPoly> bezout(const ModPoly &a, const ModPoly &b) {
    const std::uint64_t p = a.prime();
    ModPoly r0 = a, r1 = b;
    ModPoly s0 = ModPoly::constant(p, 1), s1(p);
    ModPoly t0(p), t1 = ModPoly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    const std::uint64_t inv = mod_inverse(r0.lead(), p);
    return {s0.scaled(inv), t0.scaled(inv)};
}

ModPoly powmod(const ModPoly &base, mpz_class exponent, const ModPoly &modulus) {
    ModPoly result = divrem(ModPoly::constant(base.prime(), 1), modulus).second;
    ModPoly b = divrem(base, modulus).second;
    while (exponent > 0) {
        if (mpz_odd_p(exponent.get_mpz_t()) != 0) result = divrem(result * b, modulus).second;
        exponent >>= 1;
        if (exponent > 0) b = divrem(b * b, modulus).second;
    }
    return result;
}

std::vector<std::pair<ModPoly, int>> squarefree_decomposition(const ModPoly &f) {
    const std::uint64_t p = f.prime();
    std::vector<std::pair<ModPoly, int>> out;
    if (f.degree() <= 0) return out;
    ModPoly c = gcd(f, f.derivative());
    ModPoly w = exact_quotient(f, c);
    int i = 1;
    while (w.degree() > 0) {
        ModPoly y = gcd(w, c);
        ModPoly fac = exact_quotient(w, y);
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
        w = std::move(y);
        c = exact_quotient(c, w);
        ++i;
    }
    if (c.degree() > 0) {
        // c == g(x^p); over the prime field g(x^p) == g(x)^p.
        ModCoeffs root;
        for (std::size_t k = 0; k < c.coeffs().size(); k += p) root.push_back(c.coeffs()[k]);
        for (auto &[g, m] : squarefree_decomposition(ModPoly(p, std::move(root)).monic())) {
            out.emplace_back(std::move(g), m * static_cast<int>(p));
        }
    }
    return out;
}

std::size_t berlekamp_count(const ModPoly &f) {
    if (f.degree() <= 1) return f.degree() == 1 ? 1 : 0;
    return nullspace(berlekamp_matrix(f), f.prime()).size();
}

std::vector<ModPoly> berlekamp_split(const ModPoly &f) {
    const std::uint64_t p = f.prime();
    if (f.degree() <= 1) return {f.monic()};
    const auto basis = nullspace(berlekamp_matrix(f), p);
    const std::size_t r = basis.size();
    std::vector<ModPoly> factors{f.monic()};
    for (const auto &v : basis) {
        if (factors.size() == r) break;
        const ModPoly g(p, v);
        if (g.degree() <= 0) continue;
        for (std::uint64_t s = 0; s < p && factors.size() < r; ++s) {
            const ModPoly shifted = g - ModPoly::constant(p, s);
            std::vector<ModPoly> next;
            for (const ModPoly &h : factors) {
                if (h.degree() <= 1) {
                    next.push_back(h);
                    continue;
                }
                ModPoly d = gcd(h, shifted);
                if (d.degree() > 0 && d.degree() < h.degree()) {
                    next.push_back(exact_quotient(h, d).monic());
                    next.push_back(std::move(d));
                } else {
                    next.push_back(h);
                }
            }
            factors = std::move(next);
        }
    }
    std::sort(factors.begin(), factors.end(), [](const ModPoly &a, const ModPoly &b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(),
                                            b.coeffs().rend());
    });
    return factors;
}

}  // namespace rimfloer::polyalg::dense
