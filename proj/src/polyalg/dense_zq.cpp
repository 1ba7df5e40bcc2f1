#include "dense.hpp"

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>

namespace rimfloer::polyalg::dense {

void trim(ZPoly &f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

void trim(QPoly &f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

long degree(const ZPoly &f) noexcept { return static_cast<long>(f.size()) - 1; }

mpz_class content(const ZPoly &f) {
    mpz_class g = 0;
    for (const auto &c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly primitive_part(const ZPoly &f) {
    ZPoly r = f;
    trim(r);
    if (r.empty()) return r;
    mpz_class g = content(r);
    if (r.back() < 0) g = -g;
    for (auto &c : r) c /= g;
    return r;
}

ZPoly mul(const ZPoly &a, const ZPoly &b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    trim(c);
    return c;
}

bool divides_exactly(const ZPoly &a, const ZPoly &b, ZPoly &quotient) {
    if (b.empty()) return false;
    if (a.empty()) {
        quotient.clear();
        return true;
    }
    if (a.size() < b.size()) return false;
    ZPoly rem = a;
    ZPoly q(a.size() - b.size() + 1, 0);
    const std::size_t db = b.size() - 1;
    for (std::size_t k = q.size(); k-- > 0;) {
        if (rem[k + db] == 0) continue;
        if (!mpz_divisible_p(rem[k + db].get_mpz_t(), b.back().get_mpz_t())) return false;
        const mpz_class c = rem[k + db] / b.back();
        q[k] = c;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b[j];
    }
    if (std::any_of(rem.begin(), rem.end(), [](const mpz_class &v) { return v != 0; })) return false;
    trim(q);
    quotient = std::move(q);
    return true;
}

std::pair<ZPoly, mpq_class> to_primitive_integer(const QPoly &f) {
    mpz_class den = 1;
    for (const auto &c : f) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z;
    z.reserve(f.size());
    for (const auto &c : f) z.emplace_back(mpz_class(c.get_num() * (den / c.get_den())));
    trim(z);
    if (z.empty()) return {z, 1};
    ZPoly pp = primitive_part(z);
    mpq_class scale(z.back(), den * pp.back());
    scale.canonicalize();
    return {pp, scale};
}

QPoly to_rational(const ZPoly &f) {
    QPoly q;
    q.reserve(f.size());
    for (const auto &c : f) q.emplace_back(c);
    return q;
}

QPoly mul(const QPoly &a, const QPoly &b) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    trim(c);
    return c;
}

std::pair<QPoly, QPoly> divrem(const QPoly &a, const QPoly &b) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    if (a.size() < b.size()) return {{}, a};
    QPoly rem = a;
    QPoly q(a.size() - b.size() + 1, 0);
    const std::size_t db = b.size() - 1;
    for (std::size_t k = q.size(); k-- > 0;) {
        const mpq_class c = rem[k + db] / b.back();
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b[j];
    }
    trim(q);
    trim(rem);
    return {q, rem};
}

QPoly monic(const QPoly &f) {
    if (f.empty()) return f;
    QPoly r = f;
    const mpq_class lead = f.back();
    for (auto &c : r) c /= lead;
    return r;
}

QPoly gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = divrem(a, b).second;
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

QPoly derivative(const QPoly &f) {
    QPoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned long>(i));
    trim(d);
    return d;
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly &f) {
    std::vector<std::pair<QPoly, int>> out;
    if (f.size() <= 1) return out;
    // Yun's algorithm; characteristic zero, so f' != 0.
    QPoly a = gcd(f, derivative(f));
    QPoly b = divrem(f, a).first;
    QPoly c = divrem(derivative(f), a).first;
    QPoly d;
    {
        const QPoly db = derivative(b);
        d = c;
        d.resize(std::max(c.size(), db.size()), 0);
        for (std::size_t k = 0; k < db.size(); ++k) d[k] -= db[k];
        trim(d);
    }
    int i = 1;
    while (b.size() > 1) {
        QPoly g = gcd(b, d);
        b = divrem(b, g).first;
        c = divrem(d, g).first;
        const QPoly db = derivative(b);
        d = c;
        d.resize(std::max(c.size(), db.size()), 0);
        for (std::size_t k = 0; k < db.size(); ++k) d[k] -= db[k];
        trim(d);
        if (g.size() > 1) out.emplace_back(monic(g), i);
        ++i;
    }
    return out;
}

// ------------------------------------------------------------ Zassenhaus ----

namespace {

/// Coefficients reduced into [0, m).
ZPoly reduce(const ZPoly &f, const mpz_class &m) {
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        mpz_fdiv_r(r[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
    }
    trim(r);
    return r;
}

/// Coefficients reduced into (-m/2, m/2].
ZPoly symmetric(const ZPoly &f, const mpz_class &m) {
    ZPoly r = reduce(f, m);
    const mpz_class half = m / 2;
    for (auto &c : r) {
        if (c > half) c -= m;
    }
    trim(r);
    return r;
}

ModPoly to_mod(const ZPoly &f, std::uint64_t p) {
    ModCoeffs c(f.size());
    const mpz_class pz(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < f.size(); ++i) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), f[i].get_mpz_t(), pz.get_mpz_t());
        c[i] = r.get_ui();
    }
    return ModPoly(p, std::move(c));
}

ZPoly from_mod(const ModPoly &f) {
    ZPoly r;
    for (auto c : f.coeffs()) r.emplace_back(static_cast<unsigned long>(c));
    return r;
}

ZPoly add_scaled(const ZPoly &a, const ZPoly &b, const mpz_class &s) {
    ZPoly r = a;
    if (r.size() < b.size()) r.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += s * b[i];
    trim(r);
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

/// Lifts F == A * B (mod p) to F == A * B (mod p^k), A monic.
std::pair<ZPoly, ZPoly> hensel_lift_pair(const ZPoly &F, const ModPoly &a0, const ModPoly &b0, std::uint64_t p,
                                         unsigned k) {
    const auto [s, t] = bezout(a0, b0);
    (void)s;
    ZPoly A = from_mod(a0);
    ZPoly B = from_mod(b0);
    const mpz_class pz(static_cast<unsigned long>(p));
    mpz_class pj = pz;
    for (unsigned step = 1; step < k; ++step) {
        const mpz_class next = pj * pz;
        ZPoly E = reduce(add_scaled(F, mul(A, B), -1), next);
        for (auto &c : E) c /= pj;
        const ModPoly e = to_mod(E, p);
        const ModPoly alpha = divrem(t * e, a0).second;
        const ModPoly beta = divrem(e - alpha * b0, a0).first;
        A = reduce(add_scaled(A, from_mod(alpha), pj), next);
        B = reduce(add_scaled(B, from_mod(beta), pj), next);
        pj = next;
    }
    return {A, B};
}

ModPoly product(std::span<const ModPoly> fs, std::uint64_t p) {
    ModPoly r = ModPoly::constant(p, 1);
    for (const auto &f : fs) r = r * f;
    return r;
}

/// Monic lifts mod p^k of the modular factorization F == lc * prod(factors).
void multifactor_lift(const ZPoly &F, std::span<const ModPoly> factors, std::uint64_t p, unsigned k,
                      const mpz_class &pk, std::vector<ZPoly> &out) {
    if (factors.size() == 1) {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), F.back().get_mpz_t(), pk.get_mpz_t());
        ZPoly m = F;
        for (auto &c : m) c *= inv;
        out.push_back(reduce(m, pk));
        return;
    }
    const std::size_t half = factors.size() / 2;
    const ModPoly a0 = product(factors.subspan(0, half), p);
    const ModPoly b0 = product(factors.subspan(half), p).scaled(to_mod(ZPoly{F.back()}, p)[0]);
    auto [A, B] = hensel_lift_pair(F, a0, b0, p, k);
    multifactor_lift(A, factors.subspan(0, half), p, k, pk, out);
    multifactor_lift(B, factors.subspan(half), p, k, pk, out);
}

}  // namespace

std::vector<ZPoly> zassenhaus(const ZPoly &input) {
    ZPoly f = primitive_part(input);
    if (degree(f) <= 1) return {f};

    // Prime of good reduction minimizing the number of modular factors.
    std::uint64_t best_p = 0;
    std::size_t best_r = 0;
    int good = 0;
    for (std::uint64_t p = 3; good < 5; p += 2) {
        if (!is_prime(p)) continue;
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), p) != 0) continue;
        const ModPoly fp = to_mod(f, p).monic();
        if (gcd(fp, fp.derivative()).degree() != 0) continue;
        const std::size_t r = berlekamp_count(fp);
        if (best_p == 0 || r < best_r) {
            best_p = p;
            best_r = r;
        }
        ++good;
        if (r == 1) break;
    }
    if (best_r == 1) return {f};

    const std::uint64_t p = best_p;
    const std::vector<ModPoly> modular = berlekamp_split(to_mod(f, p).monic());

    // Every factor g of f satisfies |g|_inf <= 2^deg(f) * |f|_2; scaled by
    // |lc(f)| this bounds the integer lifts to be recovered.
    mpz_class norm2 = 0;
    for (const auto &c : f) norm2 += c * c;
    mpz_class norm;
    mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
    norm += 1;
    mpz_class bound = norm * abs(f.back());
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(degree(f)));
    bound *= 2;
    unsigned k = 1;
    mpz_class pk(static_cast<unsigned long>(p));
    while (pk <= bound) {
        pk *= static_cast<unsigned long>(p);
        ++k;
    }

    std::vector<ZPoly> lifted;
    multifactor_lift(f, modular, p, k, pk, lifted);

    std::vector<ZPoly> result;
    std::vector<ZPoly> remaining = lifted;
    for (std::size_t s = 1; 2 * s <= remaining.size();) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            ZPoly h{f.back()};
            for (std::size_t i : idx) h = reduce(mul(h, remaining[i]), pk);
            h = primitive_part(symmetric(h, pk));
            ZPoly q;
            if (degree(h) > 0 && divides_exactly(f, h, q)) {
                result.push_back(h);
                f = q;
                for (std::size_t j = idx.size(); j-- > 0;) remaining.erase(remaining.begin() + static_cast<long>(idx[j]));
                found = true;
                break;
            }
            // Next s-subset in lexicographic order.
            std::size_t pos = s;
            while (pos > 0 && idx[pos - 1] == remaining.size() - s + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t j = pos; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (degree(f) > 0) result.push_back(primitive_part(f));
    return result;
}

}  // namespace rimfloer::polyalg::dense
