#include "rimfloer/polyalg/omega.hpp"

#include "rimfloer/error.hpp"
#include "rimfloer/polyalg/factor.hpp"

namespace rimfloer::polyalg {

namespace {

void require_field(Ring ring) {
    if (ring == Ring::Int) {
        throw Error(ErrorCode::UnsupportedRing, "Omega is defined over GF(2) or Q; convert Int input first");
    }
}

/// k with d == k * w, if any.
std::optional<std::int64_t> multiple_of(const Exponent &d, const Exponent &w) {
    std::optional<std::int64_t> k;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (w[i] == 0) {
            if (d[i] != 0) return std::nullopt;
            continue;
        }
        if (d[i] % w[i] != 0) return std::nullopt;
        const std::int64_t q = d[i] / w[i];
        if (k && *k != q) return std::nullopt;
        k = q;
    }
    return k;
}

LaurentPoly project_to_line(const LaurentPoly &p) {
    LaurentPoly r(p.ring(), 1);
    for (const auto &[e, c] : p.terms()) r.add_term(Exponent{e[0]}, c);
    return r;
}

}  // namespace

std::int64_t OmegaValue::value() const {
    if (!finite_) throw Error(ErrorCode::InvalidArgument, "Omega value is -infinity");
    return value_;
}

std::string OmegaValue::to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

std::optional<LineReduction> reduce_to_line(const std::vector<LaurentPoly> &coords) {
    if (coords.empty()) throw Error(ErrorCode::InvalidArgument, "empty coordinate vector");
    for (const auto &c : coords) require_compatible(coords.front(), c);
    const std::size_t n = coords.front().dim();

    std::vector<Exponent> diffs;
    for (const auto &c : coords) {
        if (c.is_zero()) continue;
        const Exponent &base = c.terms().begin()->first;
        for (const auto &[e, coeff] : c.terms()) {
            Exponent d(n);
            for (std::size_t i = 0; i < n; ++i) d[i] = e[i] - base[i];
            diffs.push_back(std::move(d));
        }
    }
    Exponent w(n, 0);
    w[0] = 1;
    for (const auto &d : diffs) {
        const std::int64_t g = content(d);
        if (g == 0) continue;
        for (std::size_t i = 0; i < n; ++i) w[i] = d[i] / g;
        break;
    }
    for (const auto &d : diffs) {
        if (!multiple_of(d, w)) return std::nullopt;
    }

    LineReduction out{w, UnimodularMap::sending_to_e1(w), {}};
    for (const auto &c : coords) {
        const LaurentPoly image = apply_unimodular(c, out.map);
        out.line.push_back(project_to_line(image));
    }
    return out;
}

OmegaValue omega_ring(const LaurentPoly &p) {
    require_field(p.ring());
    if (p.is_zero()) return OmegaValue::neg_infinity();
    if (p.is_monomial()) return OmegaValue(0);
    if (!p.is_univariate()) {
        const auto line = reduce_to_line({p});
        if (!line) {
            throw Error(ErrorCode::UnsupportedRing,
                        "multivariate Omega is only supported for unit * q(z^w) with a single direction w");
        }
        return omega_ring(line->line.front());
    }
    return OmegaValue(factor(p).irreducible_count());
}

OmegaValue omega_module(const std::vector<LaurentPoly> &coords) {
    if (coords.empty()) return OmegaValue::neg_infinity();
    for (const auto &c : coords) require_compatible(coords.front(), c);
    require_field(coords.front().ring());
    bool all_zero = true;
    for (const auto &c : coords) all_zero = all_zero && c.is_zero();
    if (all_zero) return OmegaValue::neg_infinity();

    std::vector<LaurentPoly> line = coords;
    if (!coords.front().is_univariate()) {
        auto red = reduce_to_line(coords);
        if (!red) {
            throw Error(ErrorCode::UnsupportedRing,
                        "multivariate Omega is only supported when all coordinates lie along one direction");
        }
        line = std::move(red->line);
    }
    return omega_ring(univariate_gcd(line));
}

LaurentPoly substitute_monomial(const LaurentPoly &p, const Exponent &v) {
    if (!p.is_univariate()) throw Error(ErrorCode::DimensionMismatch, "substitution source must be univariate");
    if (v.empty()) throw Error(ErrorCode::DimensionMismatch, "substitution vector is empty");
    LaurentPoly r(p.ring(), v.size());
    for (const auto &[e, c] : p.terms()) {
        Exponent img(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (__builtin_mul_overflow(e[0], v[i], &img[i])) {
                throw Error(ErrorCode::DegreeTooLarge, "exponent overflow in substitution");
            }
        }
        r.add_term(img, c);
    }
    return r;
}

SubstitutionCertificate omega_substituted(const LaurentPoly &p, const Exponent &v) {
    if (content(v) != 1) throw Error(ErrorCode::NonPrimitiveVector, "substitution vector must be primitive");
    require_field(p.ring());
    UnimodularMap u = UnimodularMap::sending_to_e1(v);
    LaurentPoly sub = substitute_monomial(p, v);
    LaurentPoly reduced = apply_unimodular(sub, u);
    const OmegaValue value = omega_ring(project_to_line(reduced));
    return {v, std::move(u), std::move(sub), std::move(reduced), value};
}

}  // namespace rimfloer::polyalg
