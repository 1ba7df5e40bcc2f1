#include "rimfloer/polyalg/laurent.hpp"

#include "rimfloer/error.hpp"

#include <algorithm>

namespace rimfloer::polyalg {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::DegreeTooLarge, "exponent overflow");
    return r;
}

Exponent add_exponents(const Exponent &a, const Exponent &b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

void require_univariate(const LaurentPoly &p, const char *what) {
    if (!p.is_univariate()) {
        throw Error(ErrorCode::DimensionMismatch, std::string(what) + " requires a univariate polynomial");
    }
}

}  // namespace

void require_compatible(const LaurentPoly &p, const LaurentPoly &q) {
    if (p.dim() != q.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "polynomials of dimension " + std::to_string(p.dim()) + " and " +
                                                      std::to_string(q.dim()) + " cannot be combined");
    }
    if (p.ring() != q.ring()) {
        throw Error(ErrorCode::MixedRings, "polynomials over " + std::string(ring_name(p.ring())) + " and " +
                                               std::string(ring_name(q.ring())) + " cannot be combined");
    }
}

LaurentPoly::LaurentPoly(Ring ring, std::size_t dim) : ring_(ring), dim_(dim) {
    if (dim == 0) throw Error(ErrorCode::DimensionMismatch, "polynomial dimension must be at least 1");
}

LaurentPoly LaurentPoly::constant(Ring ring, std::size_t dim, const mpq_class &c) {
    LaurentPoly p(ring, dim);
    p.add_term(Exponent(dim, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(Ring ring, Exponent exponent, const mpq_class &c) {
    LaurentPoly p(ring, exponent.size());
    p.add_term(exponent, c);
    return p;
}

LaurentPoly LaurentPoly::from_coefficients(Ring ring, std::span<const mpq_class> coeffs, std::int64_t shift) {
    LaurentPoly p(ring, 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(Exponent{static_cast<std::int64_t>(i) + shift}, coeffs[i]);
    return p;
}

LaurentPoly LaurentPoly::from_coefficients(Ring ring, std::initializer_list<long> coeffs, std::int64_t shift) {
    std::vector<mpq_class> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return from_coefficients(ring, c, shift);
}

mpq_class LaurentPoly::coeff(const Exponent &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void LaurentPoly::add_term(const Exponent &e, const mpq_class &c) {
    if (e.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "exponent vector has wrong dimension");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, 0);
    it->second = normalize_in(ring_, it->second + c);
    if (it->second == 0) terms_.erase(it);
}

bool LaurentPoly::is_unit() const {
    return terms_.size() == 1 && Coefficient(ring_, terms_.begin()->second).is_unit();
}

std::int64_t LaurentPoly::min_degree() const {
    require_univariate(*this, "min_degree");
    if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
    return terms_.begin()->first[0];
}

std::int64_t LaurentPoly::max_degree() const {
    require_univariate(*this, "max_degree");
    if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
    return terms_.rbegin()->first[0];
}

std::vector<mpq_class> LaurentPoly::dense() const {
    if (is_zero()) return {};
    const std::int64_t lo = min_degree();
    std::vector<mpq_class> out(static_cast<std::size_t>(max_degree() - lo + 1), 0);
    for (const auto &[e, c] : terms_) out[static_cast<std::size_t>(e[0] - lo)] = c;
    return out;
}

LaurentPoly LaurentPoly::shifted(const Exponent &by) const {
    if (by.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "shift vector has wrong dimension");
    LaurentPoly r(ring_, dim_);
    for (const auto &[e, c] : terms_) r.terms_.emplace(add_exponents(e, by), c);
    return r;
}

LaurentPoly LaurentPoly::scaled(const mpq_class &c) const {
    LaurentPoly r(ring_, dim_);
    for (const auto &[e, v] : terms_) r.add_term(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::to_ring(Ring target) const {
    LaurentPoly r(target, dim_);
    for (const auto &[e, c] : terms_) r.add_term(e, c);
    return r;
}

mpq_class LaurentPoly::evaluate(const mpq_class &t) const {
    require_univariate(*this, "evaluate");
    mpq_class sum = 0;
    for (const auto &[e, c] : terms_) {
        mpq_class power = 1;
        const mpq_class base = e[0] >= 0 ? t : mpq_class(1) / t;
        for (std::int64_t k = 0; k < (e[0] >= 0 ? e[0] : -e[0]); ++k) power *= base;
        sum += c * power;
    }
    return normalize_in(ring_ == Ring::GF2 ? Ring::GF2 : Ring::Rat, sum);
}

LaurentPoly LaurentPoly::inverted() const {
    require_univariate(*this, "inverted");
    LaurentPoly r(ring_, 1);
    for (const auto &[e, c] : terms_) r.terms_.emplace(Exponent{-e[0]}, c);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
    LaurentPoly result = constant(ring_, dim_, 1);
    LaurentPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &other) {
    require_compatible(*this, other);
    for (const auto &[e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &other) {
    require_compatible(*this, other);
    for (const auto &[e, c] : other.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
    require_compatible(a, b);
    LaurentPoly r(a.ring(), a.dim());
    for (const auto &[ea, ca] : a.terms()) {
        for (const auto &[eb, cb] : b.terms()) r.add_term(add_exponents(ea, eb), ca * cb);
    }
    return r;
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly &p, const LaurentPoly &q) {
    require_compatible(p, q);
    require_univariate(p, "exact_divide");
    if (q.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
    if (p.is_zero()) return p;
    // Long division on the normalized dense forms, from the top degree down.
    const Ring work = p.ring() == Ring::GF2 ? Ring::GF2 : Ring::Rat;
    std::vector<mpq_class> rem = p.dense();
    const std::vector<mpq_class> div = q.dense();
    if (rem.size() < div.size()) return std::nullopt;
    const std::int64_t shift = p.min_degree() - q.min_degree();
    std::vector<mpq_class> quot(rem.size() - div.size() + 1, 0);
    const mpq_class lead = div.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const mpq_class c = normalize_in(work, rem[k + div.size() - 1] / lead);
        quot[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < div.size(); ++j) rem[k + j] = normalize_in(work, rem[k + j] - c * div[j]);
    }
    if (std::any_of(rem.begin(), rem.end(), [](const mpq_class &v) { return v != 0; })) return std::nullopt;
    if (p.ring() == Ring::Int &&
        std::any_of(quot.begin(), quot.end(), [](const mpq_class &v) { return v.get_den() != 1; })) {
        return std::nullopt;
    }
    return LaurentPoly::from_coefficients(p.ring(), quot, shift);
}

bool monomial_equivalent(const LaurentPoly &p, const LaurentPoly &q) {
    require_compatible(p, q);
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    if (p.term_count() != q.term_count()) return false;
    // Align the lexicographically first terms; the unit is then forced.
    const auto &[ep, cp] = *p.terms().begin();
    const auto &[eq, cq] = *q.terms().begin();
    Exponent shift(p.dim());
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = ep[i] - eq[i];
    const mpq_class ratio = cp / cq;
    if (p.ring() == Ring::Int && ratio != 1 && ratio != -1) return false;
    return q.shifted(shift).scaled(ratio) == p;
}

}  // namespace rimfloer::polyalg
