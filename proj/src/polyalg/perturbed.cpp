#include "rimfloer/polyalg/perturbed.hpp"

#include "rimfloer/error.hpp"

namespace rimfloer::polyalg {

namespace {

std::size_t gf2_rank(std::vector<std::vector<int>> m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && (m[piv][c] & 1) == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i != rank && (m[i][c] & 1) != 0) {
                for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[rank][j] & 1;
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

PerturbedElement::PerturbedElement(std::size_t dim, std::size_t basis_size) : dim_(dim), basis_size_(basis_size) {
    if (dim == 0) throw Error(ErrorCode::DimensionMismatch, "dimension must be at least 1");
}

void PerturbedElement::add_term(const RationalExponent &exponent, std::size_t index) {
    if (exponent.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "exponent vector has wrong dimension");
    if (index >= basis_size_) {
        throw Error(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(index) + " out of range");
    }
    Term t{exponent, index};
    for (auto &q : t.first) q.canonicalize();
    if (auto it = terms_.find(t); it != terms_.end()) {
        terms_.erase(it);
    } else {
        terms_.insert(std::move(t));
    }
}

mpq_class fractional_part(const mpq_class &q) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - fl;
}

std::optional<RationalExponent> is_projectively_integral(const PerturbedElement &x) {
    RationalExponent witness(x.dim(), 0);
    if (x.is_zero()) return witness;
    for (std::size_t i = 0; i < x.dim(); ++i) witness[i] = fractional_part(x.terms().begin()->first[i]);
    for (const auto &[e, idx] : x.terms()) {
        for (std::size_t i = 0; i < x.dim(); ++i) {
            if (fractional_part(e[i]) != witness[i]) return std::nullopt;
        }
    }
    return witness;
}

std::vector<LaurentPoly> integral_coordinates(const PerturbedElement &x) {
    const auto witness = is_projectively_integral(x);
    if (!witness) throw Error(ErrorCode::InvalidArgument, "element is not projectively integral");
    std::vector<LaurentPoly> coords(x.basis_size(), LaurentPoly(Ring::GF2, x.dim()));
    for (const auto &[e, idx] : x.terms()) {
        Exponent shifted(x.dim());
        for (std::size_t i = 0; i < x.dim(); ++i) {
            const mpq_class d = e[i] - (*witness)[i];
            shifted[i] = mpz_class(d.get_num()).get_si();
        }
        coords[idx].add_term(shifted, 1);
    }
    return coords;
}

OmegaValue omega_perturbed(const PerturbedElement &x) {
    if (x.is_zero()) return OmegaValue::neg_infinity();
    return omega_module(integral_coordinates(x));
}

PerturbedElement apply_unimodular(const PerturbedElement &x, const UnimodularMap &u,
                                  const std::vector<std::vector<int>> &phi) {
    if (u.dim() != x.dim()) throw Error(ErrorCode::DimensionMismatch, "map dimension does not match element");
    if (!phi.empty()) {
        if (phi.size() != x.basis_size()) throw Error(ErrorCode::DimensionMismatch, "basis map has wrong size");
        for (const auto &row : phi) {
            if (row.size() != x.basis_size()) throw Error(ErrorCode::DimensionMismatch, "basis map must be square");
        }
        if (gf2_rank(phi) != x.basis_size()) throw Error(ErrorCode::NotUnimodular, "basis map is singular over GF(2)");
    }
    PerturbedElement out(x.dim(), x.basis_size());
    for (const auto &[e, idx] : x.terms()) {
        RationalExponent img(x.dim(), 0);
        for (std::size_t i = 0; i < x.dim(); ++i) {
            for (std::size_t j = 0; j < x.dim(); ++j) img[i] += mpq_class(static_cast<long>(u.rows()[i][j])) * e[j];
        }
        if (phi.empty()) {
            out.add_term(img, idx);
            continue;
        }
        for (std::size_t r = 0; r < x.basis_size(); ++r) {
            if ((phi[r][idx] & 1) != 0) out.add_term(img, r);
        }
    }
    return out;
}

}  // namespace rimfloer::polyalg
