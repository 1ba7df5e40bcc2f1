#include "rimfloer/rimcalc/rimcalc.hpp"

#include "rimfloer/alexander/alexander.hpp"
#include "rimfloer/error.hpp"
#include "rimfloer/polyalg/text.hpp"

#include <numeric>
#include <set>

namespace rimfloer::rimcalc {

using polyalg::LaurentPoly;
using polyalg::OmegaValue;
using polyalg::Ring;

QuasipositiveOmega omega_quasipositive(const braid::QuasipositiveWord &w) {
    const int genus = braid::quasipositive_surface_genus(w);
    if (genus == 0) throw Error(ErrorCode::GenusZero, "quasipositive surface is a disk; Omega needs genus > 0");
    return {OmegaValue(0), genus, w, "quasipositive: " + braid::format_quasipositive(w)};
}

LaurentPoly lefschetz_of_twist(const LaurentPoly &delta, int n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "twist count must be positive");
    return alexander::connected_sum_alexander(std::vector<LaurentPoly>(static_cast<std::size_t>(n), delta));
}

namespace {

std::string vector_text(const polyalg::Exponent &v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

void check_spec(const FamilySpec &spec) {
    if (spec.genus < 1) throw Error(ErrorCode::InvalidArgument, "surface genus must be at least 1");
    if (spec.curve.size() != static_cast<std::size_t>(2 * spec.genus)) {
        throw Error(ErrorCode::DimensionMismatch, "curve class needs " + std::to_string(2 * spec.genus) + " entries");
    }
    std::int64_t g = 0;
    for (auto c : spec.curve) g = std::gcd(g, c);
    if (g != 1) {
        throw Error(ErrorCode::NonPrimitiveCurve, "curve class " + vector_text(spec.curve) + " is not primitive");
    }
    if (spec.base.is_neg_infinity()) throw Error(ErrorCode::NegativeBase, "base Omega is -inf");
    if (spec.indices.empty()) throw Error(ErrorCode::InvalidArgument, "no family indices");
    for (std::size_t i = 0; i < spec.indices.size(); ++i) {
        if (spec.indices[i] < 1 || (i > 0 && spec.indices[i] <= spec.indices[i - 1])) {
            throw Error(ErrorCode::InvalidArgument, "family indices must be positive and increasing");
        }
    }
    if (spec.ring != Ring::GF2 && spec.ring != Ring::Rat) {
        throw Error(ErrorCode::UnsupportedRing, "family ring must be f2 or q");
    }
    if (!alexander::is_normalized(spec.pattern)) {
        throw Error(ErrorCode::NotNormalized, "pattern polynomial is not symmetric with value 1 at t = 1");
    }
}

}  // namespace

Certificate certify_family(const FamilySpec &spec) {
    check_spec(spec);
    const LaurentPoly pattern = spec.pattern.to_ring(Ring::Int);
    Certificate cert{spec, {}, polyalg::UnimodularMap::sending_to_e1(spec.curve), {}, false};
    auto &log = cert.hypothesis_log;
    log.push_back("curve " + vector_text(spec.curve) + " is primitive");
    log.push_back("base Omega = " + spec.base.to_string() + " (" + spec.base_provenance + ")");

    cert.rows.resize(spec.indices.size());
    std::vector<Error> failures;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < spec.indices.size(); ++i) {
        try {
            FamilyRow row;
            row.n = spec.indices[i];
            row.lefschetz = lefschetz_of_twist(pattern, row.n);
            const auto f2 = polyalg::omega_substituted(row.lefschetz.to_ring(Ring::GF2), spec.curve);
            const auto q = polyalg::omega_substituted(row.lefschetz.to_ring(Ring::Rat), spec.curve);
            row.omega_f2 = spec.base + f2.value;
            row.omega_q = spec.base + q.value;
            cert.rows[i] = std::move(row);
        } catch (const Error &e) {
#pragma omp critical
            failures.push_back(e);
        }
    }
    if (!failures.empty()) throw failures.front();

    const OmegaValue irr = alexander::irr_count(pattern, spec.ring);
    const std::string ring(polyalg::ring_name(spec.ring));
    if (irr == OmegaValue(0)) {
        log.push_back("pattern has no irreducible factors over " + ring + "; family not certified");
        return cert;
    }
    log.push_back("pattern has " + irr.to_string() + " irreducible factors over " + ring);
    std::set<std::int64_t> seen;
    bool distinct = true;
    for (const auto &row : cert.rows) {
        const OmegaValue v = spec.ring == Ring::GF2 ? row.omega_f2 : row.omega_q;
        distinct = distinct && seen.insert(v.value()).second;
    }
    log.push_back(distinct ? "Omega values pairwise distinct" : "Omega values repeat");
    cert.verdict = distinct;
    return cert;
}

nlohmann::json to_json(const Certificate &c) {
    nlohmann::json spec = {
        {"genus", c.spec.genus},
        {"curve", c.spec.curve},
        {"pattern", polyalg::format_poly(c.spec.pattern)},
        {"base_omega", c.spec.base.to_string()},
        {"base_provenance", c.spec.base_provenance},
        {"n", c.spec.indices},
        {"ring", std::string(polyalg::ring_name(c.spec.ring))},
    };
    if (!c.spec.pattern_source.empty()) spec["pattern_source"] = c.spec.pattern_source;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &r : c.rows) {
        rows.push_back({{"n", r.n},
                        {"lef_poly", polyalg::format_poly(r.lefschetz)},
                        {"omega_f2", r.omega_f2.to_string()},
                        {"omega_q", r.omega_q.to_string()}});
    }
    return {{"spec", spec},
            {"rows", rows},
            {"reduction", {{"vector", c.spec.curve}, {"basis_change", c.basis_change.rows()}}},
            {"hypothesis_log", c.hypothesis_log},
            {"verdict", c.verdict}};
}

bool verify_nonvanishing(const braid::QuasipositiveWord &w, int max_size) {
    const braid::BraidWord b = braid::expand_quasipositive(w);
    const int k = braid::closure_components(b);
    if (k != 1) throw Error(ErrorCode::NotAKnot, "closure has " + std::to_string(k) + " components");
    if (b.strands == 1) return true;
    // The unreduced grid bounds the work of the reduction search.
    const int raw = braid::closure_grid(braid::mirror(b), true).size();
    if (raw > 4 * std::max(max_size, 2)) {
        throw Error(ErrorCode::TooLarge, "closure grid of size " + std::to_string(raw) + " is beyond the search range");
    }
    const grid::GridDiagram g = braid::transverse_grid(b);
    if (g.size() > max_size) {
        throw Error(ErrorCode::TooLarge,
                    "grid of size " + std::to_string(g.size()) + " exceeds cap " + std::to_string(max_size));
    }
    return grid::is_nonzero_class(grid::transverse_state(g), g, {.max_size = max_size});
}

NonvanishingCheck check_nonvanishing(const braid::QuasipositiveWord &w, int max_size) {
    const braid::BraidWord b = braid::expand_quasipositive(w);
    if (b.strands == 1) return {true, true, 0, "trivial braid: unknot class is nonzero"};
    try {
        const bool nonzero = verify_nonvanishing(w, max_size);
        return {nonzero, true, braid::transverse_grid(b).size(), "checked by grid homology"};
    } catch (const Error &e) {
        if (e.code() != ErrorCode::TooLarge) throw;
        return {true, false, 0, std::string("asserted for quasipositive closures, not machine-checked: ") + e.what()};
    }
}

}  // namespace rimfloer::rimcalc
