#include "rimfloer/error.hpp"
#include "rimfloer/polyalg/omega.hpp"
#include "rimfloer/polyalg/perturbed.hpp"
#include "rimfloer/polyalg/text.hpp"

#include <doctest.h>

#include <random>

using namespace rimfloer;
using namespace rimfloer::polyalg;

namespace {

UnimodularMap random_unimodular(std::size_t n, std::mt19937_64 &rng) {
    // Product of elementary matrices, a swap and a sign change.
    UnimodularMap u = UnimodularMap::identity(n);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> k(-2, 2);
    for (int step = 0; step < 6; ++step) {
        auto m = UnimodularMap::identity(n).rows();
        const std::size_t i = idx(rng), j = idx(rng);
        if (i == j) {
            m[i][i] = -1;
        } else {
            m[i][j] = k(rng);
        }
        u = UnimodularMap(m) * u;
    }
    return u;
}

}  // namespace

TEST_CASE("omega values") {
    CHECK(omega_ring(LaurentPoly(Ring::GF2, 1)).is_neg_infinity());
    CHECK(omega_ring(parse_poly("t^5", Ring::GF2)) == OmegaValue(0));
    CHECK(omega_ring(parse_poly("-3*t^-2", Ring::Rat)) == OmegaValue(0));
    CHECK(omega_ring(parse_poly("1 + t^2", Ring::GF2)) == OmegaValue(2));
    CHECK(omega_ring(parse_poly("1 + t^2", Ring::Rat)) == OmegaValue(1));
    CHECK(omega_ring(parse_poly("1 + z1^2*z2^3", Ring::Rat)) == OmegaValue(1));
    CHECK(omega_ring(parse_poly("1 - z1^2*z2^4", Ring::Rat)) == OmegaValue(2));
    CHECK_THROWS_AS((void)omega_ring(parse_poly("1 + z1 + z2", Ring::GF2)), Error);
    CHECK_THROWS_AS((void)omega_ring(parse_poly("1 + t", Ring::Int)), Error);
    CHECK((OmegaValue::neg_infinity() + OmegaValue(3)).is_neg_infinity());
    CHECK(OmegaValue::neg_infinity() < OmegaValue(0));
    CHECK(OmegaValue::neg_infinity().to_string() == "-inf");
}

TEST_CASE("omega of a module is omega of the gcd") {
    const LaurentPoly a = parse_poly("1 + t", Ring::GF2);
    const LaurentPoly b = parse_poly("1 + t + t^2", Ring::GF2);
    CHECK(omega_module({a * a * b, a * b * b}) == OmegaValue(2));
    CHECK(omega_module({a * b, LaurentPoly(Ring::GF2, 1)}) == OmegaValue(2));
    CHECK(omega_module({LaurentPoly(Ring::GF2, 1), LaurentPoly(Ring::GF2, 1)}).is_neg_infinity());
    CHECK(omega_module({a, b}) == OmegaValue(0));
    CHECK(omega_module({parse_poly("z1 + z2", Ring::Rat), parse_poly("z1^2 - z2^2", Ring::Rat)}) == OmegaValue(1));
    try {
        (void)omega_module({a, parse_poly("1 + t", Ring::Rat)});
        FAIL("expected MixedRings");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::MixedRings);
    }
}

TEST_CASE("omega is additive") {
    std::mt19937_64 rng(3);
    for (const Ring ring : {Ring::GF2, Ring::Rat}) {
        std::uniform_int_distribution<int> coeff(-3, 3);
        for (int trial = 0; trial < 80; ++trial) {
            auto random_poly = [&] {
                LaurentPoly p(ring, 1);
                const int deg = static_cast<int>(rng() % 13);
                for (int i = 0; i <= deg; ++i) p.add_term(Exponent{i}, coeff(rng));
                return p;
            };
            const LaurentPoly x = random_poly(), y = random_poly();
            CHECK(omega_ring(x * y) == omega_ring(x) + omega_ring(y));
        }
    }
}

TEST_CASE("unimodular maps") {
    const UnimodularMap u({{2, 1}, {1, 1}});
    CHECK(u.determinant() == 1);
    CHECK(u * u.inverse() == UnimodularMap::identity(2));
    CHECK_THROWS_AS(UnimodularMap({{2, 0}, {0, 1}}), Error);
    CHECK_THROWS_AS(UnimodularMap({{1, 0}}), Error);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> entry(-9, 9);
    int checked = 0;
    while (checked < 200) {
        Exponent v(1 + rng() % 4);
        for (auto &x : v) x = entry(rng);
        if (content(v) != 1) {
            if (content(v) > 1) CHECK_THROWS_AS((void)UnimodularMap::sending_to_e1(v), Error);
            continue;
        }
        const UnimodularMap m = UnimodularMap::sending_to_e1(v);
        Exponent e1(v.size(), 0);
        e1[0] = 1;
        CHECK(m.apply(v) == e1);
        CHECK(m.inverse().apply(e1) == v);
        ++checked;
    }
}

TEST_CASE("omega is invariant under unimodular changes of basis") {
    std::mt19937_64 rng(9);
    const LaurentPoly base = parse_poly("1 + t + t^2", Ring::GF2) * parse_poly("1 + t", Ring::GF2).pow(2);
    for (int trial = 0; trial < 50; ++trial) {
        const Exponent v{static_cast<std::int64_t>(1 + rng() % 3), 1, -2};
        const LaurentPoly p = substitute_monomial(base, v);
        const UnimodularMap u = random_unimodular(3, rng);
        CHECK(omega_ring(apply_unimodular(p, u)) == omega_ring(p));
    }
}

TEST_CASE("omega along a primitive vector") {
    const LaurentPoly delta = parse_poly("t^-1 + 1 + t", Ring::GF2);
    const SubstitutionCertificate c = omega_substituted(delta, {2, 3});
    CHECK(c.value == OmegaValue(1));
    CHECK(c.basis_change.apply({2, 3}) == Exponent{1, 0});
    CHECK(c.substituted == parse_poly("z1^-2*z2^-3 + 1 + z1^2*z2^3", Ring::GF2));
    for (const auto &[e, coeff] : c.reduced.terms()) CHECK(e[1] == 0);
    CHECK(omega_substituted(delta.pow(4), {0, 1}).value == OmegaValue(4));
    try {
        (void)omega_substituted(delta, {2, 4});
        FAIL("expected NonPrimitiveVector");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::NonPrimitiveVector);
    }
}

TEST_CASE("projective integrality") {
    PerturbedElement x(2, 3);
    CHECK(is_projectively_integral(x).value() == RationalExponent{0, 0});
    x.add_term({mpq_class(1, 3), mpq_class(-1, 2)}, 0);
    x.add_term({mpq_class(4, 3), mpq_class(1, 2)}, 2);
    const auto w = is_projectively_integral(x);
    REQUIRE(w.has_value());
    CHECK(*w == RationalExponent{mpq_class(1, 3), mpq_class(1, 2)});
    const auto coords = integral_coordinates(x);
    CHECK(coords[0] == parse_poly("z2^-1", Ring::GF2, 2));
    CHECK(coords[2] == parse_poly("z1", Ring::GF2, 2));
    CHECK(omega_perturbed(x) == OmegaValue(0));

    x.add_term({mpq_class(1, 3), mpq_class(-1, 2)}, 0);
    x.add_term({mpq_class(1, 5), 0}, 1);
    CHECK_FALSE(is_projectively_integral(x).has_value());
    CHECK_THROWS_AS((void)x.add_term({0, 0}, 3), Error);
}

TEST_CASE("perturbed elements under unimodular maps") {
    PerturbedElement x(2, 2);
    x.add_term({mpq_class(1, 2), 0}, 0);
    x.add_term({mpq_class(3, 2), 1}, 1);
    const UnimodularMap u({{1, 1}, {0, 1}});
    const PerturbedElement y = apply_unimodular(x, u, {{1, 1}, {0, 1}});
    CHECK(y.terms().size() == 3);
    CHECK(is_projectively_integral(y).has_value());
    CHECK_THROWS_AS((void)apply_unimodular(x, u, {{1, 1}, {1, 1}}), Error);
}
