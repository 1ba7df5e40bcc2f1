#include "rimfloer/polyalg/ring.hpp"

#include "rimfloer/error.hpp"

namespace rimfloer::polyalg {

std::string_view ring_name(Ring ring) noexcept {
    switch (ring) {
        case Ring::GF2: return "f2";
        case Ring::Int: return "z";
        case Ring::Rat: return "q";
    }
    return "?";
}

Ring parse_ring(std::string_view text) {
    if (text == "f2" || text == "gf2" || text == "F2" || text == "GF2") return Ring::GF2;
    if (text == "z" || text == "int" || text == "Z") return Ring::Int;
    if (text == "q" || text == "rat" || text == "Q") return Ring::Rat;
    throw Error(ErrorCode::InvalidArgument, "unknown ring '" + std::string(text) + "' (expected f2, z or q)");
}

mpq_class normalize_in(Ring ring, const mpq_class &value) {
    if (ring == Ring::Rat) {
        mpq_class v = value;
        v.canonicalize();
        return v;
    }
    if (value.get_den() != 1) {
        throw Error(ErrorCode::UnsupportedRing,
                    "non-integral coefficient " + value.get_str() + " in ring " + std::string(ring_name(ring)));
    }
    if (ring == Ring::Int) return value;
    mpz_class r = value.get_num() % 2;
    if (r < 0) r += 2;
    return mpq_class(r);
}

bool Coefficient::is_unit() const {
    if (ring_ == Ring::Int) return value_ == 1 || value_ == -1;
    return value_ != 0;
}

}  // namespace rimfloer::polyalg
