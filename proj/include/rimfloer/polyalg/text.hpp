#pragma once

#include "rimfloer/polyalg/laurent.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <string_view>

namespace rimfloer::polyalg {

/// Parses sums of terms c*z1^a1*z2^a2 (t is an alias for z1), e.g.
/// "t^-1 + -1 + t" or "3/2*z1*z2^-2 - z2". dim == 0 infers the dimension
/// from the largest variable index. Throws ParseError with a character offset.
[[nodiscard]] LaurentPoly parse_poly(std::string_view text, Ring ring, std::size_t dim = 0);

/// Inverse of parse_poly: ascending terms joined by " + ", variable t in one
/// variable and z1..zn otherwise.
[[nodiscard]] std::string format_poly(const LaurentPoly &p);

/// {"ring": "q", "dim": n, "terms": [{"exp": [...], "coeff": "p/q"}, ...]}
[[nodiscard]] nlohmann::json to_json(const LaurentPoly &p);
/// Accepts the to_json layout; "ring" may be omitted when fallback is given.
[[nodiscard]] LaurentPoly poly_from_json(const nlohmann::json &j, Ring fallback = Ring::Rat);

}  // namespace rimfloer::polyalg
