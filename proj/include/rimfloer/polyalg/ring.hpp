#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rimfloer::polyalg {

/// Coefficient ring of a polynomial. GF2 is the default field for every
/// Floer-theoretic quantity; Int and Rat host Alexander polynomials.
enum class Ring { GF2, Int, Rat };

[[nodiscard]] std::string_view ring_name(Ring ring) noexcept;
/// Accepts "f2"/"gf2", "z"/"int", "q"/"rat".
[[nodiscard]] Ring parse_ring(std::string_view text);

/// Brings an exact rational into the canonical form for `ring`: reduced mod 2
/// for GF2, required integral for GF2 and Int. Throws UnsupportedRing when a
/// non-integral value is forced into GF2 or Int.
[[nodiscard]] mpq_class normalize_in(Ring ring, const mpq_class &value);

/// A ring-tagged exact scalar.
class Coefficient {
  public:
    Coefficient(Ring ring, const mpq_class &value) : ring_(ring), value_(normalize_in(ring, value)) {}

    [[nodiscard]] Ring ring() const noexcept { return ring_; }
    [[nodiscard]] const mpq_class &value() const noexcept { return value_; }
    [[nodiscard]] bool is_zero() const { return value_ == 0; }
    /// Invertible in the ring: nonzero for fields, +-1 for Int.
    [[nodiscard]] bool is_unit() const;
    [[nodiscard]] std::string to_string() const { return value_.get_str(); }

    friend bool operator==(const Coefficient &a, const Coefficient &b) {
        return a.ring_ == b.ring_ && a.value_ == b.value_;
    }

  private:
    Ring ring_;
    mpq_class value_;
};

}  // namespace rimfloer::polyalg
