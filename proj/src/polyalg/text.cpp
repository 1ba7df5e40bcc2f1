#include "rimfloer/polyalg/text.hpp"

#include "rimfloer/error.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <vector>

namespace rimfloer::polyalg {

namespace {

struct RawTerm {
    mpq_class coeff = 1;
    std::vector<std::pair<std::size_t, std::int64_t>> powers;  // (variable index, exponent)
};

class PolyParser {
  public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    std::vector<RawTerm> parse() {
        std::vector<RawTerm> out;
        skip();
        if (pos_ == s_.size()) fail("empty polynomial");
        bool negate = false;
        if (peek() == '-' || peek() == '+') negate = take() == '-';
        out.push_back(term(negate));
        for (skip(); pos_ < s_.size(); skip()) {
            const char op = take();
            if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'", pos_ - 1);
            skip();
            bool neg = op == '-';
            while (pos_ < s_.size() && (peek() == '-' || peek() == '+')) {
                if (take() == '-') neg = !neg;
                skip();
            }
            out.push_back(term(neg));
        }
        return out;
    }

  private:
    [[noreturn]] void fail(const std::string &msg, std::size_t at) const { throw ParseError(msg, at); }
    [[noreturn]] void fail(const std::string &msg) const { fail(msg, pos_); }

    char peek() const { return s_[pos_]; }
    char take() { return s_[pos_++]; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
        if (start == pos_) fail("expected a number");
        return std::string(s_.substr(start, pos_ - start));
    }

    std::int64_t integer() {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && peek() == '-') {
            neg = true;
            ++pos_;
        }
        const std::size_t at = pos_;
        const std::string d = digits();
        std::int64_t v = 0;
        const auto [p, ec] = std::from_chars(d.data(), d.data() + d.size(), v);
        if (ec != std::errc{}) fail("exponent out of range", at);
        return neg ? -v : v;
    }

    RawTerm term(bool negate) {
        RawTerm t;
        for (;;) {
            skip();
            if (pos_ == s_.size()) fail("expected a coefficient or variable");
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
                mpq_class v{mpz_class{digits()}};
                skip();
                if (pos_ < s_.size() && peek() == '/') {
                    ++pos_;
                    skip();
                    const std::size_t at = pos_;
                    mpz_class den{digits()};
                    if (den == 0) fail("zero denominator", at);
                    v /= den;
                }
                t.coeff *= v;
            } else if (c == 't' || c == 'z') {
                ++pos_;
                std::size_t var = 1;
                if (c == 'z') {
                    const std::size_t at = pos_;
                    const std::string d = digits();
                    var = std::stoul(d);
                    if (var == 0) fail("variable indices start at 1", at);
                }
                std::int64_t e = 1;
                skip();
                if (pos_ < s_.size() && peek() == '^') {
                    ++pos_;
                    e = integer();
                }
                t.powers.emplace_back(var, e);
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            skip();
            if (pos_ < s_.size() && peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (negate) t.coeff = -t.coeff;
        return t;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

std::string format_coeff(const mpq_class &c) { return c.get_str(); }

}  // namespace

LaurentPoly parse_poly(std::string_view text, Ring ring, std::size_t dim) {
    const auto raw = PolyParser(text).parse();
    std::size_t needed = 1;
    for (const auto &t : raw) {
        for (const auto &[var, e] : t.powers) needed = std::max(needed, var);
    }
    if (dim == 0) dim = needed;
    if (needed > dim) {
        throw Error(ErrorCode::DimensionMismatch, "variable z" + std::to_string(needed) +
                                                      " used in a polynomial of dimension " + std::to_string(dim));
    }
    LaurentPoly p(ring, dim);
    for (const auto &t : raw) {
        Exponent e(dim, 0);
        for (const auto &[var, k] : t.powers) e[var - 1] += k;
        p.add_term(e, t.coeff);
    }
    return p;
}

std::string format_poly(const LaurentPoly &p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto &[e, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += p.dim() == 1 ? std::string("t") : "z" + std::to_string(i + 1);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += format_coeff(c);
        } else if (c == 1) {
            out += mono;
        } else if (c == -1) {
            out += "-" + mono;
        } else {
            out += format_coeff(c) + "*" + mono;
        }
    }
    return out;
}

nlohmann::json to_json(const LaurentPoly &p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[e, c] : p.terms()) terms.push_back({{"exp", e}, {"coeff", c.get_str()}});
    return {{"ring", std::string(ring_name(p.ring()))}, {"dim", p.dim()}, {"terms", terms}};
}

LaurentPoly poly_from_json(const nlohmann::json &j, Ring fallback) {
    try {
        const Ring ring = j.contains("ring") ? parse_ring(j.at("ring").get<std::string>()) : fallback;
        LaurentPoly p(ring, j.at("dim").get<std::size_t>());
        for (const auto &t : j.at("terms")) {
            const auto &c = t.at("coeff");
            mpq_class v;
            if (c.is_string()) {
                if (v.set_str(c.get<std::string>(), 10) != 0) {
                    throw Error(ErrorCode::ParseError, "bad coefficient '" + c.get<std::string>() + "'");
                }
                v.canonicalize();
                if (v.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator");
            } else {
                v = mpq_class(mpz_class(c.get<long>()));
            }
            p.add_term(t.at("exp").get<Exponent>(), v);
        }
        return p;
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::ParseError, std::string("malformed polynomial JSON: ") + e.what());
    }
}

}  // namespace rimfloer::polyalg
