#pragma once

/// @file parser.hpp
/// Polynomial expressions in x and t with integer coefficients, and field
/// specs "Q", "F<p>" or "F<p>^<k>".
///
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' integer)?
///   atom   := integer | 'x' | 't' | '(' expr ')'

#include "dcover/exactmath/bivariate.hpp"
#include "dcover/exactmath/galois_field.hpp"
#include "dcover/exactmath/primes.hpp"
#include "dcover/exactmath/rational_field.hpp"

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace dcover {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

class ExprParser {
public:
    using Poly = BivariatePoly<RationalField>;
    static constexpr unsigned kMaxExponent = 4096;

    explicit ExprParser(std::string_view s) : s_(s) {}

    Poly parse() {
        skip_ws();
        if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
        Poly r = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return r;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly r = term();
        for (;;) {
            if (eat('+')) {
                r += term();
            } else if (eat('-')) {
                r -= term();
            } else {
                return r;
            }
        }
    }
    Poly term() {
        Poly r = unary();
        while (eat('*')) r *= unary();
        return r;
    }
    Poly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    Poly power() {
        Poly base = atom();
        if (!eat('^')) return base;
        skip_ws();
        const std::size_t at = pos_;
        const BigInt e = integer();
        if (e > kMaxExponent) throw ParseError("exponent too large", at);
        return base.pow(static_cast<unsigned>(e));
    }
    Poly atom() {
        skip_ws();
        if (pos_ == s_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = s_[pos_];
        if (c == 'x') {
            ++pos_;
            return Poly::x(field_);
        }
        if (c == 't') {
            ++pos_;
            return Poly::t(field_);
        }
        if (c == '(') {
            ++pos_;
            Poly r = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(field_, Rational(integer()));
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }
    BigInt integer() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", pos_);
        return BigInt(std::string(s_.substr(start, pos_ - start)));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    RationalField field_;
};

}  // namespace detail

/// Parses an integer-coefficient polynomial in x, t.
inline BivariatePoly<RationalField> parse_polynomial(std::string_view text) {
    return detail::ExprParser(text).parse();
}

/// Reduces an integer-coefficient polynomial into F_{p^k}.
inline BivariatePoly<GaloisField> reduce_mod(const BivariatePoly<RationalField>& f, const GaloisField& field) {
    return f.mapped(field, [&](const Rational& c) {
        if (!c.is_integer()) throw std::invalid_argument("non-integral coefficient " + c.str());
        return field.from_bigint(c.num());
    });
}

using AnyField = std::variant<RationalField, GaloisField>;

/// "Q", "F<p>" or "F<p>^<k>" with p an odd prime.
inline AnyField parse_field_spec(std::string_view spec) {
    if (spec == "Q") return RationalField{};
    auto fail = [&]() -> AnyField {
        throw std::invalid_argument("bad field spec '" + std::string(spec) + "' (expected Q, F<p> or F<p>^<k>)");
    };
    if (spec.size() < 2 || spec[0] != 'F') return fail();
    std::size_t i = 1;
    auto number = [&]() -> std::uint64_t {
        const std::size_t start = i;
        std::uint64_t v = 0;
        while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) {
            if (v > 1'000'000'000ULL) fail();
            v = v * 10 + static_cast<std::uint64_t>(spec[i] - '0');
            ++i;
        }
        if (start == i) fail();
        return v;
    };
    const std::uint64_t p = number();
    std::uint64_t k = 1;
    if (i < spec.size()) {
        if (spec[i] != '^') return fail();
        ++i;
        k = number();
    }
    if (i != spec.size() || k == 0 || k > 64) return fail();
    require_odd_prime(p, "field characteristic");
    return GaloisField::get(p, static_cast<unsigned>(k));
}

inline std::string field_name(const AnyField& f) {
    return std::visit([](const auto& g) { return g.name(); }, f);
}

}  // namespace dcover
