#pragma once

#include "dcover/exactmath/rational.hpp"

#include <cstdint>
#include <string>

namespace dcover {

/// The field Q with the same interface as GaloisField.
class RationalField {
public:
    using Elem = Rational;

    std::uint64_t characteristic() const noexcept { return 0; }
    unsigned degree() const noexcept { return 1; }
    bool is_finite() const noexcept { return false; }
    std::string name() const { return "Q"; }

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem from_int(long long v) const { return Rational(v); }
    Elem from_bigint(const BigInt& v) const { return Rational(v); }

    bool is_zero(const Elem& a) const noexcept { return a.is_zero(); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    bool less(const Elem& a, const Elem& b) const { return a < b; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const { return a.inverse(); }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }

    std::string to_string(const Elem& a) const { return a.str(); }

    friend bool operator==(const RationalField&, const RationalField&) noexcept { return true; }
};

}  // namespace dcover
