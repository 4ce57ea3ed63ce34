#pragma once

/// @file xi_calc.hpp
/// Closed forms for xi: the family y^2 = x^a t^b (x^m - t^n) and the four
/// singularity classes of a hyperelliptic fibration, driven by the
/// ramification type of the local function.

#include "dcover/exactmath/primes.hpp"
#include "dcover/exactmath/rational.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcover {

struct FamilyParams {
    unsigned a = 0;
    unsigned b = 0;
    std::uint64_t m = 1;
    std::uint64_t n = 1;
};

inline void validate_family(const FamilyParams& f) {
    if (f.a > 1 || f.b > 1) throw std::invalid_argument("family: a and b must be 0 or 1");
    if (f.m == 0 || f.n == 0) throw std::invalid_argument("family: m and n must be positive");
    if (std::gcd(f.m, f.n) != 1) {
        throw std::invalid_argument("family: gcd(m, n) = " + std::to_string(std::gcd(f.m, f.n)) + " != 1");
    }
}

/// xi(a, b, m, n) by the Euclidean descent on (m, n).
inline long long xi_family(FamilyParams f) {
    validate_family(f);
    long long acc = 0;
    while (f.m != 1 && f.n != 1) {
        const bool m_big = f.m > f.n;
        const long long s = static_cast<long long>(f.a + f.b + (m_big ? f.n : f.m));
        const bool even = s % 2 == 0;
        acc += even ? s * (s - 2) / 8 : (s - 1) * (s - 3) / 8;
        if (m_big) {
            f.a = even ? 0 : 1;
            f.m -= f.n;
        } else {
            f.b = even ? 0 : 1;
            f.n -= f.m;
        }
    }
    return acc;
}

/// Upper bound (m-1)^2(n-1)/(8m) + (m-1)n a/(4m) + (m-1) b/4, for odd m.
inline Rational xi_bound_family(const FamilyParams& f) {
    validate_family(f);
    if (f.m % 2 == 0) throw std::invalid_argument("xi bound needs m odd");
    const BigInt m = f.m;
    const BigInt n = f.n;
    return Rational((m - 1) * (m - 1) * (n - 1), 8 * m) + Rational((m - 1) * n * f.a, 4 * m) +
           Rational((m - 1) * f.b, BigInt(4));
}

enum class SingularityClass { I, II, III, IV };

inline unsigned class_a(SingularityClass c) { return c == SingularityClass::III || c == SingularityClass::IV; }
inline unsigned class_b(SingularityClass c) { return c == SingularityClass::II || c == SingularityClass::IV; }

inline std::string to_string(SingularityClass c) {
    switch (c) {
        case SingularityClass::I: return "I";
        case SingularityClass::II: return "II";
        case SingularityClass::III: return "III";
        case SingularityClass::IV: return "IV";
    }
    return "?";
}

inline SingularityClass parse_class(const std::string& s) {
    if (s == "I") return SingularityClass::I;
    if (s == "II") return SingularityClass::II;
    if (s == "III") return SingularityClass::III;
    if (s == "IV") return SingularityClass::IV;
    throw std::invalid_argument("unknown singularity class '" + s + "'");
}

struct RamificationType {
    enum class Kind { tame, wild };
    Kind kind = Kind::tame;
    std::uint64_t R = 0;
    std::uint64_t j = 0;  // wild only: v(s) = p j

    static RamificationType tame(std::uint64_t R) { return {Kind::tame, R, 0}; }
    static RamificationType wild(std::uint64_t j, std::uint64_t R) { return {Kind::wild, R, j}; }

    bool is_wild() const noexcept { return kind == Kind::wild; }

    /// Violations of the type invariants at characteristic p; empty when consistent.
    std::vector<std::string> violations(std::uint64_t p) const {
        std::vector<std::string> v;
        if (kind == Kind::tame) {
            if ((R + 1) % p == 0) v.push_back("tame type needs p not dividing R+1 (R=" + std::to_string(R) + ")");
        } else {
            if (j == 0) v.push_back("wild type needs j >= 1");
            if (R < p * j) v.push_back("wild type needs R >= p*j (R=" + std::to_string(R) + ", p*j=" + std::to_string(p * j) + ")");
        }
        return v;
    }

    /// Combinations that satisfy the invariants but reach no tame base in the
    /// descent (residual R = p-1 mod p after peeling off p*j).
    std::vector<std::string> flags(std::uint64_t p) const {
        std::vector<std::string> f;
        if (kind == Kind::wild && R >= p * j && (R + 1) % p == 0) {
            f.push_back("wild residual R - p*j = " + std::to_string(R - p * j) + " is -1 mod p");
        }
        return f;
    }

    std::string str() const {
        if (kind == Kind::tame) return "tame R=" + std::to_string(R);
        return "wild j=" + std::to_string(j) + " R=" + std::to_string(R);
    }
};

namespace detail {

inline void require_xi_type_args(const RamificationType& lambda, std::uint64_t p) {
    if (p < 5 || !is_prime(p)) throw std::invalid_argument("xi_type needs a prime p >= 5, got " + std::to_string(p));
    const auto v = lambda.violations(p);
    if (!v.empty()) throw std::invalid_argument("inconsistent ramification type: " + v.front());
    const auto f = lambda.flags(p);
    if (!f.empty()) throw std::invalid_argument("ramification type has no tame base: " + f.front());
}

/// Classes I and II (b selects II) depend on R only.
inline long long xi_first_pair(unsigned b, std::uint64_t R, std::uint64_t p) {
    const auto pl = static_cast<long long>(p);
    long long acc = 0;
    while (R >= p) {
        acc += b == 0 ? (pl - 1) * (pl - 3) / 8 : (pl - 1) * (pl + 1) / 8;
        b = 1 - b;
        R -= p;
    }
    return acc + xi_family({0, b, p, R + 1});
}

}  // namespace detail

inline long long xi_type(SingularityClass c, const RamificationType& lambda, std::uint64_t p) {
    detail::require_xi_type_args(lambda, p);
    const unsigned b = class_b(c);
    if (class_a(c) == 0) return detail::xi_first_pair(b, lambda.R, p);
    const auto pl = static_cast<long long>(p);
    const long long step = (pl - 1) * (pl + 1) / 8;
    long long acc = 0;
    std::uint64_t R = lambda.R;
    if (!lambda.is_wild()) {
        while (R >= p) {
            acc += step;
            R -= p;
        }
        return acc + xi_family({1, b, p, R + 1});
    }
    // Wild: v(e) = p j. Each peel lowers j; at j = 1 the point drops to class I or II.
    for (std::uint64_t j = lambda.j; j >= 1; --j) {
        acc += step;
        R -= p;
    }
    return acc + detail::xi_first_pair(b, R, p);
}

/// Left side minus right side of the xi inequality for the class; non-negative.
inline Rational xi_inequality_slack(SingularityClass c, const RamificationType& lambda, std::uint64_t p) {
    const Rational xi(xi_type(c, lambda, p));
    const BigInt P = p;
    const BigInt R = lambda.R;
    const Rational extra_b = class_b(c) ? Rational(P - 1, BigInt(4)) : Rational(0);
    if (class_a(c) == 0) return Rational((P - 1) * (P - 1) * R, 8 * P) - xi + extra_b;
    if (!lambda.is_wild()) {
        return Rational((P * P - 1) * R, 8 * P) - xi + Rational(P - 1, 4 * P) + extra_b;
    }
    return Rational((P - 1) * (P - 1) * R, 8 * P) - xi + Rational((P - 1) * lambda.j, BigInt(4)) + extra_b;
}

}  // namespace dcover
