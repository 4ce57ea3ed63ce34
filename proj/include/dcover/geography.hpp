#pragma once

/// @file geography.hpp
/// Chern invariants of surfaces of general type in characteristic p: records,
/// the kappa_p bounds, the Raynaud and characteristic 3 families, and exact
/// inequality checks.

#include "dcover/exactmath/primes.hpp"
#include "dcover/exactmath/rational.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcover {

struct SurfaceInvariants {
    std::uint64_t p = 0;
    std::optional<std::uint64_t> q;  // genus of the base curve
    std::optional<std::uint64_t> g;  // arithmetic genus of a fibre
    BigInt K2 = 0;
    BigInt c2 = 0;
    BigInt chi = 0;
    std::optional<std::uint64_t> p_g;
    std::optional<std::uint64_t> irregularity;
};

/// 12 chi = K^2 + c_2.
inline bool noether_check(const SurfaceInvariants& s) { return 12 * s.chi == s.K2 + s.c2; }

/// c_2 >= -4(q - 1).
inline bool c2_floor_check(const SurfaceInvariants& s) {
    if (!s.q) throw std::invalid_argument("c2 floor check needs q");
    return s.c2 >= -4 * (BigInt(*s.q) - 1);
}

inline void require_prime_at_least(std::uint64_t p, std::uint64_t lo, const char* what) {
    if (p < lo || !is_prime(p)) {
        throw std::invalid_argument(std::string(what) + " needs a prime p >= " + std::to_string(lo) + ", got " +
                                    std::to_string(p));
    }
}

/// (p^2 - 4p - 1) / (4 (3p^2 - 8p - 3)).
inline Rational kappa_conjectural(std::uint64_t p) {
    require_prime_at_least(p, 5, "kappa_conjectural");
    const BigInt P = p;
    return Rational(P * P - 4 * P - 1, 4 * (3 * P * P - 8 * P - 3));
}

struct KappaLower {
    std::optional<Rational> value;  // absent for p = 3
    bool exact = false;             // true when value is kappa_p itself
    std::string note;
};

/// p = 3: positive only; p = 5: exactly 1/32; p >= 7: strict bound (p-7)/(12(p-3)).
inline KappaLower kappa_proven_lower(std::uint64_t p) {
    require_prime_at_least(p, 3, "kappa_proven_lower");
    if (p == 3) return {std::nullopt, false, "positive, no explicit value"};
    if (p == 5) return {Rational(1, 32), true, "exact value"};
    const BigInt P = p;
    return {Rational(P - 7, 12 * (P - 3)), false, "strict lower bound"};
}

struct KappaReport {
    std::uint64_t p = 0;
    std::optional<Rational> conjectural;
    KappaLower proven;
    Rational classical_char0{1, 9};
};

inline KappaReport kappa_report(std::uint64_t p) {
    KappaReport r;
    r.p = p;
    if (p >= 5) r.conjectural = kappa_conjectural(p);
    r.proven = kappa_proven_lower(p);
    return r;
}

/// Invariants of the Raynaud surfaces: chi = (p^2-4p-1) l/8,
/// K^2 = (3p^2-8p-3) l/2, q = pl/2 + 1, c_2 = -2pl, fibre genus (p-1)/2.
inline SurfaceInvariants raynaud_invariants(std::uint64_t p, std::uint64_t l) {
    require_prime_at_least(p, 5, "raynaud_invariants");
    const BigInt P = p;
    const BigInt a = P * P - 4 * P - 1;
    const BigInt b = 3 * P * P - 8 * P - 3;
    auto admissible = [&](std::uint64_t x) { return x % 2 == 0 && (a * x) % 8 == 0 && (b * x) % 2 == 0; };
    if (l == 0 || !admissible(l)) {
        std::string res;
        for (std::uint64_t r = 1; r <= 8; ++r) {
            if (admissible(r)) res += (res.empty() ? "" : ", ") + std::to_string(r % 8);
        }
        throw std::invalid_argument("raynaud_invariants: l=" + std::to_string(l) +
                                    " is not admissible (need l > 0 with l mod 8 in {" + res + "})");
    }
    SurfaceInvariants s;
    s.p = p;
    s.chi = a * l / 8;
    s.K2 = b * l / 2;
    s.c2 = 12 * s.chi - s.K2;
    s.q = p * l / 2 + 1;
    s.g = (p - 1) / 2;
    if (s.c2 != -2 * P * l) throw std::logic_error("raynaud_invariants: c2 != -2pl");
    if (!noether_check(s)) throw std::logic_error("raynaud_invariants: Noether formula fails");
    return s;
}

/// The three smallest admissible l for p.
inline std::vector<std::uint64_t> raynaud_admissible_l(std::uint64_t p, std::size_t count = 3) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t l = 1; out.size() < count; ++l) {
        try {
            raynaud_invariants(p, l);
            out.push_back(l);
        } catch (const std::invalid_argument&) {
        }
    }
    return out;
}

struct Char3Example {
    BigInt q_minus_1;
    BigInt m;
    BigInt c2_upper;  // -4(q-1) + 3m
};

inline Char3Example char3_example(unsigned n) {
    if (n < 2) throw std::invalid_argument("char3_example needs n >= 2");
    BigInt t = 1;
    for (unsigned i = 0; i < n; ++i) t *= 3;
    Char3Example e;
    e.q_minus_1 = (t - 1) * (t - 4) / 2;
    e.m = t - 1;
    e.c2_upper = -4 * e.q_minus_1 + 3 * e.m;
    return e;
}

struct CanonicalMapBounds {
    Rational g_max;
    std::optional<Rational> d_max;  // needs p_g >= 3
};

/// g <= 1 + (p_g + 2)/(2 kappa (p_g - 1)) and d <= (p_g + 1)/(kappa (p_g - 2)).
inline CanonicalMapBounds canonical_map_bounds(std::uint64_t p, std::uint64_t p_g, const Rational& kappa,
                                               bool want_degree = true) {
    require_prime_at_least(p, 3, "canonical_map_bounds");
    if (kappa.sign() <= 0) throw std::invalid_argument("canonical_map_bounds needs kappa > 0");
    if (p_g < 2) throw std::invalid_argument("canonical_map_bounds needs p_g >= 2");
    const BigInt pg = p_g;
    CanonicalMapBounds out{Rational(1) + Rational(pg + 2) / (Rational(2) * kappa * Rational(pg - 1)), std::nullopt};
    if (want_degree) {
        if (p_g == 2) throw std::invalid_argument("degree bound needs p_g >= 3 (p_g - 2 = 0 in the denominator)");
        out.d_max = Rational(pg + 1) / (kappa * Rational(pg - 2));
    }
    return out;
}

struct InequalityReport {
    bool applicable = true;
    bool pass = false;
    Rational slack;  // left side minus right side
    std::string note;
};

/// K^2 > 4(g-1)(q-1)/3 for p >= 3, g >= 3.
inline InequalityReport sb_lower_bound_check(const SurfaceInvariants& s) {
    if (!s.g || !s.q) return {false, false, Rational(0), "not applicable: g and q required"};
    if (*s.g < 3) return {false, false, Rational(0), "not applicable: g < 3"};
    if (s.p < 3) return {false, false, Rational(0), "not applicable: p < 3"};
    const Rational rhs(4 * (BigInt(*s.g) - 1) * (BigInt(*s.q) - 1), BigInt(3));
    const Rational slack = Rational(s.K2) - rhs;
    return {true, slack.sign() > 0, slack, ""};
}

/// K.B >= (sqrt(lambda^2 + 8 r lambda) - lambda)(q - 1)/2 with lambda = K^2/(q-1),
/// decided by squaring: u = 2 K.B/(q-1) + lambda must satisfy u >= 0 and
/// u^2 >= lambda^2 + 8 r lambda.
inline bool intersection_floor_check(const Rational& lambda, std::uint64_t r, const BigInt& KB, std::uint64_t q) {
    if (lambda.sign() <= 0) throw std::invalid_argument("intersection floor check needs lambda > 0");
    if (q < 2) throw std::invalid_argument("intersection floor check needs q >= 2");
    const Rational u = Rational(2 * KB, BigInt(q) - 1) + lambda;
    if (u.sign() < 0) return false;
    return u * u >= lambda * lambda + Rational(8 * BigInt(r)) * lambda;
}

enum class CliffordCase { case1, case2, inconsistent };

inline std::string to_string(CliffordCase c) {
    switch (c) {
        case CliffordCase::case1: return "case1";
        case CliffordCase::case2: return "case2";
        case CliffordCase::inconsistent: return "inconsistent";
    }
    return "?";
}

/// Riemann-Roch range (deg D > 2(q-1), h0 = deg D - q + 1) or Clifford range
/// (2(h0 - 1) <= deg D <= 2(q-1)).
inline CliffordCase clifford_case(std::uint64_t deg_d, std::uint64_t h0, std::uint64_t q) {
    const BigInt d = deg_d;
    const BigInt two_q = 2 * (BigInt(q) - 1);
    if (d > two_q && d == BigInt(h0) + q - 1) return CliffordCase::case1;
    if (2 * (BigInt(h0) - 1) <= d && d <= two_q) return CliffordCase::case2;
    return CliffordCase::inconsistent;
}

/// deg_K(Delta) = 2pg/(p-1), for (p-1) | 2g and g < (p^2-1)/2.
inline Rational delta_degree(std::uint64_t g, std::uint64_t p) {
    require_prime_at_least(p, 3, "delta_degree");
    if ((2 * g) % (p - 1) != 0) throw std::invalid_argument("delta_degree needs (p-1) | 2g");
    if (2 * g >= p * p - 1) throw std::invalid_argument("delta_degree needs g < (p^2-1)/2");
    return Rational(BigInt(2 * p * g), BigInt(p - 1));
}

/// Reference inequalities that hold in characteristic 0 only.
struct Char0Reference {
    bool bmy = false;      // 3 c_2 >= c_1^2
    bool noether = false;  // 5 c_1^2 - c_2 + 36 >= 0
    std::string tag = "char-0 only";
};

inline Char0Reference char0_reference_checks(const SurfaceInvariants& s) {
    return {3 * s.c2 >= s.K2, 5 * s.K2 - s.c2 + 36 >= 0, "char-0 only"};
}

inline nlohmann::ordered_json to_json(const SurfaceInvariants& s) {
    nlohmann::ordered_json j;
    j["p"] = s.p;
    if (s.q) j["q"] = *s.q;
    if (s.g) j["g"] = *s.g;
    j["K2"] = s.K2.convert_to<long long>();
    j["c2"] = s.c2.convert_to<long long>();
    j["chi"] = s.chi.convert_to<long long>();
    if (s.p_g) j["p_g"] = *s.p_g;
    if (s.irregularity) j["irregularity"] = *s.irregularity;
    return j;
}

}  // namespace dcover
