#pragma once

/// @file genus_change.hpp
/// Integer identities for genus change under inseparable base extension and
/// for flat double covers.

#include "dcover/exactmath/primes.hpp"
#include "dcover/exactmath/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcover {

struct GenusChangeRecord {
    std::uint64_t p = 3;
    std::uint64_t g_upper = 0;  // genus of S
    std::uint64_t g_lower = 0;  // genus of the normalized descent Y

    void validate() const {
        require_odd_prime(p, "genus change");
        if (g_upper < g_lower) throw std::invalid_argument("genus change: g(S) < g(Y)");
    }
    std::uint64_t drop() const { return g_upper - g_lower; }
};

/// (p - 1) | 2 (g(S) - g(Y)).
inline bool tate_divisibility(const GenusChangeRecord& r) {
    r.validate();
    return (2 * r.drop()) % (r.p - 1) == 0;
}

/// deg det(A) = 2p (g(S) - g(Y)) / (p - 1).
inline std::uint64_t torsion_degree(const GenusChangeRecord& r) {
    if (!tate_divisibility(r)) {
        throw std::invalid_argument("torsion degree: p-1 = " + std::to_string(r.p - 1) + " does not divide 2*" +
                                    std::to_string(r.drop()));
    }
    return 2 * r.p * r.drop() / (r.p - 1);
}

/// Torsion degree for a curve whose descent is a smooth conic:
/// 2pg/(p-1), for 0 < g < (p^2-1)/2 with 2g >= p-1.
inline std::uint64_t rational_curve_torsion(std::uint64_t g, std::uint64_t p) {
    require_odd_prime(p, "rational curve torsion");
    if (g == 0 || 2 * g >= p * p - 1) {
        throw std::invalid_argument("rational curve torsion needs 0 < g < (p^2-1)/2 = " +
                                    Rational(BigInt(p * p - 1), BigInt(2)).str());
    }
    if (2 * g < p - 1) throw std::invalid_argument("rational curve torsion needs 2g >= p-1");
    return torsion_degree({p, g, 0});
}

/// Successive genus drops shrink by a factor p: p (g_i - g_{i+1}) <= g_{i-1} - g_i.
inline bool tower_monotonicity(const std::vector<std::uint64_t>& genera, std::uint64_t p) {
    require_odd_prime(p, "genus tower");
    if (genera.size() < 3) throw std::invalid_argument("genus tower needs at least three genera");
    for (std::size_t i = 1; i + 1 < genera.size(); ++i) {
        const BigInt before = BigInt(genera[i - 1]) - BigInt(genera[i]);
        const BigInt after = BigInt(genera[i]) - BigInt(genera[i + 1]);
        if (after * p > before) return false;
    }
    return true;
}

enum class Membership { yes, no, unknown };

inline std::string to_string(Membership m) {
    switch (m) {
        case Membership::yes: return "yes";
        case Membership::no: return "no";
        case Membership::unknown: return "unknown at this bound";
    }
    return "?";
}

struct QuasiHyperellipticResult {
    Membership status = Membership::unknown;
    unsigned i = 0;  // witness 2g + 2 = p^i + p^j when status is yes
    unsigned j = 0;
};

/// Whether 2g + 2 = p^i + p^j for some 0 <= i <= j <= exponent_bound. A miss
/// is "no" only when every larger exponent is already out of reach.
inline QuasiHyperellipticResult quasi_hyperelliptic_genus_ok(std::uint64_t g, std::uint64_t p,
                                                            unsigned exponent_bound = 12) {
    require_odd_prime(p, "quasi-hyperelliptic genus");
    if (exponent_bound < 1) throw std::invalid_argument("exponent bound must be at least 1");
    const BigInt target = BigInt(2) * g + 2;
    std::vector<BigInt> pw{1};
    for (unsigned e = 1; e <= exponent_bound + 1; ++e) pw.push_back(pw.back() * p);
    for (unsigned j = 0; j <= exponent_bound; ++j) {
        for (unsigned i = 0; i <= j; ++i) {
            if (pw[i] + pw[j] == target) return {Membership::yes, i, j};
        }
    }
    if (target < pw[exponent_bound + 1] + 1) return {Membership::no, 0, 0};
    return {Membership::unknown, 0, 0};
}

/// p_a(S) = 2 p_a(Y) - 1 + deg(B)/2.
inline long long double_cover_curve_genus(std::uint64_t g_base, std::uint64_t deg_branch) {
    if (deg_branch % 2 != 0) throw std::invalid_argument("branch degree must be even");
    return 2 * static_cast<long long>(g_base) - 1 + static_cast<long long>(deg_branch / 2);
}

struct ChiValue {
    Rational value;
    bool integral = true;
};

/// chi(O_S) = 2 chi(O_Y) + (B^2 + 2 B.K_Y)/8, flagged when not an integer.
inline ChiValue double_cover_surface_chi(long long chi_base, long long b_sq, long long b_dot_k) {
    const Rational v = Rational(2 * BigInt(chi_base)) + Rational(BigInt(b_sq) + 2 * BigInt(b_dot_k), BigInt(8));
    return {v, v.is_integer()};
}

}  // namespace dcover
