#pragma once

/// @file rational_roots.hpp
/// Rational roots of polynomials over Q via the rational root test on each
/// squarefree part. The rest of each part is returned unsplit.

#include "dcover/exactmath/factor.hpp"
#include "dcover/exactmath/rational_field.hpp"
#include "dcover/exactmath/univariate.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dcover {

struct RationalRootSplit {
    std::vector<std::pair<Rational, unsigned>> roots;  // ascending
    /// Monic part without rational roots, per multiplicity.
    std::vector<std::pair<UPoly<RationalField>, unsigned>> irrational;
};

namespace detail {

inline std::vector<BigInt> positive_divisors(BigInt n) {
    if (n < 0) n = -n;
    if (n == 0) throw std::domain_error("divisors of zero");
    if (n > BigInt(1'000'000'000'000LL)) {
        throw std::domain_error("rational root search: coefficient " + n.str() + " too large to factor");
    }
    auto v = static_cast<std::uint64_t>(n);
    std::vector<std::pair<std::uint64_t, unsigned>> pf;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        unsigned e = 0;
        while (v % d == 0) {
            v /= d;
            ++e;
        }
        if (e > 0) pf.emplace_back(d, e);
    }
    if (v > 1) pf.emplace_back(v, 1);
    std::vector<BigInt> divs{1};
    for (auto [q, e] : pf) {
        const std::size_t n0 = divs.size();
        BigInt pw = 1;
        for (unsigned i = 0; i < e; ++i) {
            pw *= q;
            for (std::size_t j = 0; j < n0; ++j) divs.push_back(divs[j] * pw);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace detail

inline RationalRootSplit rational_roots(const UPoly<RationalField>& f) {
    if (f.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
    RationalRootSplit out;
    for (const auto& [part, mult] : squarefree_univariate(f)) {
        UPoly<RationalField> g = part;
        if (g.coeff(0).is_zero()) {
            out.roots.emplace_back(Rational(0), mult);
            g = g.exact_div(UPoly<RationalField>::linear(g.field(), Rational(0)));
        }
        if (g.degree() > 0) {
            BigInt lcm = 1;
            for (const auto& c : g.coeffs()) lcm = lcm / big_gcd(lcm, c.den()) * c.den();
            const BigInt a0 = (g.coeff(0) * Rational(lcm)).to_integer();
            const BigInt an = (g.lead() * Rational(lcm)).to_integer();
            const auto num_divs = detail::positive_divisors(a0);
            const auto den_divs = detail::positive_divisors(an);
            std::vector<Rational> cands;
            for (const auto& r : num_divs) {
                for (const auto& s : den_divs) {
                    cands.emplace_back(r, s);
                    cands.emplace_back(-r, s);
                }
            }
            std::sort(cands.begin(), cands.end());
            cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
            for (const auto& c : cands) {
                if (g.degree() <= 0) break;
                if (g.eval(c).is_zero()) {
                    out.roots.emplace_back(c, mult);
                    g = g.exact_div(UPoly<RationalField>::linear(g.field(), c));
                }
            }
        }
        if (g.degree() > 0) out.irrational.emplace_back(g.monic(), mult);
    }
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

}  // namespace dcover
