#pragma once

/// @file factor.hpp
/// Univariate factorization over F_{p^k}: squarefree split, distinct-degree
/// split, then Cantor-Zassenhaus equal-degree splitting driven by a seeded
/// std::mt19937_64. The result is sorted, so it does not depend on the seed.

#include "dcover/exactmath/galois_field.hpp"
#include "dcover/exactmath/rational_field.hpp"
#include "dcover/exactmath/univariate.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <random>
#include <tuple>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dcover {

struct FactorConfig {
    std::uint64_t seed = 0x5eedf00dULL;
};

template <CoefficientField F>
struct PolyFactor {
    UPoly<F> factor;
    unsigned multiplicity = 1;
};

namespace detail {

/// g with g^p == f for f whose exponents are all multiples of p.
inline UPoly<GaloisField> poly_pth_root(const UPoly<GaloisField>& f) {
    const GaloisField& F = f.field();
    const std::uint64_t p = F.characteristic();
    std::vector<std::uint64_t> r(static_cast<std::size_t>(f.degree()) / p + 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i] == 0) continue;
        if (i % p != 0) throw std::logic_error("poly_pth_root: not a p-th power");
        r[i / p] = F.pth_root(f.coeffs()[i]);
    }
    return UPoly<GaloisField>(F, std::move(r));
}

template <CoefficientField F>
void sort_factors(std::vector<PolyFactor<F>>& v) {
    std::sort(v.begin(), v.end(), [](const PolyFactor<F>& a, const PolyFactor<F>& b) {
        if (canonical_less(a.factor, b.factor)) return true;
        if (canonical_less(b.factor, a.factor)) return false;
        return a.multiplicity < b.multiplicity;
    });
}

}  // namespace detail

/// Squarefree decomposition f = lc * prod g_i^i with monic, squarefree,
/// pairwise coprime g_i. Works in characteristic 0 and over F_{p^k}.
template <CoefficientField F>
std::vector<PolyFactor<F>> squarefree_univariate(const UPoly<F>& f) {
    if (f.is_zero()) throw std::domain_error("squarefree decomposition of the zero polynomial");
    std::vector<PolyFactor<F>> out;
    if (f.degree() == 0) return out;
    UPoly<F> g = f.monic();
    const UPoly<F> dg = g.derivative();
    UPoly<F> u = dg.is_zero() ? g : gcd(g, dg);
    UPoly<F> w = g.exact_div(u);
    unsigned i = 1;
    while (w.degree() > 0) {
        UPoly<F> y = gcd(w, u);
        UPoly<F> z = w.exact_div(y);
        if (z.degree() > 0) out.push_back({z, i});
        ++i;
        w = y;
        u = u.exact_div(y);
    }
    if (u.degree() > 0) {
        if constexpr (std::same_as<F, GaloisField>) {
            const auto p = static_cast<unsigned>(f.field().characteristic());
            for (auto& [h, e] : squarefree_univariate(detail::poly_pth_root(u))) out.push_back({h, e * p});
        } else {
            throw std::logic_error("squarefree_univariate: residual p-th power in characteristic 0");
        }
    }
    detail::sort_factors(out);
    return out;
}

namespace detail {

/// Distinct-degree split of a monic squarefree f: pairs (product of all
/// irreducible factors of degree d, d).
inline std::vector<std::pair<UPoly<GaloisField>, unsigned>> distinct_degree(UPoly<GaloisField> f) {
    const GaloisField& F = f.field();
    std::vector<std::pair<UPoly<GaloisField>, unsigned>> out;
    const UPoly<GaloisField> x = UPoly<GaloisField>::monomial(F, F.one(), 1);
    UPoly<GaloisField> h = x;
    unsigned d = 0;
    while (f.degree() >= 2 * static_cast<long>(d + 1)) {
        ++d;
        h = powmod(h, BigInt(F.order()), f);
        UPoly<GaloisField> g = gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f.exact_div(g);
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
    return out;
}

/// Splits a monic squarefree f whose irreducible factors all have degree d.
inline void equal_degree(const UPoly<GaloisField>& f, unsigned d, std::mt19937_64& rng,
                         std::vector<UPoly<GaloisField>>& out) {
    if (f.degree() == static_cast<long>(d)) {
        out.push_back(f);
        return;
    }
    const GaloisField& F = f.field();
    BigInt qd = 1;
    for (unsigned i = 0; i < d; ++i) qd *= F.order();
    const BigInt e = (qd - 1) / 2;
    const UPoly<GaloisField> one = UPoly<GaloisField>::constant(F, F.one());
    for (;;) {
        std::vector<std::uint64_t> a(static_cast<std::size_t>(f.degree()), 0);
        for (auto& c : a) c = F.random(rng);
        UPoly<GaloisField> r(F, std::move(a));
        if (r.degree() < 1) continue;
        UPoly<GaloisField> g = gcd(r, f);
        if (g.degree() == 0) g = gcd(powmod(r, e, f) - one, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f.exact_div(g), d, rng, out);
            return;
        }
    }
}

}  // namespace detail

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by degree then coefficients. The leading coefficient is dropped.
inline std::vector<PolyFactor<GaloisField>> factor_univariate(const UPoly<GaloisField>& f,
                                                               const FactorConfig& cfg = {}) {
    if (f.is_zero()) throw std::domain_error("factor_univariate: zero polynomial");
    std::mt19937_64 rng(cfg.seed);
    std::vector<PolyFactor<GaloisField>> out;
    for (const auto& [part, mult] : squarefree_univariate(f)) {
        for (const auto& [block, d] : detail::distinct_degree(part)) {
            std::vector<UPoly<GaloisField>> pieces;
            detail::equal_degree(block, d, rng, pieces);
            for (auto& piece : pieces) out.push_back({piece.monic(), mult});
        }
    }
    detail::sort_factors(out);
    return out;
}

/// Roots in the coefficient field with multiplicities, ascending.
inline std::vector<std::pair<GaloisField::Elem, unsigned>> roots_in_field(const UPoly<GaloisField>& f,
                                                                           const FactorConfig& cfg = {}) {
    std::vector<std::pair<GaloisField::Elem, unsigned>> out;
    for (const auto& [g, m] : factor_univariate(f, cfg)) {
        if (g.degree() == 1) out.emplace_back(g.field().neg(g.coeff(0)), m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Embedding of F_{p^k} into F_{p^K} for k | K, fixed by sending the
/// generator of the small field to the least root of its defining
/// polynomial in the large field.
class FieldEmbedding {
public:
    FieldEmbedding(GaloisField small, GaloisField large) : small_(std::move(small)), large_(std::move(large)) {
        if (small_.characteristic() != large_.characteristic() || large_.degree() % small_.degree() != 0) {
            throw std::invalid_argument("no embedding " + small_.name() + " -> " + large_.name());
        }
        if (small_.degree() == 1) {
            image_ = 0;
            return;
        }
        static std::mutex mu;
        static std::map<std::tuple<std::uint64_t, unsigned, unsigned>, GaloisField::Elem> cache;
        const auto key = std::make_tuple(small_.characteristic(), small_.degree(), large_.degree());
        {
            std::lock_guard lock(mu);
            if (auto it = cache.find(key); it != cache.end()) {
                image_ = it->second;
                return;
            }
        }
        std::vector<GaloisField::Elem> m;
        for (auto c : small_.modulus()) m.push_back(large_.from_int(static_cast<long long>(c)));
        const auto rts = roots_in_field(UPoly<GaloisField>(large_, std::move(m)));
        if (rts.empty()) throw std::logic_error("defining polynomial has no root in extension");
        image_ = rts.front().first;
        std::lock_guard lock(mu);
        cache.emplace(key, image_);
    }

    const GaloisField& source() const noexcept { return small_; }
    const GaloisField& target() const noexcept { return large_; }

    GaloisField::Elem operator()(GaloisField::Elem a) const {
        if (small_.degree() == 1) return a;
        const auto d = small_.digits(a);
        GaloisField::Elem acc = 0;
        for (std::size_t i = d.size(); i-- > 0;) {
            acc = large_.add(large_.mul(acc, image_), large_.from_int(static_cast<long long>(d[i])));
        }
        return acc;
    }

    UPoly<GaloisField> operator()(const UPoly<GaloisField>& f) const {
        std::vector<GaloisField::Elem> c;
        c.reserve(f.coeffs().size());
        for (auto a : f.coeffs()) c.push_back((*this)(a));
        return UPoly<GaloisField>(large_, std::move(c));
    }

private:
    GaloisField small_;
    GaloisField large_;
    GaloisField::Elem image_ = 0;
};

}  // namespace dcover
