#pragma once

/// @file galois_field.hpp
/// Finite fields F_{p^k} for odd p, with a runtime descriptor.
///
/// Elements are packed into a std::uint64_t as base-p digits: the element
/// c_0 + c_1 a + ... + c_{k-1} a^{k-1} (a = class of y modulo the defining
/// polynomial) is stored as sum c_i p^i. Integer comparison of the packed
/// value therefore gives a fixed total order on the field.
///
/// The defining polynomial of F_{p^k} is the monic irreducible
/// y^k + c_{k-1} y^{k-1} + ... + c_0 whose digit vector (c_{k-1}, ..., c_0)
/// is lexicographically least. Contexts are interned, so two GaloisField
/// handles with the same (p, k) share one descriptor.

#include "dcover/exactmath/primes.hpp"
#include "dcover/exactmath/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dcover {

namespace detail {

// Dense polynomials over Z/p used only to search for defining polynomials.
using ZpPoly = std::vector<std::uint64_t>;

inline void zp_trim(ZpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::uint64_t zp_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1U) r = r * b % p;
        b = b * b % p;
        e >>= 1U;
    }
    return r;
}

inline ZpPoly zp_mod(ZpPoly a, const ZpPoly& m, std::uint64_t p) {
    zp_trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t inv_lead = zp_pow(m.back(), p - 2, p);
    while (a.size() > dm) {
        const std::uint64_t c = a.back() * inv_lead % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
        }
        zp_trim(a);
    }
    return a;
}

inline ZpPoly zp_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return zp_mod(std::move(r), m, p);
}

inline ZpPoly zp_powmod(ZpPoly base, std::uint64_t e, const ZpPoly& m, std::uint64_t p) {
    ZpPoly r{1};
    base = zp_mod(std::move(base), m, p);
    while (e > 0) {
        if (e & 1U) r = zp_mulmod(r, base, m, p);
        base = zp_mulmod(base, base, m, p);
        e >>= 1U;
    }
    return r;
}

inline ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint64_t p) {
    zp_trim(a);
    zp_trim(b);
    while (!b.empty()) {
        a = zp_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

inline ZpPoly zp_sub(ZpPoly a, const ZpPoly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    zp_trim(a);
    return a;
}

// Rabin's irreducibility test for a monic f of degree k over Z/p.
inline bool zp_is_irreducible(const ZpPoly& f, std::uint64_t p) {
    const std::size_t k = f.size() - 1;
    if (k == 1) return true;
    const ZpPoly y{0, 1};
    auto frobenius_iterate = [&](std::size_t times) {
        ZpPoly h = y;
        for (std::size_t i = 0; i < times; ++i) h = zp_powmod(h, p, f, p);
        return h;
    };
    if (zp_sub(frobenius_iterate(k), y, p).size() != 0) return false;
    for (std::uint64_t r : prime_divisors(k)) {
        ZpPoly g = zp_gcd(f, zp_sub(frobenius_iterate(k / r), y, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

inline ZpPoly least_irreducible(std::uint64_t p, unsigned k) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
        ZpPoly f(k + 1, 0);
        std::uint64_t v = n;
        for (unsigned i = 0; i < k; ++i) {
            f[i] = v % p;
            v /= p;
        }
        f[k] = 1;
        if (k > 1 && f[0] == 0) continue;
        if (zp_is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

struct GFContext {
    std::uint64_t p = 0;
    unsigned k = 0;
    std::uint64_t q = 0;
    ZpPoly modulus;  // monic, degree k, low-to-high
};

}  // namespace detail

class GaloisField {
public:
    using Elem = std::uint64_t;

    GaloisField() : GaloisField(get(3, 1)) {}

    /// Interned field of order p^k. Throws for even or composite p, k == 0,
    /// or p^k beyond the 62-bit packing limit.
    static GaloisField get(std::uint64_t p, unsigned k = 1) {
        require_odd_prime(p, "GaloisField");
        if (p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("GaloisField: p too large");
        if (k == 0) throw std::invalid_argument("GaloisField: extension degree must be >= 1");
        std::uint64_t q = 1;
        for (unsigned i = 0; i < k; ++i) {
            if (q > (std::uint64_t{1} << 62) / p) {
                throw std::invalid_argument("GaloisField: p^k exceeds 2^62");
            }
            q *= p;
        }
        static std::mutex mu;
        static std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const detail::GFContext>> cache;
        std::lock_guard lock(mu);
        auto& slot = cache[{p, k}];
        if (!slot) {
            auto ctx = std::make_shared<detail::GFContext>();
            ctx->p = p;
            ctx->k = k;
            ctx->q = q;
            ctx->modulus = detail::least_irreducible(p, k);
            slot = std::move(ctx);
        }
        return GaloisField(slot);
    }

    std::uint64_t characteristic() const noexcept { return ctx_->p; }
    unsigned degree() const noexcept { return ctx_->k; }
    std::uint64_t order() const noexcept { return ctx_->q; }
    bool is_finite() const noexcept { return true; }
    const std::vector<std::uint64_t>& modulus() const noexcept { return ctx_->modulus; }

    std::string name() const {
        std::string s = "F" + std::to_string(ctx_->p);
        if (ctx_->k > 1) s += "^" + std::to_string(ctx_->k);
        return s;
    }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }

    Elem from_int(long long v) const noexcept {
        const auto p = static_cast<long long>(ctx_->p);
        long long r = v % p;
        if (r < 0) r += p;
        return static_cast<Elem>(r);
    }
    Elem from_bigint(const BigInt& v) const {
        BigInt r = v % ctx_->p;
        if (r < 0) r += ctx_->p;
        return static_cast<Elem>(r);
    }

    bool is_zero(Elem a) const noexcept { return a == 0; }
    bool equal(Elem a, Elem b) const noexcept { return a == b; }
    bool less(Elem a, Elem b) const noexcept { return a < b; }

    Elem add(Elem a, Elem b) const noexcept {
        const std::uint64_t p = ctx_->p;
        if (ctx_->k == 1) return (a + b) % p;
        Elem r = 0, scale = 1;
        for (unsigned i = 0; i < ctx_->k; ++i) {
            r += ((a % p + b % p) % p) * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        return r;
    }
    Elem neg(Elem a) const noexcept {
        const std::uint64_t p = ctx_->p;
        if (ctx_->k == 1) return (p - a) % p;
        Elem r = 0, scale = 1;
        for (unsigned i = 0; i < ctx_->k; ++i) {
            r += ((p - a % p) % p) * scale;
            a /= p;
            scale *= p;
        }
        return r;
    }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        const std::uint64_t p = ctx_->p;
        if (ctx_->k == 1) return a * b % p;
        const unsigned k = ctx_->k;
        const auto da = digits(a);
        const auto db = digits(b);
        std::vector<std::uint64_t> prod(2 * k - 1, 0);
        for (unsigned i = 0; i < k; ++i) {
            if (da[i] == 0) continue;
            for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
        const auto& m = ctx_->modulus;
        for (std::size_t top = prod.size(); top-- > k;) {
            const std::uint64_t c = prod[top];
            if (c == 0) continue;
            for (unsigned i = 0; i <= k; ++i) {
                prod[top - k + i] = (prod[top - k + i] + (p - c) * m[i]) % p;
            }
        }
        prod.resize(k);
        return from_digits(prod);
    }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one();
        while (e > 0) {
            if (e & 1U) r = mul(r, a);
            a = mul(a, a);
            e >>= 1U;
        }
        return r;
    }

    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("division by zero in " + name());
        return pow(a, ctx_->q - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    /// Unique p-th root (Frobenius is bijective on a finite field).
    Elem pth_root(Elem a) const {
        Elem r = a;
        for (unsigned i = 1; i < ctx_->k; ++i) r = pow(r, ctx_->p);
        return r;
    }

    std::vector<std::uint64_t> digits(Elem a) const {
        std::vector<std::uint64_t> d(ctx_->k, 0);
        for (unsigned i = 0; i < ctx_->k; ++i) {
            d[i] = a % ctx_->p;
            a /= ctx_->p;
        }
        return d;
    }
    Elem from_digits(const std::vector<std::uint64_t>& d) const {
        Elem r = 0, scale = 1;
        for (unsigned i = 0; i < ctx_->k && i < d.size(); ++i) {
            r += (d[i] % ctx_->p) * scale;
            scale *= ctx_->p;
        }
        return r;
    }

    /// Class of y modulo the defining polynomial (the zero element when k == 1).
    Elem generator() const { return ctx_->k == 1 ? 0 : ctx_->p; }

    template <class Rng>
    Elem random(Rng& rng) const {
        std::uniform_int_distribution<std::uint64_t> dist(0, ctx_->q - 1);
        return dist(rng);
    }

    /// "3" over a prime field; "2a^2+a+4" style over extensions, a being the generator.
    std::string to_string(Elem x) const {
        if (ctx_->k == 1) return std::to_string(x);
        const auto d = digits(x);
        std::string s;
        for (std::size_t i = d.size(); i-- > 0;) {
            if (d[i] == 0) continue;
            if (!s.empty()) s += "+";
            if (i == 0) {
                s += std::to_string(d[i]);
                continue;
            }
            if (d[i] != 1) s += std::to_string(d[i]);
            s += "a";
            if (i > 1) s += "^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

    friend bool operator==(const GaloisField& a, const GaloisField& b) noexcept {
        return a.ctx_->p == b.ctx_->p && a.ctx_->k == b.ctx_->k;
    }

private:
    explicit GaloisField(std::shared_ptr<const detail::GFContext> ctx) : ctx_(std::move(ctx)) {}

    std::shared_ptr<const detail::GFContext> ctx_;
};

}  // namespace dcover
