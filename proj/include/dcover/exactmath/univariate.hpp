#pragma once

/// @file univariate.hpp
/// Dense univariate polynomials over a runtime coefficient field.

#include "dcover/exactmath/field.hpp"
#include "dcover/exactmath/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dcover {

template <CoefficientField F>
class UPoly {
public:
    using Elem = typename F::Elem;

    explicit UPoly(F field = F{}) : field_(std::move(field)) {}
    UPoly(F field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

    static UPoly constant(const F& f, const Elem& c) { return UPoly(f, {c}); }
    static UPoly monomial(const F& f, const Elem& c, std::size_t deg) {
        std::vector<Elem> v(deg + 1, f.zero());
        v[deg] = c;
        return UPoly(f, std::move(v));
    }
    /// The polynomial t - root.
    static UPoly linear(const F& f, const Elem& root) { return UPoly(f, {f.neg(root), f.one()}); }

    const F& field() const noexcept { return field_; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    Elem lead() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && field_.equal(c_.back(), field_.one()); }

    UPoly monic() const {
        if (is_zero()) return *this;
        const Elem li = field_.inv(lead());
        UPoly r = *this;
        for (auto& x : r.c_) x = field_.mul(x, li);
        return r;
    }

    UPoly scaled(const Elem& s) const {
        UPoly r = *this;
        for (auto& x : r.c_) x = field_.mul(x, s);
        r.trim();
        return r;
    }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& x : r.c_) x = field_.neg(x);
        return r;
    }
    UPoly& operator+=(const UPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
        trim();
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
        const F& f = a.field_;
        std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, f.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (f.is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                r[i + j] = f.add(r[i + j], f.mul(a.c_[i], b.c_[j]));
            }
        }
        return UPoly(f, std::move(r));
    }

    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (!a.field_.equal(a.c_[i], b.c_[i])) return false;
        }
        return true;
    }

    /// Quotient and remainder; throws on a zero divisor.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        const F& f = field_;
        UPoly r = *this;
        if (r.degree() < d.degree()) return {UPoly(f), r};
        std::vector<Elem> q(static_cast<std::size_t>(r.degree() - d.degree() + 1), f.zero());
        const Elem li = f.inv(d.lead());
        const std::size_t dd = static_cast<std::size_t>(d.degree());
        while (!r.is_zero() && r.degree() >= d.degree()) {
            const std::size_t shift = static_cast<std::size_t>(r.degree()) - dd;
            const Elem c = f.mul(r.lead(), li);
            q[shift] = c;
            for (std::size_t i = 0; i <= dd; ++i) {
                r.c_[shift + i] = f.sub(r.c_[shift + i], f.mul(c, d.c_[i]));
            }
            r.trim();
        }
        return {UPoly(f, std::move(q)), r};
    }
    UPoly operator%(const UPoly& d) const { return divmod(d).second; }

    /// Exact quotient; throws if d does not divide *this.
    UPoly exact_div(const UPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
        return q;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly(field_);
        std::vector<Elem> r(c_.size() - 1, field_.zero());
        for (std::size_t i = 1; i < c_.size(); ++i) {
            r[i - 1] = field_.mul(field_.from_int(static_cast<long long>(i)), c_[i]);
        }
        return UPoly(field_, std::move(r));
    }

    Elem eval(const Elem& x) const {
        Elem acc = field_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
        return acc;
    }

    /// f(t + s).
    UPoly shifted(const Elem& s) const {
        UPoly acc(field_);
        const UPoly lin(field_, {s, field_.one()});
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + constant(field_, c_[i]);
        return acc;
    }

    /// Monic gcd; gcd(0, 0) = 0.
    friend UPoly gcd(UPoly a, UPoly b) {
        while (!b.is_zero()) {
            a = a % b;
            std::swap(a, b);
        }
        return a.monic();
    }

    /// base^e mod m.
    friend UPoly powmod(UPoly base, BigInt e, const UPoly& m) {
        UPoly r = constant(m.field_, m.field_.one()) % m;
        base = base % m;
        while (e > 0) {
            if ((e & 1) != 0) r = (r * base) % m;
            e >>= 1;
            if (e > 0) base = (base * base) % m;
        }
        return r;
    }

    /// Lexicographic comparison of coefficient vectors from the constant term up,
    /// after comparing degrees.
    friend bool canonical_less(const UPoly& a, const UPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.field_.less(a.c_[i], b.c_[i])) return true;
            if (a.field_.less(b.c_[i], a.c_[i])) return false;
        }
        return false;
    }

    std::string str(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (field_.is_zero(c_[i])) continue;
            std::string cs = field_.to_string(c_[i]);
            const bool is_one = field_.equal(c_[i], field_.one());
            const bool compound = cs.find_first_of("+-/") != std::string::npos && cs[0] != '-';
            if (!s.empty()) s += " + ";
            if (i == 0) {
                s += compound ? "(" + cs + ")" : cs;
                continue;
            }
            if (!is_one) s += (compound || cs.find('/') != std::string::npos ? "(" + cs + ")" : cs) + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
    }

    F field_;
    std::vector<Elem> c_;
};

}  // namespace dcover
