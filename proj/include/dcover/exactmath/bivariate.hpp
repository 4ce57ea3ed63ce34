#pragma once

/// @file bivariate.hpp
/// Sparse polynomials in two variables (x, t) over a runtime coefficient
/// field. Zero coefficients are never stored.

#include "dcover/exactmath/field.hpp"
#include "dcover/exactmath/univariate.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dcover {

/// Exponent pair (x-degree, t-degree). Map order is lexicographic with x first.
using Monomial = std::pair<unsigned, unsigned>;

template <CoefficientField F>
class BivariatePoly {
public:
    using Elem = typename F::Elem;
    using TermMap = std::map<Monomial, Elem>;

    explicit BivariatePoly(F field = F{}) : field_(std::move(field)) {}
    BivariatePoly(F field, TermMap terms) : field_(std::move(field)), terms_(std::move(terms)) { prune(); }

    static BivariatePoly x(const F& f) { return term(f, f.one(), 1, 0); }
    static BivariatePoly t(const F& f) { return term(f, f.one(), 0, 1); }
    static BivariatePoly constant(const F& f, const Elem& c) { return term(f, c, 0, 0); }
    static BivariatePoly term(const F& f, const Elem& c, unsigned i, unsigned j) {
        BivariatePoly r(f);
        if (!f.is_zero(c)) r.terms_.emplace(Monomial{i, j}, c);
        return r;
    }

    const F& field() const noexcept { return field_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Elem coeff(unsigned i, unsigned j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? field_.zero() : it->second;
    }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0}); }

    /// Order of vanishing at the origin: least total degree of a monomial.
    unsigned order_at_origin() const {
        if (is_zero()) throw std::domain_error("multiplicity of the zero polynomial");
        unsigned m = std::numeric_limits<unsigned>::max();
        for (const auto& [e, c] : terms_) m = std::min(m, e.first + e.second);
        return m;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
        return d;
    }
    unsigned degree_x() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e.first);
        return d;
    }
    unsigned degree_t() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e.second);
        return d;
    }

    /// Largest k with x^k dividing (resp. t^k).
    unsigned x_valuation() const {
        unsigned v = std::numeric_limits<unsigned>::max();
        for (const auto& [e, c] : terms_) v = std::min(v, e.first);
        return terms_.empty() ? 0 : v;
    }
    unsigned t_valuation() const {
        unsigned v = std::numeric_limits<unsigned>::max();
        for (const auto& [e, c] : terms_) v = std::min(v, e.second);
        return terms_.empty() ? 0 : v;
    }

    /// Homogeneous part of the given total degree.
    BivariatePoly homogeneous_part(unsigned d) const {
        BivariatePoly r(field_);
        for (const auto& [e, c] : terms_) {
            if (e.first + e.second == d) r.terms_.emplace(e, c);
        }
        return r;
    }

    /// Lex-leading term (largest x-exponent, then largest t-exponent).
    std::pair<Monomial, Elem> leading_term() const {
        if (is_zero()) throw std::domain_error("leading term of zero polynomial");
        return *terms_.rbegin();
    }

    BivariatePoly operator-() const {
        BivariatePoly r = *this;
        for (auto& [e, c] : r.terms_) c = field_.neg(c);
        return r;
    }
    BivariatePoly& operator+=(const BivariatePoly& o) {
        for (const auto& [e, c] : o.terms_) accumulate(e, c);
        return *this;
    }
    BivariatePoly& operator-=(const BivariatePoly& o) {
        for (const auto& [e, c] : o.terms_) accumulate(e, field_.neg(c));
        return *this;
    }
    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
        BivariatePoly r(a.field_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                r.accumulate({ea.first + eb.first, ea.second + eb.second}, a.field_.mul(ca, cb));
            }
        }
        return r;
    }
    BivariatePoly& operator*=(const BivariatePoly& o) { return *this = *this * o; }

    BivariatePoly scaled(const Elem& s) const {
        BivariatePoly r(field_);
        for (const auto& [e, c] : terms_) {
            Elem v = field_.mul(c, s);
            if (!field_.is_zero(v)) r.terms_.emplace(e, v);
        }
        return r;
    }

    BivariatePoly pow(unsigned n) const {
        BivariatePoly r = constant(field_, field_.one());
        BivariatePoly b = *this;
        while (n > 0) {
            if (n & 1U) r *= b;
            n >>= 1U;
            if (n > 0) b *= b;
        }
        return r;
    }

    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib) {
            if (ia->first != ib->first || !a.field_.equal(ia->second, ib->second)) return false;
        }
        return true;
    }

    BivariatePoly dx() const {
        BivariatePoly r(field_);
        for (const auto& [e, c] : terms_) {
            if (e.first == 0) continue;
            r.accumulate({e.first - 1, e.second}, field_.mul(field_.from_int(e.first), c));
        }
        return r;
    }
    BivariatePoly dt() const {
        BivariatePoly r(field_);
        for (const auto& [e, c] : terms_) {
            if (e.second == 0) continue;
            r.accumulate({e.first, e.second - 1}, field_.mul(field_.from_int(e.second), c));
        }
        return r;
    }

    /// Divides by x^a t^b; throws if some term is not divisible.
    BivariatePoly divide_monomial(unsigned a, unsigned b) const {
        BivariatePoly r(field_);
        for (const auto& [e, c] : terms_) {
            if (e.first < a || e.second < b) throw std::logic_error("monomial division is not exact");
            r.terms_.emplace(Monomial{e.first - a, e.second - b}, c);
        }
        return r;
    }

    /// Applies (i, j) -> g(i, j) to every exponent.
    template <class Fn>
    BivariatePoly map_exponents(Fn&& g) const {
        BivariatePoly r(field_);
        for (const auto& [e, c] : terms_) r.accumulate(g(e), c);
        return r;
    }

    /// f(x + a, t + b).
    BivariatePoly translated(const Elem& a, const Elem& b) const {
        const BivariatePoly xs = x(field_) + constant(field_, a);
        const BivariatePoly ts = t(field_) + constant(field_, b);
        std::vector<BivariatePoly> xp{constant(field_, field_.one())};
        std::vector<BivariatePoly> tp{constant(field_, field_.one())};
        for (unsigned i = 1; i <= degree_x(); ++i) xp.push_back(xp.back() * xs);
        for (unsigned j = 1; j <= degree_t(); ++j) tp.push_back(tp.back() * ts);
        BivariatePoly r(field_);
        for (const auto& [e, c] : terms_) r += (xp[e.first] * tp[e.second]).scaled(c);
        return r;
    }

    /// The univariate polynomial f(0, t).
    UPoly<F> restrict_x_zero() const {
        std::vector<Elem> v(degree_t() + 1, field_.zero());
        for (const auto& [e, c] : terms_) {
            if (e.first == 0) v[e.second] = c;
        }
        return UPoly<F>(field_, std::move(v));
    }
    /// The univariate polynomial f(x, 0).
    UPoly<F> restrict_t_zero() const {
        std::vector<Elem> v(degree_x() + 1, field_.zero());
        for (const auto& [e, c] : terms_) {
            if (e.second == 0) v[e.first] = c;
        }
        return UPoly<F>(field_, std::move(v));
    }

    /// Coefficients as a polynomial in x over F[t]: result[i] is the t-polynomial of x^i.
    std::vector<UPoly<F>> x_major() const {
        std::vector<std::vector<Elem>> rows(degree_x() + 1);
        for (const auto& [e, c] : terms_) {
            auto& row = rows[e.first];
            if (row.size() <= e.second) row.resize(e.second + 1, field_.zero());
            row[e.second] = c;
        }
        std::vector<UPoly<F>> out;
        out.reserve(rows.size());
        for (auto& row : rows) out.emplace_back(field_, std::move(row));
        if (is_zero()) out.clear();
        return out;
    }
    static BivariatePoly from_x_major(const F& f, const std::vector<UPoly<F>>& rows) {
        BivariatePoly r(f);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& cs = rows[i].coeffs();
            for (std::size_t j = 0; j < cs.size(); ++j) {
                if (!f.is_zero(cs[j])) r.terms_.emplace(Monomial{unsigned(i), unsigned(j)}, cs[j]);
            }
        }
        return r;
    }

    /// Copies into another coefficient field through a coefficient map.
    template <CoefficientField G, class Map>
    BivariatePoly<G> mapped(const G& target, Map&& m) const {
        typename BivariatePoly<G>::TermMap out;
        for (const auto& [e, c] : terms_) {
            auto v = m(c);
            if (!target.is_zero(v)) out.emplace(e, v);
        }
        return BivariatePoly<G>(target, std::move(out));
    }

    /// Makes the lex-leading coefficient 1.
    BivariatePoly monic() const {
        if (is_zero()) return *this;
        return scaled(field_.inv(leading_term().second));
    }

    /// Readable form, terms by descending total degree then descending x-degree.
    std::string str(const std::string& xv = "x", const std::string& tv = "t") const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Monomial, Elem>> ts(terms_.begin(), terms_.end());
        std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
            const unsigned da = a.first.first + a.first.second;
            const unsigned db = b.first.first + b.first.second;
            if (da != db) return da > db;
            return a.first.first > b.first.first;
        });
        std::string s;
        for (const auto& [e, c] : ts) {
            std::string cs = field_.to_string(c);
            bool negative = false;
            if (!cs.empty() && cs[0] == '-') {
                negative = true;
                cs = cs.substr(1);
            }
            if (s.empty()) {
                if (negative) s += "-";
            } else {
                s += negative ? " - " : " + ";
            }
            const bool unit = cs == "1";
            const bool compound = cs.find_first_of("+/") != std::string::npos;
            std::string mono;
            auto var = [&](const std::string& v, unsigned k) {
                if (k == 0) return;
                if (!mono.empty()) mono += "*";
                mono += v;
                if (k > 1) mono += "^" + std::to_string(k);
            };
            var(xv, e.first);
            var(tv, e.second);
            if (mono.empty()) {
                s += compound ? "(" + cs + ")" : cs;
            } else if (unit) {
                s += mono;
            } else {
                s += (compound ? "(" + cs + ")" : cs) + "*" + mono;
            }
        }
        return s;
    }

private:
    void accumulate(const Monomial& e, const Elem& c) {
        if (field_.is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second = field_.add(it->second, c);
            if (field_.is_zero(it->second)) terms_.erase(it);
        }
    }
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            it = field_.is_zero(it->second) ? terms_.erase(it) : std::next(it);
        }
    }

    F field_;
    TermMap terms_;
};

}  // namespace dcover
