#pragma once

/// @file squarefree.hpp
/// Gcd, exact division and squarefree decomposition of bivariate
/// polynomials. The gcd views f as a polynomial in x over F[t] and runs a
/// primitive remainder sequence.

#include "dcover/exactmath/bivariate.hpp"
#include "dcover/exactmath/factor.hpp"
#include "dcover/exactmath/galois_field.hpp"
#include "dcover/exactmath/univariate.hpp"

#include <algorithm>
#include <concepts>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dcover {

template <CoefficientField F>
struct BivariateFactor {
    BivariatePoly<F> factor;
    unsigned multiplicity = 1;
};

namespace detail {

template <CoefficientField F>
using XMajor = std::vector<UPoly<F>>;

template <CoefficientField F>
void trim_x(XMajor<F>& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

template <CoefficientField F>
UPoly<F> x_content(const XMajor<F>& a, const F& f) {
    UPoly<F> c(f);
    for (const auto& ci : a) {
        c = gcd(c, ci);
        if (c.degree() == 0) break;
    }
    return c;
}

template <CoefficientField F>
XMajor<F> x_primitive(XMajor<F> a, const F& f) {
    if (a.empty()) return a;
    const UPoly<F> c = x_content(a, f);
    for (auto& ci : a) ci = ci.exact_div(c);
    return a;
}

/// Pseudo-remainder of a by b as polynomials in x over F[t].
template <CoefficientField F>
XMajor<F> pseudo_rem(XMajor<F> a, const XMajor<F>& b) {
    const std::size_t db = b.size() - 1;
    const UPoly<F>& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        const UPoly<F> la = a.back();
        for (auto& ai : a) ai = ai * lb;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= la * b[i];
        trim_x(a);
    }
    return a;
}

template <CoefficientField F>
BivariatePoly<F> scale_by_t_poly(const BivariatePoly<F>& g, const UPoly<F>& c) {
    const F& f = g.field();
    XMajor<F> rows = g.x_major();
    for (auto& r : rows) r = r * c;
    return BivariatePoly<F>::from_x_major(f, rows);
}

}  // namespace detail

/// Quotient a / b; throws std::logic_error if b does not divide a.
template <CoefficientField F>
BivariatePoly<F> exact_divide(const BivariatePoly<F>& a, const BivariatePoly<F>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const F& f = a.field();
    BivariatePoly<F> r = a;
    BivariatePoly<F> q(f);
    const auto [lb, cb] = b.leading_term();
    const auto cbi = f.inv(cb);
    while (!r.is_zero()) {
        const auto [lr, cr] = r.leading_term();
        if (lr.first < lb.first || lr.second < lb.second) throw std::logic_error("inexact polynomial division");
        const auto term = BivariatePoly<F>::term(f, f.mul(cr, cbi), lr.first - lb.first, lr.second - lb.second);
        q += term;
        r -= term * b;
    }
    return q;
}

/// Gcd normalized to lex-leading coefficient 1; gcd(0, 0) = 0.
template <CoefficientField F>
BivariatePoly<F> gcd(const BivariatePoly<F>& a, const BivariatePoly<F>& b) {
    const F& f = a.field();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    auto xa = a.x_major();
    auto xb = b.x_major();
    const UPoly<F> c = gcd(detail::x_content(xa, f), detail::x_content(xb, f));
    xa = detail::x_primitive(std::move(xa), f);
    xb = detail::x_primitive(std::move(xb), f);
    if (xa.size() < xb.size()) std::swap(xa, xb);
    while (!xb.empty()) {
        auto r = detail::pseudo_rem(xa, xb);
        xa = std::move(xb);
        xb = detail::x_primitive(std::move(r), f);
    }
    return detail::scale_by_t_poly(BivariatePoly<F>::from_x_major(f, xa), c).monic();
}

namespace detail {

/// g with g^p == u, for u in F_{p^k}[x, t] that is a p-th power.
inline BivariatePoly<GaloisField> bivariate_pth_root(const BivariatePoly<GaloisField>& u) {
    const GaloisField& f = u.field();
    const auto p = static_cast<unsigned>(f.characteristic());
    typename BivariatePoly<GaloisField>::TermMap out;
    for (const auto& [e, c] : u.terms()) {
        if (e.first % p != 0 || e.second % p != 0) throw std::logic_error("bivariate_pth_root: not a p-th power");
        out.emplace(Monomial{e.first / p, e.second / p}, f.pth_root(c));
    }
    return BivariatePoly<GaloisField>(f, std::move(out));
}

template <CoefficientField F>
bool bivariate_canonical_less(const BivariatePoly<F>& a, const BivariatePoly<F>& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    if (a.size() != b.size()) return a.size() < b.size();
    const F& f = a.field();
    auto ia = a.terms().begin();
    for (auto ib = b.terms().begin(); ib != b.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (f.less(ia->second, ib->second)) return true;
        if (f.less(ib->second, ia->second)) return false;
    }
    return false;
}

}  // namespace detail

/// f = c * prod g_i^{e_i} with g_i squarefree, pairwise coprime and
/// normalized to lex-leading coefficient 1. Sorted by total degree, then
/// terms, then multiplicity. Constants give an empty list.
template <CoefficientField F>
std::vector<BivariateFactor<F>> squarefree_decompose(const BivariatePoly<F>& f) {
    if (f.is_zero()) throw std::domain_error("squarefree decomposition of the zero polynomial");
    std::vector<BivariateFactor<F>> out;
    if (f.is_constant()) return out;
    const BivariatePoly<F> g = f.monic();
    BivariatePoly<F> u = gcd(gcd(g, g.dx()), g.dt());
    BivariatePoly<F> w = exact_divide(g, u);
    unsigned i = 1;
    while (!w.is_constant()) {
        BivariatePoly<F> y = gcd(w, u);
        BivariatePoly<F> z = exact_divide(w, y);
        if (!z.is_constant()) out.push_back({z, i});
        ++i;
        w = y;
        u = exact_divide(u, y);
    }
    if (!u.is_constant()) {
        if constexpr (std::same_as<F, GaloisField>) {
            const auto p = static_cast<unsigned>(f.field().characteristic());
            for (auto& [h, e] : squarefree_decompose(detail::bivariate_pth_root(u))) out.push_back({h, e * p});
        } else {
            throw std::logic_error("squarefree_decompose: residual p-th power in characteristic 0");
        }
    }
    std::sort(out.begin(), out.end(), [](const BivariateFactor<F>& a, const BivariateFactor<F>& b) {
        if (detail::bivariate_canonical_less(a.factor, b.factor)) return true;
        if (detail::bivariate_canonical_less(b.factor, a.factor)) return false;
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

}  // namespace dcover
