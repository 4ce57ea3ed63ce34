#pragma once

/// @file canonical.hpp
/// Canonical resolution of a double cover branched along a plane curve germ.
///
/// At a point of multiplicity m the branch is blown up; with l = floor(m/2)
/// the new branch is the strict transform plus (m - 2l) E. The points of E
/// lying on the new branch are visited depth first: chart A points
/// (t = x t1) in ascending root order, then the chart B origin (x = x2 t2).
/// Points on E that are not rational over the current field are handled by
/// moving to the extension that contains them (finite fields only).

#include "dcover/exactmath/bivariate.hpp"
#include "dcover/exactmath/factor.hpp"
#include "dcover/exactmath/galois_field.hpp"
#include "dcover/exactmath/rational_field.hpp"
#include "dcover/exactmath/rational_roots.hpp"
#include "dcover/exactmath/squarefree.hpp"
#include "dcover/resolution/germ.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dcover {

class ResolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ResolutionOptions {
    unsigned max_blowups = 256;
    bool reverse_order = false;
    FactorConfig factor{};
};

/// A point of E met by the new branch.
struct Successor {
    std::string center;
    std::string field;
    unsigned multiplicity = 0;
    bool singular = false;
    std::string equation;
    unsigned points = 1;  // > 1 for a block of conjugate regular points left unsplit
};

struct BlowupStep {
    std::size_t index = 0;
    std::string center;
    std::string field;
    std::string equation;
    unsigned m = 0;
    unsigned l = 0;
    std::vector<Successor> successors;
};

struct ResolutionTrace {
    std::string field;
    std::string input;
    std::string reduced;  // B1
    std::string doubled;  // B0
    std::vector<BlowupStep> steps;
    long long xi = 0;
    long long chi_defect = 0;
    long long k2_defect = 0;
};

enum class Negligibility { first_kind, second_kind, not_negligible };

inline std::string to_string(Negligibility n) {
    switch (n) {
        case Negligibility::first_kind: return "first_kind";
        case Negligibility::second_kind: return "second_kind";
        case Negligibility::not_negligible: return "not_negligible";
    }
    return "?";
}

namespace detail {

template <CoefficientField F>
struct CenteredPoint {
    BivariatePoly<F> poly;
    std::string label;
};

template <CoefficientField F>
struct ExceptionalPoints {
    std::vector<CenteredPoint<F>> points;
    std::vector<std::pair<std::string, unsigned>> unsplit;  // label, number of conjugate points
};

/// Strict transform in chart A (x = x1, t = x1 t1), divided by x1^m.
template <CoefficientField F>
BivariatePoly<F> strict_chart_a(const BivariatePoly<F>& f, unsigned m) {
    return f.map_exponents([](const Monomial& e) { return Monomial{e.first + e.second, e.second}; })
        .divide_monomial(m, 0);
}

/// Strict transform in chart B (x = x2 t2, t = t2), divided by t2^m.
template <CoefficientField F>
BivariatePoly<F> strict_chart_b(const BivariatePoly<F>& f, unsigned m) {
    return f.map_exponents([](const Monomial& e) { return Monomial{e.first, e.first + e.second}; })
        .divide_monomial(0, m);
}

template <CoefficientField F>
struct LineSplit {
    std::vector<std::pair<typename F::Elem, unsigned>> roots;
    std::vector<std::pair<UPoly<F>, unsigned>> rest;
};

inline LineSplit<GaloisField> split_line(const UPoly<GaloisField>& u, const FactorConfig& cfg) {
    LineSplit<GaloisField> out;
    for (const auto& [g, e] : factor_univariate(u, cfg)) {
        if (g.degree() == 1) {
            out.roots.emplace_back(g.field().neg(g.coeff(0)), e);
        } else {
            out.rest.emplace_back(g, e);
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

inline LineSplit<RationalField> split_line(const UPoly<RationalField>& u, const FactorConfig&) {
    auto rr = rational_roots(u);
    return {std::move(rr.roots), std::move(rr.irrational)};
}

/// The conjugate points {t1 = root of g} as origins of copies of the chart over
/// the extension generated by a root of g.
inline std::vector<std::pair<BivariatePoly<GaloisField>, GaloisField::Elem>> conjugate_points(
    const BivariatePoly<GaloisField>& chart, const UPoly<GaloisField>& g, const FactorConfig& cfg) {
    const GaloisField& small = chart.field();
    const auto K = static_cast<unsigned>(small.degree() * static_cast<unsigned>(g.degree()));
    const GaloisField large = GaloisField::get(small.characteristic(), K);
    const FieldEmbedding emb(small, large);
    const auto big = chart.mapped(large, [&](GaloisField::Elem c) { return emb(c); });
    std::vector<std::pair<BivariatePoly<GaloisField>, GaloisField::Elem>> out;
    for (const auto& [c, e] : roots_in_field(emb(g), cfg)) out.emplace_back(big, c);
    return out;
}

inline std::vector<std::pair<BivariatePoly<RationalField>, Rational>> conjugate_points(
    const BivariatePoly<RationalField>&, const UPoly<RationalField>& g, const FactorConfig&) {
    throw ResolutionError("non-rational infinitely near point over Q (" + g.str("t1") +
                          " = 0); use a finite field");
}

/// Points of E = {x1 = 0} in chart A where the strict transform vanishes,
/// each recentered to the origin of `chart`. Blocks of conjugate points for
/// which need(g, e) is false are reported unsplit.
template <CoefficientField F, class Need>
ExceptionalPoints<F> chart_a_points(const BivariatePoly<F>& chart, const BivariatePoly<F>& strict, Need&& need,
                                    const FactorConfig& cfg) {
    const F& field = chart.field();
    ExceptionalPoints<F> out;
    const LineSplit<F> split = split_line(strict.restrict_x_zero(), cfg);
    for (const auto& [c, e] : split.roots) {
        out.points.push_back({chart.translated(field.zero(), c), "A:t1=" + field.to_string(c)});
    }
    for (const auto& [g, e] : split.rest) {
        if (!need(g, e)) {
            out.unsplit.emplace_back("A:" + g.str("t1") + "=0", static_cast<unsigned>(g.degree()));
            continue;
        }
        for (const auto& [big, c] : conjugate_points(chart, g, cfg)) {
            out.points.push_back({big.translated(big.field().zero(), c), "A:t1=" + big.field().to_string(c)});
        }
    }
    return out;
}

/// True when some root of g is a singular point of the strict transform.
template <CoefficientField F>
bool strict_singular_on(const BivariatePoly<F>& strict, const UPoly<F>& g, unsigned e) {
    if (e < 2) return false;
    return gcd(g, strict.dx().restrict_x_zero()).degree() > 0;
}

template <CoefficientField F>
class Resolver {
public:
    Resolver(const ResolutionOptions& opts, ResolutionTrace& trace, bool descend = true)
        : opts_(opts), trace_(trace), descend_(descend) {}

    void run(const CenteredPoint<F>& node) {
        const BivariatePoly<F> h = normalize_branch(node.poly).b1;
        const unsigned m = h.order_at_origin();
        if (m <= 1) return;
        if (trace_.steps.size() >= opts_.max_blowups) {
            throw ResolutionError("resolution depth exceeded (limit " + std::to_string(opts_.max_blowups) +
                                  " blow-ups)");
        }
        const std::size_t idx = trace_.steps.size();
        const unsigned l = m / 2;
        const bool odd = m % 2 == 1;
        trace_.steps.push_back({idx, node.label, h.field().name(), h.str(), m, l, {}});
        trace_.xi += static_cast<long long>(l) * (l - 1) / 2;
        trace_.k2_defect += 2LL * (static_cast<long long>(l) - 1) * (static_cast<long long>(l) - 1);

        const F& field = h.field();
        const BivariatePoly<F> sa = strict_chart_a(h, m);
        const BivariatePoly<F> sb = strict_chart_b(h, m);
        const BivariatePoly<F> ha = odd ? sa * BivariatePoly<F>::x(field) : sa;
        const BivariatePoly<F> hb = odd ? sb * BivariatePoly<F>::t(field) : sb;

        auto pts = chart_a_points(
            ha, sa, [&](const UPoly<F>& g, unsigned e) { return odd || strict_singular_on(sa, g, e); },
            opts_.factor);
        if (field.is_zero(sb.coeff(0, 0))) pts.points.push_back({hb, "B:x2=0"});

        std::vector<Successor> succ;
        std::vector<CenteredPoint<F>> next;
        for (auto& p : pts.points) {
            const unsigned mult = p.poly.order_at_origin();
            succ.push_back({p.label, p.poly.field().name(), mult, mult >= 2, p.poly.str(), 1});
            if (mult >= 2) next.push_back({p.poly, node.label + "/" + p.label});
        }
        for (const auto& [label, count] : pts.unsplit) succ.push_back({label, field.name(), 1, false, "", count});
        trace_.steps[idx].successors = std::move(succ);

        if (!descend_) return;
        if (opts_.reverse_order) std::reverse(next.begin(), next.end());
        for (const auto& n : next) run(n);
    }

private:
    const ResolutionOptions& opts_;
    ResolutionTrace& trace_;
    bool descend_;
};

template <CoefficientField F>
unsigned long long count_branches(const BivariatePoly<F>& f, const FactorConfig& cfg, unsigned& budget) {
    const unsigned m = f.order_at_origin();
    if (m <= 1) return m;
    if (budget == 0) throw ResolutionError("resolution depth exceeded while counting branches");
    --budget;
    const BivariatePoly<F> sa = strict_chart_a(f, m);
    const BivariatePoly<F> sb = strict_chart_b(f, m);
    auto pts = chart_a_points(
        sa, sa, [&](const UPoly<F>& g, unsigned e) { return strict_singular_on(sa, g, e); }, cfg);
    unsigned long long r = 0;
    for (const auto& p : pts.points) r += count_branches(p.poly, cfg, budget);
    for (const auto& [label, count] : pts.unsplit) r += count;
    if (f.field().is_zero(sb.coeff(0, 0))) r += count_branches(sb, cfg, budget);
    return r;
}

}  // namespace detail

/// Blows up the origin of a reduced branch of multiplicity m >= 2 and lists
/// the points of E on the new branch, recentered, with their multiplicities.
template <CoefficientField F>
struct BlowupResult {
    BivariatePoly<F> chart_a;  // strict transform times x1^(m mod 2)
    BivariatePoly<F> chart_b;  // strict transform times t2^(m mod 2)
    std::vector<Successor> points;
};

template <CoefficientField F>
BlowupResult<F> blowup_once(const BranchGerm<F>& g, unsigned m, const FactorConfig& cfg = {}) {
    const BivariatePoly<F>& f = g.equation();
    if (m < 2) throw std::invalid_argument("blowup_once: multiplicity must be at least 2");
    if (m != f.order_at_origin()) {
        throw std::invalid_argument("blowup_once: germ has multiplicity " + std::to_string(f.order_at_origin()) +
                                    ", not " + std::to_string(m));
    }
    if (!is_reduced(f)) throw std::invalid_argument("blowup_once: branch is not reduced; apply normalize_branch first");
    ResolutionOptions opts;
    opts.factor = cfg;
    ResolutionTrace trace;
    detail::Resolver<F>(opts, trace, false).run({f, "origin"});
    const F& field = f.field();
    const bool odd = m % 2 == 1;
    auto sa = detail::strict_chart_a(f, m);
    auto sb = detail::strict_chart_b(f, m);
    if (odd) {
        sa *= BivariatePoly<F>::x(field);
        sb *= BivariatePoly<F>::t(field);
    }
    return {std::move(sa), std::move(sb), std::move(trace.steps.front().successors)};
}

template <CoefficientField F>
ResolutionTrace canonical_resolution(const BranchGerm<F>& g, const ResolutionOptions& opts = {}) {
    ResolutionTrace trace;
    trace.field = g.field().name();
    trace.input = g.str();
    const auto nb = normalize_branch(g);
    trace.reduced = nb.b1.str();
    trace.doubled = nb.b0.str();
    detail::Resolver<F>(opts, trace).run({nb.b1, "origin"});
    trace.chi_defect = -trace.xi;
    return trace;
}

/// Number of analytic branches through the origin, over an algebraic closure.
template <CoefficientField F>
unsigned long long branch_count(const BivariatePoly<F>& f, const ResolutionOptions& opts = {}) {
    unsigned budget = opts.max_blowups;
    return detail::count_branches(f, opts.factor, budget);
}

/// Number of distinct tangent lines at the origin.
template <CoefficientField F>
unsigned tangent_directions(const BivariatePoly<F>& f) {
    const unsigned m = f.order_at_origin();
    const UPoly<F> u = detail::strict_chart_a(f, m).restrict_x_zero();
    unsigned n = static_cast<long>(m) > u.degree() ? 1U : 0U;
    for (const auto& part : squarefree_univariate(u)) n += static_cast<unsigned>(part.factor.degree());
    return n;
}

/// Two smooth branches (first kind) or three smooth branches, at least two of
/// them transversal (second kind).
template <CoefficientField F>
Negligibility is_negligible(const BranchGerm<F>& g, const ResolutionOptions& opts = {}) {
    const BivariatePoly<F> f = normalize_branch(g).b1;
    const unsigned m = f.order_at_origin();
    if (m != 2 && m != 3) return Negligibility::not_negligible;
    if (branch_count(f, opts) != m) return Negligibility::not_negligible;
    if (m == 2) return Negligibility::first_kind;
    return tangent_directions(f) >= 2 ? Negligibility::second_kind : Negligibility::not_negligible;
}

}  // namespace dcover
