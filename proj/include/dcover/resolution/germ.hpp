#pragma once

/// @file germ.hpp
/// Branch germs at the origin of the (x, t) plane and the split B = B1 + 2 B0
/// of a branch divisor into its reduced part and the doubled part.

#include "dcover/exactmath/bivariate.hpp"
#include "dcover/exactmath/squarefree.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace dcover {

template <CoefficientField F>
class BranchGerm {
public:
    using Poly = BivariatePoly<F>;

    explicit BranchGerm(Poly equation) : eq_(std::move(equation)) {
        if (eq_.is_zero()) throw std::invalid_argument("branch germ: zero equation");
        if (!eq_.field().is_zero(eq_.coeff(0, 0))) {
            throw std::invalid_argument("branch germ: " + eq_.str() + " does not vanish at the origin");
        }
    }

    const Poly& equation() const noexcept { return eq_; }
    const F& field() const noexcept { return eq_.field(); }
    std::string str() const { return eq_.str(); }

private:
    Poly eq_;
};

/// Least total degree of a monomial of the equation.
template <CoefficientField F>
unsigned multiplicity_at_origin(const BivariatePoly<F>& f) {
    return f.order_at_origin();
}
template <CoefficientField F>
unsigned multiplicity_at_origin(const BranchGerm<F>& g) {
    return g.equation().order_at_origin();
}

template <CoefficientField F>
struct NormalizedBranch {
    BivariatePoly<F> b1;  // reduced part
    BivariatePoly<F> b0;  // doubled part, equation = unit * b1 * b0^2
};

template <CoefficientField F>
NormalizedBranch<F> normalize_branch(const BivariatePoly<F>& f) {
    const F& field = f.field();
    NormalizedBranch<F> out{BivariatePoly<F>::constant(field, field.one()),
                            BivariatePoly<F>::constant(field, field.one())};
    for (const auto& [g, e] : squarefree_decompose(f)) {
        if (e % 2 == 1) out.b1 *= g;
        if (e >= 2) out.b0 *= g.pow(e / 2);
    }
    return out;
}
template <CoefficientField F>
NormalizedBranch<F> normalize_branch(const BranchGerm<F>& g) {
    return normalize_branch(g.equation());
}

template <CoefficientField F>
bool is_reduced(const BivariatePoly<F>& f) {
    for (const auto& part : squarefree_decompose(f)) {
        if (part.multiplicity > 1) return false;
    }
    return true;
}

}  // namespace dcover
