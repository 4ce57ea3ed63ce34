#include "dcover/exactmath/bivariate.hpp"
#include "dcover/exactmath/factor.hpp"
#include "dcover/exactmath/galois_field.hpp"
#include "dcover/exactmath/rational.hpp"
#include "dcover/exactmath/rational_field.hpp"
#include "dcover/exactmath/rational_roots.hpp"
#include "dcover/exactmath/squarefree.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dcover;

namespace {

using GPoly = UPoly<GaloisField>;

GPoly gpoly(const GaloisField& f, std::initializer_list<long long> cs) {
    std::vector<GaloisField::Elem> v;
    for (long long c : cs) v.push_back(f.from_int(c));
    return GPoly(f, std::move(v));
}

template <CoefficientField F>
BivariatePoly<F> bx(const F& f) { return BivariatePoly<F>::x(f); }
template <CoefficientField F>
BivariatePoly<F> bt(const F& f) { return BivariatePoly<F>::t(f); }

// Independent oracle: every element of a small field is tried as a root.
std::vector<GaloisField::Elem> brute_roots(const GPoly& f) {
    std::vector<GaloisField::Elem> r;
    for (std::uint64_t a = 0; a < f.field().order(); ++a) {
        if (f.field().is_zero(f.eval(a))) r.push_back(a);
    }
    return r;
}

}  // namespace

TEST(Rational, Arithmetic) {
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ((Rational(1, 2) + Rational(1, 2)).str(), "1");
    EXPECT_EQ(Rational(-4, 6).str(), "-2/3");
    EXPECT_THROW(Rational(7) / Rational(0), std::domain_error);
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    const long long p = 5;
    EXPECT_EQ(Rational(p * p - 4 * p - 1, 4 * (3 * p * p - 8 * p - 3)), Rational(1, 32));
    EXPECT_EQ(Rational::parse("-12/8"), Rational(-3, 2));
}

TEST(Rational, ExactnessProperty) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> d(-1'000'000, 1'000'000);
    for (int it = 0; it < 2000; ++it) {
        const Rational a(d(rng), d(rng) == 0 ? 1 : std::abs(d(rng)) + 1);
        const Rational b(BigInt(d(rng)) * BigInt(d(rng)) * BigInt(d(rng)), std::abs(d(rng)) + 1);
        EXPECT_EQ((a + b) - b, a);
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), Rational(1));
            EXPECT_EQ(big_gcd(a.num() < 0 ? BigInt(-a.num()) : a.num(), a.den()), 1);
        }
    }
}

TEST(GaloisField, ExtensionArithmetic) {
    for (auto [p, k] : {std::pair{3ULL, 2U}, {5ULL, 2U}, {7ULL, 3U}, {11ULL, 2U}}) {
        const GaloisField f = GaloisField::get(p, k);
        EXPECT_EQ(f.order(), [&] { std::uint64_t q = 1; for (unsigned i = 0; i < k; ++i) q *= p; return q; }());
        for (std::uint64_t a = 1; a < f.order(); a += 3) {
            EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
            EXPECT_EQ(f.pow(a, f.order() - 1), f.one());
            EXPECT_EQ(f.pow(f.pth_root(a), p), a);
        }
    }
    EXPECT_THROW(GaloisField::get(5).inv(0), std::domain_error);
}

TEST(Factor, SpecExamples) {
    const GaloisField f5 = GaloisField::get(5);
    const auto fs = factor_univariate(gpoly(f5, {-1, 0, 1}));
    ASSERT_EQ(fs.size(), 2U);
    // Sorted by degree, then coefficients from the constant term: x + 1 (1 < 4) before x - 1.
    EXPECT_EQ(fs[0].factor, gpoly(f5, {1, 1}));
    EXPECT_EQ(fs[1].factor, gpoly(f5, {-1, 1}));
    EXPECT_EQ(fs[0].multiplicity, 1U);
    EXPECT_EQ(fs[1].multiplicity, 1U);

    const auto frob = factor_univariate(gpoly(f5, {0, -1, 0, 0, 0, 1}));
    ASSERT_EQ(frob.size(), 5U);
    for (const auto& [g, m] : frob) {
        EXPECT_EQ(g.degree(), 1);
        EXPECT_EQ(m, 1U);
    }

    const GaloisField f7 = GaloisField::get(7);
    const GPoly x2p1 = gpoly(f7, {1, 0, 1});
    EXPECT_TRUE(brute_roots(x2p1).empty());
    const auto irr = factor_univariate(x2p1);
    ASSERT_EQ(irr.size(), 1U);
    EXPECT_EQ(irr[0].factor, x2p1);
    EXPECT_EQ(irr[0].multiplicity, 1U);

    EXPECT_THROW(factor_univariate(GPoly(f7)), std::domain_error);
}

TEST(Factor, ReassemblyProperty) {
    std::mt19937_64 rng(2024);
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL}) {
        for (unsigned k : {1U, 2U}) {
            const GaloisField f = GaloisField::get(p, k);
            for (int it = 0; it < 25; ++it) {
                const auto deg = static_cast<std::size_t>(1 + rng() % 12);
                std::vector<GaloisField::Elem> c(deg + 1);
                for (auto& e : c) e = f.random(rng);
                if (c.back() == 0) c.back() = f.one();
                // Force some repeated factors now and then.
                GPoly g(f, c);
                if (it % 3 == 0) g = g * GPoly(f, {f.random(rng), f.one()}) * GPoly(f, {f.random(rng), f.one()});
                if (g.degree() > 12) g = GPoly(f, c);
                const auto fs = factor_univariate(g);
                GPoly prod = GPoly::constant(f, g.lead());
                for (const auto& [h, m] : fs) {
                    EXPECT_TRUE(h.is_monic());
                    for (unsigned i = 0; i < m; ++i) prod = prod * h;
                }
                EXPECT_EQ(prod, g);
                // Linear factors match an exhaustive root search.
                std::vector<GaloisField::Elem> lin;
                for (const auto& [h, m] : fs) {
                    if (h.degree() == 1) lin.push_back(f.neg(h.coeff(0)));
                }
                std::sort(lin.begin(), lin.end());
                EXPECT_EQ(lin, brute_roots(g));
                EXPECT_TRUE(std::is_sorted(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
                    return canonical_less(a.factor, b.factor);
                }));
            }
        }
    }
}

TEST(Factor, SeedIndependent) {
    const GaloisField f = GaloisField::get(7, 2);
    std::mt19937_64 rng(3);
    std::vector<GaloisField::Elem> c(11);
    for (auto& e : c) e = f.random(rng);
    c.back() = 1;
    const GPoly g(f, c);
    const auto a = factor_univariate(g, {.seed = 1});
    const auto b = factor_univariate(g, {.seed = 99});
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].factor, b[i].factor);
}

TEST(Factor, EmbeddingIsHomomorphism) {
    const GaloisField s = GaloisField::get(5, 2);
    const GaloisField l = GaloisField::get(5, 4);
    const FieldEmbedding emb(s, l);
    for (std::uint64_t a = 0; a < s.order(); ++a) {
        for (std::uint64_t b = 0; b < s.order(); b += 4) {
            EXPECT_EQ(emb(s.mul(a, b)), l.mul(emb(a), emb(b)));
            EXPECT_EQ(emb(s.add(a, b)), l.add(emb(a), emb(b)));
        }
    }
}

TEST(RationalRoots, SplitsRationalAndIrrational) {
    const RationalField q;
    // (t - 1/2)^2 (t + 3) (t^2 - 2)
    UPoly<RationalField> f(q, {Rational(-1, 2), Rational(1)});
    f = f * f * UPoly<RationalField>(q, {Rational(3), Rational(1)}) *
        UPoly<RationalField>(q, {Rational(-2), Rational(0), Rational(1)});
    const auto s = rational_roots(f);
    ASSERT_EQ(s.roots.size(), 2U);
    EXPECT_EQ(s.roots[0].first, Rational(-3));
    EXPECT_EQ(s.roots[1].first, Rational(1, 2));
    EXPECT_EQ(s.roots[1].second, 2U);
    ASSERT_EQ(s.irrational.size(), 1U);
    EXPECT_EQ(s.irrational[0].first.degree(), 2);
}

TEST(Bivariate, SquarefreeSpecExamples) {
    const GaloisField f5 = GaloisField::get(5);
    const auto x = bx(f5);
    const auto t = bt(f5);
    const auto mono = squarefree_decompose(x.pow(2) * t.pow(3));
    ASSERT_EQ(mono.size(), 2U);
    EXPECT_EQ(mono[0].factor, t);
    EXPECT_EQ(mono[0].multiplicity, 3U);
    EXPECT_EQ(mono[1].factor, x);
    EXPECT_EQ(mono[1].multiplicity, 2U);

    const auto cusp = squarefree_decompose(x.pow(3) - t.pow(2));
    ASSERT_EQ(cusp.size(), 1U);
    EXPECT_EQ(cusp[0].multiplicity, 1U);
    EXPECT_EQ(cusp[0].factor, x.pow(3) - t.pow(2));

    const GaloisField f7 = GaloisField::get(7);
    const auto x7 = bx(f7);
    const auto t7 = bt(f7);
    const auto nodes = squarefree_decompose((x7 - t7).pow(2) * (x7 + t7));
    ASSERT_EQ(nodes.size(), 2U);
    EXPECT_EQ(nodes[0].factor, x7 + t7);
    EXPECT_EQ(nodes[0].multiplicity, 1U);
    EXPECT_EQ(nodes[1].factor, x7 - t7);
    EXPECT_EQ(nodes[1].multiplicity, 2U);

    EXPECT_THROW(squarefree_decompose(BivariatePoly<GaloisField>(f7)), std::domain_error);
}

TEST(Bivariate, FrobeniusPower) {
    const GaloisField f5 = GaloisField::get(5);
    const auto x = bx(f5);
    const auto t = bt(f5);
    const auto sf = squarefree_decompose(x.pow(5) - t.pow(5));
    ASSERT_EQ(sf.size(), 1U);
    EXPECT_EQ(sf[0].factor, x - t);
    EXPECT_EQ(sf[0].multiplicity, 5U);
}

template <CoefficientField F>
void check_reassembly(const BivariatePoly<F>& g) {
    const auto parts = squarefree_decompose(g);
    BivariatePoly<F> prod = BivariatePoly<F>::constant(g.field(), g.field().one());
    for (const auto& [h, m] : parts) prod *= h.pow(m);
    EXPECT_EQ(prod.scaled(g.leading_term().second), g) << g.str();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& h = parts[i].factor;
        EXPECT_TRUE(gcd(h, h.dx()).is_constant() || gcd(gcd(h, h.dx()), h.dt()).is_constant()) << h.str();
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            EXPECT_TRUE(gcd(h, parts[j].factor).is_constant());
        }
    }
}

TEST(Bivariate, SquarefreeReassemblyProperty) {
    std::mt19937_64 rng(11);
    auto random_poly = [&](const auto& f, unsigned deg) {
        using P = std::decay_t<decltype(bx(f))>;
        P r(f);
        for (unsigned i = 0; i <= deg; ++i) {
            for (unsigned j = 0; i + j <= deg; ++j) {
                if (rng() % 3 == 0) r += P::term(f, f.from_int(static_cast<long long>(rng() % 9) - 4), i, j);
            }
        }
        if (r.is_constant()) r += bx(f);
        return r;
    };
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
        const GaloisField f = GaloisField::get(p);
        for (int it = 0; it < 20; ++it) {
            auto a = random_poly(f, 2);
            auto b = random_poly(f, 2);
            check_reassembly(a * a.pow(it % 3) * b);
        }
    }
    const RationalField q;
    for (int it = 0; it < 20; ++it) {
        auto a = random_poly(q, 2);
        auto b = random_poly(q, 2);
        check_reassembly(a.pow(2) * b);
    }
}

TEST(Bivariate, GcdAndDivision) {
    const RationalField q;
    const auto x = bx(q);
    const auto t = bt(q);
    const auto a = x.pow(2) - t.pow(3);
    const auto b = x * t + BivariatePoly<RationalField>::constant(q, Rational(1));
    EXPECT_EQ(gcd(a * b, b * (x - t)), b);
    EXPECT_EQ(exact_divide(a * b, b), a);
    EXPECT_THROW(exact_divide(a, b), std::logic_error);
    EXPECT_EQ((x.pow(5) - t.pow(4)).order_at_origin(), 4U);
    EXPECT_EQ((x.pow(3) - t.pow(2)).str(), "x^3 - t^2");
}
