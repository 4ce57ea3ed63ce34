#include "dcover/resolution/canonical.hpp"
#include "dcover/resolution/germ.hpp"
#include "dcover/resolution/parser.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dcover;

namespace {

BranchGerm<RationalField> q_germ(const std::string& s) { return BranchGerm<RationalField>(parse_polynomial(s)); }

BranchGerm<GaloisField> f_germ(const std::string& s, std::uint64_t p, unsigned k = 1) {
    return BranchGerm<GaloisField>(reduce_mod(parse_polynomial(s), GaloisField::get(p, k)));
}

std::vector<std::pair<unsigned, unsigned>> ml_sequence(const ResolutionTrace& t) {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (const auto& s : t.steps) out.emplace_back(s.m, s.l);
    return out;
}

using ML = std::vector<std::pair<unsigned, unsigned>>;

}  // namespace

TEST(Parser, Grammar) {
    EXPECT_EQ(parse_polynomial("x^3 - t^2").str(), "x^3 - t^2");
    EXPECT_EQ(parse_polynomial(" x * t * ( x - t ) ").str(), "x^2*t - x*t^2");
    EXPECT_EQ(parse_polynomial("-(x+t)^2").str(), "-x^2 - 2*x*t - t^2");
    EXPECT_EQ(parse_polynomial("3*x - 3*x").str(), "0");
    try {
        parse_polynomial("x^3 - y");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 6U);
    }
    EXPECT_THROW(parse_polynomial("x t"), ParseError);
    EXPECT_THROW(parse_polynomial("(x"), ParseError);
    EXPECT_THROW(parse_polynomial(""), ParseError);
    EXPECT_THROW(parse_polynomial("x^"), ParseError);
}

TEST(Parser, FieldSpec) {
    EXPECT_EQ(field_name(parse_field_spec("Q")), "Q");
    EXPECT_EQ(field_name(parse_field_spec("F5")), "F5");
    EXPECT_EQ(field_name(parse_field_spec("F7^2")), "F7^2");
    EXPECT_THROW(parse_field_spec("F2"), std::invalid_argument);
    EXPECT_THROW(parse_field_spec("F9"), std::invalid_argument);
    EXPECT_THROW(parse_field_spec("R"), std::invalid_argument);
    EXPECT_THROW(parse_field_spec("F5^"), std::invalid_argument);
}

TEST(Germ, Validation) {
    EXPECT_THROW(q_germ("x + 1"), std::invalid_argument);
    EXPECT_THROW(q_germ("x - x"), std::invalid_argument);
}

TEST(Germ, Multiplicity) {
    EXPECT_EQ(multiplicity_at_origin(q_germ("x^3 - t^2")), 2U);
    EXPECT_EQ(multiplicity_at_origin(q_germ("x^5 - t^4")), 4U);
    EXPECT_EQ(multiplicity_at_origin(q_germ("x*t*(x-t)")), 3U);
}

TEST(Germ, NormalizeBranch) {
    const auto a = normalize_branch(q_germ("x^2*t^3"));
    EXPECT_EQ(a.b1.str(), "t");
    EXPECT_EQ(a.b0.str(), "x*t");
    const auto b = normalize_branch(f_germ("x^5 - t^4", 5));
    EXPECT_EQ(b.b1.str(), "x^5 + 4*t^4");
    EXPECT_EQ(b.b0.str(), "1");
    const auto c = normalize_branch(q_germ("(x-t)^2*(x+t)"));
    EXPECT_EQ(c.b1.str(), "x + t");
    EXPECT_EQ(c.b0.str(), "x - t");
}

TEST(Blowup, SpecExamples) {
    const auto a = blowup_once(q_germ("x^5 - t^4"), 4);
    // Chart A: x1 - t1^4 (regular); chart B: x2^5*t2 - 1 misses the origin.
    EXPECT_EQ(a.chart_a.str(), "-t^4 + x");
    EXPECT_EQ(a.chart_b.str(), "x^5*t - 1");
    ASSERT_EQ(a.points.size(), 1U);
    EXPECT_EQ(a.points[0].center, "A:t1=0");
    EXPECT_FALSE(a.points[0].singular);

    const auto b = blowup_once(q_germ("x*t"), 2);
    EXPECT_EQ(b.chart_a.str(), "t");
    EXPECT_EQ(b.chart_b.str(), "x");
    ASSERT_EQ(b.points.size(), 2U);
    EXPECT_FALSE(b.points[0].singular);
    EXPECT_FALSE(b.points[1].singular);

    const auto c = blowup_once(q_germ("x^3 - t^2"), 2);
    EXPECT_EQ(c.chart_b.str(), "x^3*t - 1");
    EXPECT_EQ(c.chart_a.str(), "-t^2 + x");
    ASSERT_EQ(c.points.size(), 1U);
    EXPECT_EQ(c.points[0].multiplicity, 1U);

    EXPECT_THROW(blowup_once(q_germ("x^2*t"), 3), std::invalid_argument);
    EXPECT_THROW(blowup_once(q_germ("x^3 - t^2"), 3), std::invalid_argument);
}

TEST(Resolution, HandTraces) {
    const auto a = canonical_resolution(q_germ("x^3 - t^2"));
    EXPECT_EQ(ml_sequence(a), (ML{{2, 1}}));
    EXPECT_EQ(a.xi, 0);
    EXPECT_EQ(a.k2_defect, 0);

    const auto b = canonical_resolution(q_germ("x^5 - t^4"));
    EXPECT_EQ(ml_sequence(b), (ML{{4, 2}}));
    EXPECT_EQ(b.xi, 1);
    EXPECT_EQ(b.k2_defect, 2);
    EXPECT_EQ(b.chi_defect, -1);

    const auto c = canonical_resolution(q_germ("x*t"));
    EXPECT_EQ(c.xi, 0);
    EXPECT_EQ(ml_sequence(c), (ML{{2, 1}}));

    // Three lines: m = 3 leaves E in the branch, giving three nodes on E.
    const auto d = canonical_resolution(q_germ("x*t*(x-t)"));
    EXPECT_EQ(ml_sequence(d), (ML{{3, 1}, {2, 1}, {2, 1}, {2, 1}}));
    EXPECT_EQ(d.xi, 0);

    const auto e = canonical_resolution(f_germ("x^5 - t^4", 5));
    EXPECT_EQ(e.xi, 1);
    EXPECT_EQ(e.k2_defect, 2);
}

TEST(Resolution, FrobeniusPowerNormalizedFirst) {
    const auto t = canonical_resolution(f_germ("x^5 - t^5", 5));
    EXPECT_EQ(t.reduced, "x + 4*t");
    EXPECT_EQ(t.doubled, "x^2 + 3*x*t + t^2");
    EXPECT_TRUE(t.steps.empty());
    EXPECT_EQ(t.xi, 0);
}

TEST(Resolution, DepthGuard) {
    ResolutionOptions o;
    o.max_blowups = 3;
    EXPECT_THROW(canonical_resolution(q_germ("x^2 - t^40"), o), ResolutionError);
    try {
        canonical_resolution(q_germ("x^2 - t^40"), o);
    } catch (const ResolutionError& e) {
        EXPECT_NE(std::string(e.what()).find("resolution depth exceeded"), std::string::npos);
    }
    EXPECT_NO_THROW(canonical_resolution(q_germ("x^2 - t^40")));
}

TEST(Resolution, ExtensionPoints) {
    // x^2 + t^2 has tangent directions t1 = +-i; over F7 they are conjugate.
    // Adding E (odd multiplicity) makes those points singular.
    const auto g = f_germ("x*(x^2 + t^2) + t^4", 7);
    const auto tr = canonical_resolution(g);
    ASSERT_GE(tr.steps.size(), 3U);
    EXPECT_EQ(tr.steps[1].field, "F7^2");
    EXPECT_EQ(tr.steps[2].field, "F7^2");
    EXPECT_EQ(tr.xi, 0);
    // Over F13 the directions are rational and the trace has the same shape.
    const auto tr13 = canonical_resolution(f_germ("x*(x^2 + t^2) + t^4", 13));
    EXPECT_EQ(ml_sequence(tr13), ml_sequence(tr));
    EXPECT_THROW(canonical_resolution(q_germ("x*(x^2 + t^2) + t^4")), ResolutionError);
    // Regular conjugate points do not force an extension, even over Q.
    EXPECT_NO_THROW(canonical_resolution(q_germ("x^2 + t^2")));
    EXPECT_EQ(canonical_resolution(q_germ("x^2 + t^2")).steps.front().successors.front().points, 2U);
}

TEST(Resolution, TotalsMatchSteps) {
    for (const char* s : {"x^3 - t^2", "x^7 - t^4", "x*t*(x^5 - t^3)", "(x^2 - t^3)*(x^3 - t^2)", "x^4 - t^4 + x^5"}) {
        const auto tr = canonical_resolution(q_germ(s));
        long long xi = 0;
        long long k2 = 0;
        for (const auto& st : tr.steps) {
            EXPECT_GE(st.m, 2U);
            EXPECT_EQ(st.l, st.m / 2);
            xi += static_cast<long long>(st.l) * (st.l - 1) / 2;
            k2 += 2LL * (st.l - 1) * (st.l - 1);
        }
        EXPECT_EQ(tr.xi, xi) << s;
        EXPECT_EQ(tr.k2_defect, k2) << s;
        EXPECT_EQ(tr.chi_defect, -tr.xi) << s;
        EXPECT_GE(tr.xi, 0);
    }
}

TEST(Resolution, Deterministic) {
    const auto a = canonical_resolution(f_germ("(x^2 - t^3)*(x^2 + t^3) + x^6", 7));
    const auto b = canonical_resolution(f_germ("(x^2 - t^3)*(x^2 + t^3) + x^6", 7));
    ASSERT_EQ(a.steps.size(), b.steps.size());
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
        EXPECT_EQ(a.steps[i].center, b.steps[i].center);
        EXPECT_EQ(a.steps[i].equation, b.steps[i].equation);
    }
}

TEST(Resolution, OrderIndependenceOnSample) {
    std::mt19937_64 rng(5);
    int checked = 0;
    const char* fixed[] = {"x*t*(x-t)*(x+t)", "(x^2-t^3)*(x^3-t^2)", "x*t*(x-t^2)*(x+t^3)", "(x-t)^3*(x+t)+t^7"};
    for (const char* s : fixed) {
        ResolutionOptions rev;
        rev.reverse_order = true;
        EXPECT_EQ(canonical_resolution(f_germ(s, 7)).xi, canonical_resolution(f_germ(s, 7), rev).xi) << s;
        ++checked;
    }
    // Random products of cusps and lines through the origin.
    while (checked < 24) {
        std::string s = "1";
        const int parts = 2 + static_cast<int>(rng() % 3);
        for (int i = 0; i < parts; ++i) {
            const int a = 1 + static_cast<int>(rng() % 4);
            const int b = 1 + static_cast<int>(rng() % 4);
            const int c = 1 + static_cast<int>(rng() % 5);
            s += "*(" + std::to_string(c) + "*x^" + std::to_string(a) + " - t^" + std::to_string(b) + ")";
        }
        const auto g = f_germ(s, 11);
        ResolutionOptions rev;
        rev.reverse_order = true;
        const auto fwd = canonical_resolution(g);
        const auto bwd = canonical_resolution(g, rev);
        EXPECT_EQ(fwd.xi, bwd.xi) << s;
        EXPECT_EQ(fwd.steps.size(), bwd.steps.size()) << s;
        ++checked;
    }
    EXPECT_GE(checked, 20);
}

TEST(Negligible, SpecExamples) {
    EXPECT_EQ(is_negligible(q_germ("x*t")), Negligibility::first_kind);
    EXPECT_EQ(is_negligible(q_germ("x*t*(x-t)")), Negligibility::second_kind);
    EXPECT_EQ(is_negligible(q_germ("x^5 - t^4")), Negligibility::not_negligible);
    EXPECT_EQ(is_negligible(q_germ("x*(x - t^2)")), Negligibility::first_kind);
    EXPECT_EQ(is_negligible(q_germ("x*t*(x - t^2)")), Negligibility::second_kind);
    // Three pairwise tangent branches.
    EXPECT_EQ(is_negligible(q_germ("x*(x - t^2)*(x + t^2)")), Negligibility::not_negligible);
    EXPECT_EQ(is_negligible(q_germ("x^3 - t^2")), Negligibility::not_negligible);
    EXPECT_EQ(is_negligible(f_germ("x^2 + t^2", 7)), Negligibility::first_kind);
}

TEST(Negligible, ImpliesXiZero) {
    const char* germs[] = {"x*t",           "x*(x-t^2)",        "x*(x-t^5)",      "x*t*(x-t)",   "x*t*(x-t^3)",
                           "(x-t)*(x+t)*t", "x*(x-t)*(x-t^2)",  "x^2 - t^2 + t^3", "x*(x+t)*(x-t^4)"};
    for (const char* s : germs) {
        const auto g = f_germ(s, 11);
        const auto n = is_negligible(g);
        EXPECT_NE(n, Negligibility::not_negligible) << s;
        EXPECT_EQ(canonical_resolution(g).xi, 0) << s;
    }
}

TEST(Resolution, CharacteristicIndependenceOnMonomialFamily) {
    for (unsigned a = 0; a <= 1; ++a) {
        for (unsigned b = 0; b <= 1; ++b) {
            for (unsigned m = 1; m <= 12; ++m) {
                for (unsigned n = 1; n <= 12; ++n) {
                    if (std::gcd(m, n) != 1) continue;
                    std::string s = "x^" + std::to_string(m) + " - t^" + std::to_string(n);
                    if (a) s = "x*(" + s + ")";
                    if (b) s = "t*(" + s + ")";
                    const auto q = ml_sequence(canonical_resolution(q_germ(s)));
                    for (std::uint64_t p : {13ULL}) {
                        EXPECT_EQ(ml_sequence(canonical_resolution(f_germ(s, p))), q) << s;
                    }
                }
            }
        }
    }
}
