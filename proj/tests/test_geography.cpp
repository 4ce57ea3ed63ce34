#include "dcover/geography.hpp"

#include <gtest/gtest.h>

using namespace dcover;

namespace {

SurfaceInvariants inv(long long chi, long long k2, long long c2) {
    SurfaceInvariants s;
    s.chi = chi;
    s.K2 = k2;
    s.c2 = c2;
    return s;
}

}  // namespace

TEST(Geography, Noether) {
    EXPECT_TRUE(noether_check(inv(2, 64, -40)));
    EXPECT_TRUE(noether_check(inv(1, 14, -2)));
    EXPECT_FALSE(noether_check(inv(1, 14, 0)));
}

TEST(Geography, C2Floor) {
    auto s = inv(0, 0, -40);
    s.q = 11;
    EXPECT_TRUE(c2_floor_check(s));
    s.c2 = -41;
    EXPECT_FALSE(c2_floor_check(s));
    s.c2 = 0;
    EXPECT_TRUE(c2_floor_check(s));
    EXPECT_THROW(c2_floor_check(inv(0, 0, 0)), std::invalid_argument);
}

TEST(Geography, Kappa) {
    EXPECT_EQ(kappa_conjectural(5), Rational(1, 32));
    EXPECT_EQ(kappa_conjectural(7), Rational(5, 88));
    EXPECT_THROW(kappa_conjectural(3), std::invalid_argument);
    EXPECT_EQ(*kappa_proven_lower(7).value, Rational(0));
    EXPECT_EQ(*kappa_proven_lower(13).value, Rational(1, 20));
    EXPECT_EQ(*kappa_proven_lower(5).value, Rational(1, 32));
    EXPECT_TRUE(kappa_proven_lower(5).exact);
    EXPECT_FALSE(kappa_proven_lower(3).value.has_value());
    EXPECT_EQ(kappa_proven_lower(3).note, "positive, no explicit value");
}

TEST(Geography, KappaLimit) {
    Rational prev(0);
    for (auto p : primes_in_range(5, 1000)) {
        const Rational k = kappa_conjectural(p);
        // 1/12 - kappa = p / (3(3p^2 - 8p - 3)), checked against an independent closed form.
        const BigInt P = p;
        EXPECT_EQ(Rational(1, 12) - k, Rational(P, 3 * (3 * P * P - 8 * P - 3)));
        EXPECT_GT(k, prev);
        prev = k;
        if (p >= 7) {
            EXPECT_GT(k, *kappa_proven_lower(p).value);
        }
        if (p >= 100) {
            EXPECT_LT(Rational(1, 12) - k, Rational(BigInt(1), P));
        }
    }
}

TEST(Geography, Raynaud) {
    const auto a = raynaud_invariants(5, 4);
    EXPECT_EQ(a.chi, 2);
    EXPECT_EQ(a.K2, 64);
    EXPECT_EQ(a.c2, -40);
    EXPECT_EQ(*a.q, 11U);
    const auto b = raynaud_invariants(7, 8);
    EXPECT_EQ(b.chi, 20);
    EXPECT_EQ(b.K2, 352);
    EXPECT_EQ(b.c2, -112);
    EXPECT_EQ(*b.q, 29U);
    EXPECT_THROW(raynaud_invariants(5, 1), std::invalid_argument);
    EXPECT_THROW(raynaud_invariants(5, 0), std::invalid_argument);
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL}) {
        EXPECT_EQ(raynaud_admissible_l(p), (std::vector<std::uint64_t>{2, 4, 6}));
        for (auto l : raynaud_admissible_l(p)) {
            const auto s = raynaud_invariants(p, l);
            EXPECT_EQ(Rational(s.chi, s.K2), kappa_conjectural(p));
            EXPECT_EQ(12 * s.chi - s.K2, s.c2);
            EXPECT_EQ(s.c2, -4 * (BigInt(*s.q) - 1));
            EXPECT_TRUE(c2_floor_check(s));
        }
    }
}

TEST(Geography, Char3) {
    const auto a = char3_example(2);
    EXPECT_EQ(a.q_minus_1, 20);
    EXPECT_EQ(a.m, 8);
    EXPECT_EQ(a.c2_upper, -56);
    const auto b = char3_example(3);
    EXPECT_EQ(b.q_minus_1, 299);
    EXPECT_EQ(b.m, 26);
    EXPECT_EQ(b.c2_upper, -1118);
    EXPECT_THROW(char3_example(1), std::invalid_argument);
    const auto six = char3_example(6);
    const Rational ratio(six.c2_upper, six.q_minus_1);
    EXPECT_LT(ratio - Rational(-4), Rational(1, 10));
    Rational prev(-1000);
    for (unsigned n = 2; n <= 8; ++n) {
        const auto e = char3_example(n);
        const Rational r(e.c2_upper, e.q_minus_1);
        EXPECT_GT(r, Rational(-4));
        if (n > 2) {
            EXPECT_LT(r - Rational(-4), prev - Rational(-4));
        }
        prev = r;
    }
}

TEST(Geography, CanonicalMap) {
    const auto b = canonical_map_bounds(5, 3, Rational(1, 32));
    EXPECT_EQ(b.g_max, Rational(41));
    EXPECT_EQ(*b.d_max, Rational(128));
    EXPECT_THROW(canonical_map_bounds(5, 2, Rational(1, 32)), std::invalid_argument);
    EXPECT_FALSE(canonical_map_bounds(5, 2, Rational(1, 32), false).d_max.has_value());
}

TEST(Geography, SbLowerBound) {
    const auto r = sb_lower_bound_check(raynaud_invariants(7, 8));
    EXPECT_TRUE(r.applicable);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.slack, Rational(352) - Rational(224, 3));
    auto s = inv(0, 8, 0);
    s.g = 3;
    s.q = 4;
    s.p = 5;
    EXPECT_FALSE(sb_lower_bound_check(s).pass);
    EXPECT_TRUE(sb_lower_bound_check(s).applicable);
    s.g = 2;
    EXPECT_FALSE(sb_lower_bound_check(s).applicable);
}

TEST(Geography, IntersectionFloor) {
    EXPECT_FALSE(intersection_floor_check(Rational(6), 1, 8, 11));
    EXPECT_TRUE(intersection_floor_check(Rational(6), 1, 20, 11));
    EXPECT_TRUE(intersection_floor_check(Rational(6), 0, 0, 11));
    EXPECT_FALSE(intersection_floor_check(Rational(6), 0, -31, 11));
    // Brute-force the threshold: the least passing K.B for lambda = 6, r = 1, q - 1 = 10.
    // (sqrt(84) - 6) * 5 = 15.825..., so 16 is the first passing value.
    EXPECT_FALSE(intersection_floor_check(Rational(6), 1, 15, 11));
    EXPECT_TRUE(intersection_floor_check(Rational(6), 1, 16, 11));
}

TEST(Geography, Clifford) {
    EXPECT_EQ(clifford_case(4, 3, 2), CliffordCase::case1);
    EXPECT_EQ(clifford_case(2, 2, 2), CliffordCase::case2);
    EXPECT_EQ(clifford_case(4, 5, 2), CliffordCase::inconsistent);
}

TEST(Geography, DeltaDegree) {
    EXPECT_EQ(delta_degree(2, 5), Rational(5));
    EXPECT_EQ(delta_degree(2, 3), Rational(6));
    EXPECT_THROW(delta_degree(13, 5), std::invalid_argument);
    EXPECT_THROW(delta_degree(1, 5), std::invalid_argument);
}

TEST(Geography, Char0Reference) {
    // Raynaud surfaces break both characteristic 0 inequalities' companion BMY.
    const auto r = char0_reference_checks(raynaud_invariants(5, 4));
    EXPECT_FALSE(r.bmy);
    EXPECT_EQ(r.tag, "char-0 only");
}
