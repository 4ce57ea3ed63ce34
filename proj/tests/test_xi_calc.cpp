#include "dcover/resolution/canonical.hpp"
#include "dcover/resolution/parser.hpp"
#include "dcover/xi_calc.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace dcover;

namespace {

std::string family_germ(unsigned a, unsigned b, std::uint64_t m, std::uint64_t n) {
    std::string s = "(x^" + std::to_string(m) + " - t^" + std::to_string(n) + ")";
    if (a) s = "x*" + s;
    if (b) s = "t*" + s;
    return s;
}

long long blowup_xi(unsigned a, unsigned b, std::uint64_t m, std::uint64_t n) {
    return canonical_resolution(BranchGerm<RationalField>(parse_polynomial(family_germ(a, b, m, n)))).xi;
}

const auto I = SingularityClass::I;
const auto II = SingularityClass::II;
const auto III = SingularityClass::III;
const auto IV = SingularityClass::IV;

}  // namespace

TEST(XiFamily, SpecExamples) {
    EXPECT_EQ(xi_family({0, 0, 1, 7}), 0);
    EXPECT_EQ(xi_family({0, 0, 5, 4}), 1);
    EXPECT_EQ(xi_family({1, 1, 3, 2}), 1);
    EXPECT_EQ(blowup_xi(0, 0, 5, 4), 1);
    EXPECT_EQ(blowup_xi(1, 1, 3, 2), 1);
    EXPECT_THROW(xi_family({0, 0, 4, 2}), std::invalid_argument);
    EXPECT_THROW(xi_family({2, 0, 3, 2}), std::invalid_argument);
}

TEST(XiFamily, BoundExamples) {
    EXPECT_EQ(xi_bound_family({1, 1, 3, 2}), Rational(1));
    EXPECT_EQ(xi_bound_family({0, 0, 5, 4}), Rational(6, 5));
    EXPECT_EQ(xi_bound_family({0, 0, 1, 9}), Rational(0));
    EXPECT_THROW(xi_bound_family({0, 0, 4, 3}), std::invalid_argument);
}

TEST(XiFamily, Symmetry) {
    for (unsigned a = 0; a <= 1; ++a) {
        for (unsigned b = 0; b <= 1; ++b) {
            for (std::uint64_t m = 1; m <= 20; ++m) {
                for (std::uint64_t n = 1; n <= 20; ++n) {
                    if (std::gcd(m, n) != 1) continue;
                    EXPECT_EQ(xi_family({a, b, m, n}), xi_family({b, a, n, m})) << a << b << m << n;
                }
            }
        }
    }
}

TEST(XiFamily, BoundSweep) {
    for (unsigned a = 0; a <= 1; ++a) {
        for (unsigned b = 0; b <= 1; ++b) {
            for (std::uint64_t m = 1; m <= 31; m += 2) {
                for (std::uint64_t n = 1; n <= 31; ++n) {
                    if (std::gcd(m, n) != 1) continue;
                    EXPECT_LE(Rational(xi_family({a, b, m, n})), xi_bound_family({a, b, m, n}));
                }
            }
        }
    }
}

TEST(XiFamily, MatchesBlowupOracle) {
    for (unsigned a = 0; a <= 1; ++a) {
        for (unsigned b = 0; b <= 1; ++b) {
            for (std::uint64_t m = 1; m <= 12; ++m) {
                for (std::uint64_t n = 1; n <= 12; ++n) {
                    if (std::gcd(m, n) != 1) continue;
                    EXPECT_EQ(xi_family({a, b, m, n}), blowup_xi(a, b, m, n)) << family_germ(a, b, m, n);
                }
            }
        }
    }
}

TEST(XiType, SpecExamples) {
    EXPECT_EQ(xi_type(I, RamificationType::tame(1), 5), 0);
    EXPECT_EQ(xi_type(II, RamificationType::tame(1), 5), 1);
    EXPECT_EQ(xi_type(III, RamificationType::wild(1, 5), 5), 3);
    EXPECT_EQ(xi_type(III, RamificationType::tame(1), 5), 0);
    EXPECT_THROW(xi_type(I, RamificationType::tame(4), 5), std::invalid_argument);
    EXPECT_THROW(xi_type(III, RamificationType::wild(2, 9), 5), std::invalid_argument);
    EXPECT_THROW(xi_type(I, RamificationType::tame(1), 3), std::invalid_argument);
    EXPECT_THROW(xi_type(I, RamificationType::tame(1), 9), std::invalid_argument);
}

TEST(XiType, TameMatchesBlowupOracle) {
    // A tame point of class (a, b) has local branch x^a t^b (x^p - t^(R+1)).
    for (std::uint64_t p : {5ULL, 7ULL}) {
        for (std::uint64_t R = 1; R <= 3 * p; ++R) {
            if ((R + 1) % p == 0) continue;
            for (auto c : {I, II, III, IV}) {
                EXPECT_EQ(xi_type(c, RamificationType::tame(R), p), blowup_xi(class_a(c), class_b(c), p, R + 1))
                    << to_string(c) << " p=" << p << " R=" << R;
            }
        }
    }
}

TEST(XiType, ClassesIAndIIDependOnROnly) {
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL}) {
        for (std::uint64_t j = 1; j <= 3; ++j) {
            for (std::uint64_t R = p * j; R <= p * j + p - 2; ++R) {
                for (auto c : {I, II}) {
                    EXPECT_EQ(xi_type(c, RamificationType::wild(j, R), p), xi_type(c, RamificationType::tame(R), p));
                }
            }
        }
    }
}

TEST(XiSlack, SpecExamples) {
    EXPECT_EQ(xi_inequality_slack(I, RamificationType::tame(1), 5), Rational(2, 5));
    EXPECT_EQ(xi_inequality_slack(II, RamificationType::tame(1), 5), Rational(2, 5));
    EXPECT_EQ(xi_inequality_slack(III, RamificationType::wild(1, 5), 5), Rational(0));
}

TEST(XiSlack, NonNegativeSweep) {
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL}) {
        for (auto c : {I, II, III, IV}) {
            for (std::uint64_t R = 0; R <= 4 * p; ++R) {
                if ((R + 1) % p == 0) continue;
                EXPECT_GE(xi_inequality_slack(c, RamificationType::tame(R), p), Rational(0));
            }
            for (std::uint64_t j = 1; j <= 3; ++j) {
                for (std::uint64_t R = p * j; R <= p * j + p - 2; ++R) {
                    EXPECT_GE(xi_inequality_slack(c, RamificationType::wild(j, R), p), Rational(0));
                }
            }
        }
        EXPECT_EQ(xi_inequality_slack(III, RamificationType::wild(1, p), p), Rational(0));
    }
}
