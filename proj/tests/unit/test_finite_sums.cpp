#include "hbq/finite_sums.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace hbq;

TEST(Dedekind, KnownValues)
{
    EXPECT_EQ(dedekind_sum(1, 1), 0);
    EXPECT_EQ(dedekind_sum(1, 2), 0);
    EXPECT_EQ(dedekind_sum(1, 3), Rational(1, 18));
    EXPECT_EQ(dedekind_sum(2, 5), 0);
    for (std::int64_t k = 1; k <= 30; ++k) {
        EXPECT_EQ(dedekind_sum(1, k), Rational((k - 1) * (k - 2), 12 * k)) << k;
    }
}

TEST(Dedekind, Reciprocity)
{
    for (std::int64_t k = 1; k <= 25; ++k) {
        for (std::int64_t h = 1; h <= 25; ++h) {
            if (std::gcd(h, k) != 1) {
                continue;
            }
            const Rational rhs = Rational(-1, 4) + (Rational(h, k) + Rational(k, h) + Rational(1, h * k)) / 12;
            EXPECT_EQ(dedekind_sum(h, k) + dedekind_sum(k, h), rhs) << h << "," << k;
        }
    }
}

TEST(Dedekind, DenominatorDividesSixK)
{
    for (std::int64_t k = 1; k <= 40; ++k) {
        for (std::int64_t h = 1; h < k; ++h) {
            if (std::gcd(h, k) == 1) {
                EXPECT_TRUE(is_integer(dedekind_sum(h, k) * 6 * k)) << h << "," << k;
            }
        }
    }
}

TEST(Dedekind, OddAndPeriodicInH)
{
    EXPECT_EQ(dedekind_sum(-2, 7), -dedekind_sum(2, 7));
    EXPECT_EQ(dedekind_sum(2 + 7, 7), dedekind_sum(2, 7));
}

TEST(HardyBerndt, AnchorValues)
{
    EXPECT_EQ(hardy_berndt({SumVariant::S, 1, 2}), 1);
    EXPECT_EQ(hardy_berndt({SumVariant::s3, 1, 3}), Rational(1, 3));
    EXPECT_EQ(hardy_berndt({SumVariant::s4, 1, 3}), 2);
}

TEST(HardyBerndt, ReciprocityOfS)
{
    // S(h,k) + S(k,h) = 1 for h + k odd
    for (std::int64_t k = 1; k <= 20; ++k) {
        for (std::int64_t h = 1; h <= 20; ++h) {
            if (std::gcd(h, k) == 1 && (h + k) % 2 == 1) {
                EXPECT_EQ(hardy_berndt({SumVariant::S, h, k}) + hardy_berndt({SumVariant::S, k, h}), 1);
            }
        }
    }
}

TEST(HardyBerndt, ReciprocityOfS5)
{
    // s5(h,k) + s5(k,h) = 1/2 - 1/(2hk) for h, k odd
    for (std::int64_t k = 1; k <= 21; k += 2) {
        for (std::int64_t h = 1; h <= 21; h += 2) {
            if (std::gcd(h, k) == 1) {
                EXPECT_EQ(hardy_berndt({SumVariant::s5, h, k}) + hardy_berndt({SumVariant::s5, k, h}),
                          Rational(1, 2) - Rational(1, 2 * h * k))
                    << h << "," << k;
            }
        }
    }
}

TEST(HardyBerndt, RejectsNonCoprime)
{
    EXPECT_THROW(hardy_berndt({SumVariant::S, 2, 4}), DomainError);
    EXPECT_THROW(dedekind_sum(1, 0), DomainError);
}

TEST(Parity, Conditions)
{
    EXPECT_TRUE(parity_condition(SumVariant::S, 1, 2).holds);
    EXPECT_FALSE(parity_condition(SumVariant::S, 1, 3).holds);
    EXPECT_TRUE(parity_condition(SumVariant::s1, 2, 3).holds);
    EXPECT_TRUE(parity_condition(SumVariant::s2, 1, 4).holds);
    EXPECT_TRUE(parity_condition(SumVariant::s3, 4, 5).holds);
    EXPECT_TRUE(parity_condition(SumVariant::s4, 3, 4).holds);
    EXPECT_TRUE(parity_condition(SumVariant::s5, 3, 5).holds);
    EXPECT_FALSE(parity_condition(SumVariant::s5, 2, 5).holds);
}

TEST(Variant, ParseRoundTrip)
{
    for (auto v : {SumVariant::S, SumVariant::s1, SumVariant::s2, SumVariant::s3, SumVariant::s4, SumVariant::s5,
                   SumVariant::dedekind}) {
        EXPECT_EQ(parse_variant(to_string(v)), v);
    }
    EXPECT_THROW(parse_variant("s9"), DomainError);
}
