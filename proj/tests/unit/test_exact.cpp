#include "hbq/exact.hpp"

#include <gtest/gtest.h>

using namespace hbq;

TEST(ParseRational, AcceptsFractionsDecimalsAndIntegers)
{
    EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
    EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
    EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
    EXPECT_EQ(parse_rational("7"), Rational(7));
}

TEST(ParseRational, RejectsGarbage)
{
    EXPECT_THROW(parse_rational("1/0"), DomainError);
    EXPECT_THROW(parse_rational("abc"), DomainError);
    EXPECT_THROW(parse_rational("1/"), DomainError);
    EXPECT_THROW(parse_rational(""), DomainError);
}

TEST(Sawtooth, VanishesOnIntegersAndIsOdd)
{
    EXPECT_EQ(sawtooth(Rational(3)), 0);
    EXPECT_EQ(sawtooth(Rational(1, 4)), Rational(-1, 4));
    EXPECT_EQ(sawtooth(Rational(-1, 4)), Rational(1, 4));
    EXPECT_EQ(sawtooth(Rational(7, 3)), Rational(-1, 6));
    for (int n = -20; n <= 20; ++n) {
        const Rational x(n, 7);
        EXPECT_EQ(sawtooth(-x), -sawtooth(x));
        EXPECT_EQ(sawtooth(x + 1), sawtooth(x));
    }
}

TEST(FloorAndFrac, HandleNegatives)
{
    EXPECT_EQ(hbq::floor(Rational(-1, 2)), -1);
    EXPECT_EQ(hbq::floor(Rational(5, 2)), 2);
    EXPECT_EQ(frac(Rational(-1, 3)), Rational(2, 3));
}

TEST(QBracket, ExactValues)
{
    EXPECT_EQ(qbracket(3, Rational(1, 2)), Rational(7, 4));
    EXPECT_EQ(qbracket(0, Rational(1, 2)), 0);
    EXPECT_EQ(qbracket(5, Rational(1)), 5);
    // [n] = (1 - q^n)/(1 - q)
    const Rational q(2, 7);
    for (unsigned n = 0; n < 12; ++n) {
        EXPECT_EQ(qbracket(n, q), (1 - hbq::pow(q, n)) / (1 - q));
    }
}

TEST(QBracket, RealAndComplexAgreeWithExact)
{
    const auto q = QParam::parse("1/3");
    EXPECT_NEAR(qbracket_real(4.0, q), to_double(qbracket(4, Rational(1, 3))), 1e-15);
    const Complex c = qbracket_complex(Complex(4.0), Complex(1.0 / 3.0));
    EXPECT_NEAR(c.real(), to_double(qbracket(4, Rational(1, 3))), 1e-15);
    EXPECT_NEAR(qbracket_real(2.5, QParam::one()), 2.5, 0.0);
}

TEST(QParam, Regimes)
{
    EXPECT_TRUE(QParam::parse("1").is_limit());
    EXPECT_TRUE(QParam::parse("1/2").is_exact());
    EXPECT_EQ(QParam::parse("1/2").exact(), Rational(1, 2));
    EXPECT_EQ(QParam::parse("0.3").exact(), Rational(3, 10));
    const auto c = QParam::parse("0.1,0.2");
    EXPECT_FALSE(c.is_exact());
    EXPECT_THROW((void)c.exact(), DomainError);
    EXPECT_EQ(QParam::parse("1/2").power(3).exact(), Rational(1, 8));
    EXPECT_EQ(QParam::parse("2/5").to_string(), "2/5");
}

TEST(QParam, RejectsOutOfRange)
{
    EXPECT_THROW(QParam::parse("0"), DomainError);
    EXPECT_THROW(QParam::parse("3/2"), DomainError);
    EXPECT_THROW(QParam::parse("-1/2"), DomainError);
    EXPECT_THROW(QParam::complex(Complex(0.8, 0.8)), DomainError);
}

TEST(QParam, OneMinusIsExactBeforeRounding)
{
    const auto q = QParam::real(Rational(999999, 1000000));
    EXPECT_DOUBLE_EQ(q.one_minus().real(), 1e-6);
}
