#include "hbq/q_zeta.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hbq;

namespace {
const QParam half = QParam::parse("1/2");
}

TEST(QZeta, FrozenValues)
{
    EXPECT_NEAR(im_q(2.0, half, 1e-15).value.real(), -0.41754767615490108464, 1e-13);
    EXPECT_NEAR(im_q(3.0, half, 1e-15).value.real(), -0.23391288066434559033, 1e-13);
    EXPECT_NEAR(im_q_hurwitz(2.0, 0.5, half, 1e-15).value.real(), 3.7483111565666427922, 1e-13);
    EXPECT_NEAR(l_q(2.0, parse_character("4:1"), half, 1e-15).value.real(), -0.46591675698014625360, 1e-13);
    EXPECT_NEAR(cck_zeta(2.0, half, 1e-15).value.real(), 0.31316075711617581348, 1e-13);
}

TEST(QZeta, GenocchiScaleIsOnePlusQ)
{
    const auto a = im_q(2.5, half, 1e-14);
    const auto b = im_q(2.5, half, 1e-14, true);
    EXPECT_NEAR(b.value.real(), 1.5 * a.value.real(), 1e-13);
}

TEST(QZeta, TailBoundIsHonest)
{
    const auto loose = im_q(2.0, half, 1e-6);
    const auto tight = im_q(2.0, half, 1e-15);
    EXPECT_LE(std::abs(loose.value - tight.value), loose.tail_bound + 1e-15);
    EXPECT_LE(loose.tail_bound, 1e-6);
}

TEST(QZeta, LimitOneIsClassical)
{
    const auto one = QParam::one();
    EXPECT_NEAR(im_q(2.0, one, 1e-14).value.real(), -0.82246703342411321824, 1e-13);
    EXPECT_NEAR(im_q(2.0, one, 1e-14, true).value.real(), -2.0 * 0.82246703342411321824, 1e-13);
    EXPECT_NEAR(zeta_q(2.0, one, 1e-14).value.real(), 1.6449340668482264365, 1e-13);
}

TEST(QZeta, ContinuityTowardsOne)
{
    const double target = genocchi_zeta_classical(2.0, 1e-15).value.real();
    double previous = 1e300;
    for (int k = 2; k <= 5; ++k) {
        const auto q = QParam::real(1 - Rational(1, static_cast<int>(std::pow(10, k))));
        const double d = std::abs(im_q(2.0, q, 1e-13, true).value.real() - target);
        EXPECT_LT(d, previous) << k;
        previous = d;
    }
    EXPECT_LE(previous, 1e-3);
}

TEST(QZeta, PrincipalCharacterModOneReduces)
{
    const auto one = principal_character(1);
    EXPECT_NEAR(l_q(2.0, one, half, 1e-14).value.real(), im_q(2.0, half, 1e-14).value.real(), 1e-13);
    EXPECT_NEAR(big_l_q(3.0, one, half, 1e-14).value.real(), zeta_q(3.0, half, 1e-14).value.real(), 1e-13);
}

TEST(QZeta, HurwitzVariantsRelation)
{
    // bracket form at x equals the additive form at [x]; at x = 1 both are -q^{1-s} Im_q(s)
    const double x = 0.3;
    const double bx = qbracket_real(x, half);
    const auto bracket = im_q_hurwitz(2.0, x, half, 1e-14, HurwitzVariant::Bracket);
    const auto additive = im_q_hurwitz(2.0, bx, half, 1e-14, HurwitzVariant::Additive);
    EXPECT_NEAR(bracket.value.real(), additive.value.real(), 1e-12);
    const double expected = -std::pow(0.5, -1.0) * im_q(2.0, half, 1e-14).value.real();
    EXPECT_NEAR(im_q_hurwitz(2.0, 1.0, half, 1e-14, HurwitzVariant::Additive).value.real(), expected, 1e-12);
    EXPECT_NEAR(im_q_hurwitz(2.0, 1.0, half, 1e-14, HurwitzVariant::Bracket).value.real(), expected, 1e-12);
    EXPECT_THROW(im_q_hurwitz(2.0, 0.0, half, 1e-10), DomainError);
}

TEST(QZeta, ComplexBase)
{
    // a complex q with zero imaginary part agrees with the real route
    const auto qc = QParam::complex(Complex(0.5, 1e-300));
    EXPECT_NEAR(im_q(2.0, qc, 1e-13).value.real(), -0.41754767615490108464, 1e-11);
    const auto qr = QParam::complex(Complex(0.3, 0.4));
    const auto v = im_q(3.0, qr, 1e-12);
    EXPECT_TRUE(std::isfinite(v.value.real()));
    EXPECT_LE(v.tail_bound, 1e-12);
}

TEST(QZeta, DomainErrors)
{
    EXPECT_THROW(im_q(1.0, half, 1e-10), DomainError);
    EXPECT_THROW(im_q(2.0, half, 0.0), DomainError);
    EXPECT_THROW(cck_zeta(2.0, QParam::one(), 1e-10), DomainError);
}

TEST(Decomposition, Theorem5FrozenAndGrid)
{
    const auto chi3 = parse_character("3:1");
    const auto o = verify_theorem5(2.0, chi3, half, 1e-10);
    EXPECT_TRUE(o.pass);
    EXPECT_NEAR(o.lhs.real(), -0.88147620574146059274, 1e-12);
    for (std::uint64_t f : {3, 5, 7}) {
        for (const auto& chi : characters_mod(f)) {
            for (const char* q : {"1/2", "1/3", "4/5"}) {
                const auto r = verify_theorem5(2.5, chi, QParam::parse(q), 1e-10);
                EXPECT_TRUE(r.pass) << chi.label() << " q=" << q << " diff=" << r.abs_diff;
            }
        }
    }
}

TEST(Decomposition, Theorem6Grid)
{
    for (const auto& chi : characters_mod(5)) {
        for (double x : {0.25, 0.5, 1.0}) {
            const auto r = verify_theorem6(3.0, x, chi, QParam::parse("1/3"), 1e-10);
            EXPECT_TRUE(r.pass) << chi.label() << " x=" << x << " diff=" << r.abs_diff;
        }
    }
}

TEST(Decomposition, EvenConductorRejected)
{
    EXPECT_THROW(verify_theorem5(2.0, parse_character("4:1"), half, 1e-10), DomainError);
}

TEST(Decomposition, AlternativeBracketReadingDiffersByRatio)
{
    const auto o = verify_theorem5(2.0, parse_character("3:1"), half, 1e-10);
    Complex alt = 0.0;
    for (const auto& [k, v] : o.extras) {
        if (k == "rhs_with_[2]_at_q^f") {
            alt = v;
        }
    }
    EXPECT_NEAR(std::abs(o.rhs / alt), 1.5 / 1.125, 1e-12);
}
