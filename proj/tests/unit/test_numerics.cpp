#include "hbq/numerics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace hbq;

TEST(Gamma, FrozenComplexValue)
{
    const Complex g = gamma_complex(Complex(2.5, 1.0));
    EXPECT_NEAR(g.real(), 0.77476210455108367117, 1e-13);
    EXPECT_NEAR(g.imag(), 0.70763120437959258559, 1e-13);
}

TEST(Gamma, RecurrenceOnGrid)
{
    for (double re : {0.3, 1.0, 2.0, 2.5, 3.0, 7.25}) {
        for (double im : {0.0, 0.5, -2.0, 5.0}) {
            const Complex s(re, im);
            const Complex lhs = gamma_complex(s + 1.0);
            const Complex rhs = s * gamma_complex(s);
            EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::abs(lhs)) << re << "," << im;
        }
    }
}

TEST(Gamma, IntegersAndHalf)
{
    EXPECT_NEAR(gamma_complex(5.0).real(), 24.0, 24.0 * 1e-13);
    EXPECT_NEAR(gamma_complex(0.5).real(), std::sqrt(std::numbers::pi), 1e-13);
    // reflection branch
    EXPECT_NEAR(gamma_complex(-0.5).real(), -2.0 * std::sqrt(std::numbers::pi), 1e-12);
}

TEST(Integrate, SmoothAndPeaked)
{
    auto r = integrate([](double x) { return Complex(std::exp(-x * x)); }, 0.0, 6.0, 1e-13);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value.real(), 0.5 * std::sqrt(std::numbers::pi), 1e-12);
    auto p = integrate([](double x) { return Complex(1.0 / (1e-4 + x * x)); }, -1.0, 1.0, 1e-10);
    EXPECT_TRUE(p.converged);
    EXPECT_NEAR(p.value.real(), 2.0 * std::atan(1.0 / 1e-2) / 1e-2, 1e-8);
}

TEST(Integrate, ReportsNonConvergence)
{
    auto r = integrate([](double x) { return Complex(1.0 / std::sqrt(x)); }, 0.0, 1.0, 1e-15, 5);
    EXPECT_FALSE(r.converged);
}

TEST(Richardson, ExactOnPolynomials)
{
    // v(h) = 3 + 2h - h^2 is reproduced exactly at order 2
    std::vector<double> h{0.2, 0.1, 0.05, 0.025};
    std::vector<Complex> v;
    for (double x : h) {
        v.emplace_back(3.0 + 2.0 * x - x * x);
    }
    auto ex = richardson(h, v, 2);
    EXPECT_NEAR(ex.value.real(), 3.0, 1e-13);
    EXPECT_NEAR(richardson(h, v, 0).value.real(), v.back().real(), 0.0);
    EXPECT_THROW(richardson(h, v, 4), DomainError);
}

TEST(Cvz, AlternatingLog2)
{
    // sum (-1)^k / (k+1) = log 2
    const int n = 20;
    const Complex v = cvz_alternating([](int k) { return Complex(1.0 / (k + 1.0)); }, n);
    EXPECT_NEAR(v.real(), std::log(2.0), 2.0 / cvz_denominator(n) + 1e-15);
}
