#pragma once

// Riemann, odd-denominator, Genocchi and Hurwitz zeta functions, the
// Hurwitz-Lerch transcendent and the digamma function.

#include "hbq/dirichlet.hpp"
#include "hbq/exact.hpp"
#include "hbq/numbers.hpp"
#include "hbq/numerics.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <vector>

namespace hbq {

namespace detail {

// B_{2j} as doubles for j = 0..max_j.
inline const std::vector<double>& even_bernoulli()
{
    static const std::vector<double> table = [] {
        auto b = number_table(NumberKind::Bernoulli, 120);
        std::vector<double> out;
        for (std::size_t j = 0; 2 * j < b.size(); ++j) {
            out.push_back(to_double(b[2 * j]));
        }
        return out;
    }();
    return table;
}

inline Rational zeta_one_minus(const NumberTable& b, unsigned n)
{
    return (n % 2 == 1 ? b[n] : -b[n]) / Rational(n);
}

inline bool is_nonpositive_integer(Complex s)
{
    return s.imag() == 0.0 && s.real() <= 0.0 && std::floor(s.real()) == s.real();
}

}  // namespace detail

/// eta(s) = sum_{n>=1} (-1)^{n-1} n^{-s} for Re(s) > 0.
inline SeriesValue dirichlet_eta(Complex s, double tol)
{
    if (!(tol > 0.0)) {
        throw DomainError("tolerance must be positive");
    }
    const double sigma = s.real();
    if (!(sigma > 0.0)) {
        throw DomainError("eta series route needs Re(s) > 0");
    }
    // (n+1)^{-s} = int_0^1 x^n w(x) dx with int |w| = Gamma(sigma)/|Gamma(s)|
    const double weight = std::exp(std::lgamma(sigma) - std::real(lgamma_complex(s)));
    int n = 4;
    double bound = 0.0;
    for (;; n += 2) {
        bound = 2.0 * weight / cvz_denominator(n);
        if (bound <= tol || n >= 400) {
            break;
        }
    }
    Complex value = cvz_alternating([&](int k) { return cpow_neg(static_cast<double>(k + 1), s); }, n);
    return {value, bound, n};
}

/// zeta(s): alternating-series route for Re(s) > 0, Bernoulli route at s = 0, -1, -2, ...
inline SeriesValue riemann_zeta(Complex s, double tol)
{
    if (s == Complex(1.0, 0.0)) {
        throw DomainError("zeta has a pole at s = 1");
    }
    if (detail::is_nonpositive_integer(s)) {
        const auto n = static_cast<unsigned>(1.0 - s.real());
        auto b = number_table(NumberKind::Bernoulli, n);
        // zeta(1 - n) = (-1)^{n+1} B_n / n, which also covers n = 1 with B_1 = -1/2
        return {Complex(to_double(detail::zeta_one_minus(b, n)), 0.0), 0.0, 1};
    }
    if (!(s.real() > 0.0)) {
        throw DomainError("zeta is implemented for Re(s) > 0 and at non-positive integers");
    }
    const Complex factor = 1.0 - std::pow(2.0, 1.0 - s);
    if (std::abs(factor) < 1e-12) {
        throw DomainError("1 - 2^(1-s) vanishes; the eta route cannot separate zeta here");
    }
    auto eta = dirichlet_eta(s, tol * std::abs(factor));
    return {eta.value / factor, eta.tail_bound / std::abs(factor), eta.terms_used};
}

/// zeta_G(s) = 2 sum (-1)^n n^{-s} = -2 eta(s); exact at s = 1 - n through Bernoulli numbers.
inline SeriesValue genocchi_zeta_classical(Complex s, double tol)
{
    if (detail::is_nonpositive_integer(s)) {
        const auto n = static_cast<unsigned>(1.0 - s.real());
        auto b = number_table(NumberKind::Bernoulli, n);
        Rational v = -2 * (1 - pow(Rational(2), n)) * detail::zeta_one_minus(b, n);
        return {Complex(to_double(v), 0.0), 0.0, 1};
    }
    auto eta = dirichlet_eta(s, tol / 2.0);
    return {-2.0 * eta.value, 2.0 * eta.tail_bound, eta.terms_used};
}

/// Exact zeta_G(1 - n) = -2 (1 - 2^n) zeta(1 - n) for n >= 1.
inline Rational genocchi_zeta_at_negative(unsigned n)
{
    if (n == 0) {
        throw DomainError("n must be positive");
    }
    auto b = number_table(NumberKind::Bernoulli, n);
    return -2 * (1 - pow(Rational(2), n)) * detail::zeta_one_minus(b, n);
}

/// zeta(s, a) by Euler-Maclaurin summation with N direct terms.
inline SeriesValue hurwitz_zeta(Complex s, double a, double tol)
{
    if (!(a > 0.0)) {
        throw DomainError("Hurwitz zeta needs a > 0");
    }
    if (s == Complex(1.0, 0.0)) {
        throw DomainError("Hurwitz zeta has a pole at s = 1");
    }
    if (!(tol > 0.0)) {
        throw DomainError("tolerance must be positive");
    }
    const double sigma = s.real();
    const auto& b2 = detail::even_bernoulli();
    const int n_direct = std::max(10, static_cast<int>(std::ceil(std::abs(s))) + 10);
    const double x = n_direct + a;

    Complex sum = 0.0;
    for (int k = 0; k < n_direct; ++k) {
        sum += cpow_neg(k + a, s);
    }
    const Complex xs = cpow_neg(x, s);
    sum += x * xs / (s - 1.0) + 0.5 * xs;

    // term j: B_{2j}/(2j)! (s)_{2j-1} x^{-s-2j+1}
    Complex rising = s;  // (s)_{2j-1}
    double fact = 2.0;   // (2j)!
    Complex xpow = xs / x;
    double bound = 0.0;
    int j = 1;
    for (; j < static_cast<int>(b2.size()) - 1; ++j) {
        sum += b2[j] / fact * rising * xpow;
        // remainder after j terms is bounded by the next term's envelope
        const Complex next_rising = rising * (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
        const double next_fact = fact * (2.0 * j + 1.0) * (2.0 * j + 2.0);
        bound = 2.0 * std::abs(b2[j + 1]) / next_fact * std::abs(next_rising) *
                std::pow(x, -sigma - 2.0 * j - 1.0) / std::max(sigma + 2.0 * j + 1.0, 1.0);
        rising = next_rising;
        fact = next_fact;
        xpow /= x * x;
        if (bound <= tol) {
            break;
        }
    }
    return {sum, bound, n_direct + j};
}

/// Sum_{m>=1} (2m-1)^{-s} as 2^{-s} zeta(s, 1/2).
inline SeriesValue zeta_star_direct(Complex s, double tol)
{
    if (!(s.real() > 1.0)) {
        throw DomainError("the odd-denominator series needs Re(s) > 1");
    }
    const double scale = std::abs(std::pow(2.0, -s));
    auto h = hurwitz_zeta(s, 0.5, tol / scale);
    return {std::pow(2.0, -s) * h.value, scale * h.tail_bound, h.terms_used};
}

/// (1 - 2^{-s}) zeta(s), valid for Re(s) > 0.
inline SeriesValue zeta_star_identity(Complex s, double tol)
{
    const Complex factor = 1.0 - std::pow(2.0, -s);
    auto z = riemann_zeta(s, tol / std::max(std::abs(factor), 1e-300));
    return {factor * z.value, std::abs(factor) * z.tail_bound, z.terms_used};
}

inline SeriesValue zeta_star(Complex s, double tol)
{
    if (s.real() > 1.0) {
        return zeta_star_direct(s, tol);
    }
    return zeta_star_identity(s, tol);
}

/// Phi(z, s, a) = sum_{m>=0} z^m (m + a)^{-s}.
inline SeriesValue lerch_phi(Complex z, Complex s, double a, double tol, std::int64_t terms_max = 10'000'000)
{
    if (!(a > 0.0)) {
        throw DomainError("Lerch transcendent needs a > 0");
    }
    if (!(tol > 0.0)) {
        throw DomainError("tolerance must be positive");
    }
    const double r = std::abs(z);
    const double sigma = s.real();
    if (r > 1.0 + 1e-15) {
        throw DomainError("Lerch transcendent needs |z| <= 1");
    }
    if (std::abs(z - 1.0) < 1e-15) {
        if (!(sigma > 1.0)) {
            throw DomainError("Lerch transcendent at z = 1 needs Re(s) > 1");
        }
        return hurwitz_zeta(s, a, tol);
    }
    const bool on_circle = r > 1.0 - 1e-15;
    if (on_circle && !(sigma > 1.0)) {
        throw DomainError("Lerch transcendent on |z| = 1 needs Re(s) > 1");
    }
    Complex sum = 0.0;
    Complex zm = 1.0;
    for (std::int64_t m = 0; m < terms_max; ++m) {
        sum += zm * cpow_neg(m + a, s);
        zm *= z;
        const double next = m + 1 + a;
        double bound = 0.0;
        if (!on_circle) {
            // t_N / (1 - r_N) with r_N the eventual term ratio
            const double ratio = sigma >= 0.0 ? r : r * std::pow((next + 1.0) / next, -sigma);
            if (ratio >= 1.0) {
                continue;
            }
            bound = std::pow(r, static_cast<double>(m + 1)) * std::pow(next, -sigma) / (1.0 - ratio);
        } else {
            // summation by parts with |sum_{m<M} z^m| <= 2/|1 - z|
            bound = 2.0 / std::abs(1.0 - z) * (std::pow(next, -sigma) + std::abs(s) / sigma * std::pow(next, -sigma));
        }
        if (bound <= tol) {
            return {sum, bound, m + 1};
        }
    }
    throw DomainError("Lerch transcendent did not reach the tolerance within terms_max");
}

struct OddPowerSum {
    SeriesValue direct;
    SeriesValue decomposition;  // (2b)^{-s} sum_j z^j Phi(z^b, s, (2j-1)/(2b))
    SeriesValue literal;        // same with z^{j-1}, as usually printed
};

/// Sum_{m>=1} z^m (2m-1)^{-s} by direct summation and by splitting m mod b.
inline OddPowerSum odd_power_sum(Complex z, Complex s, unsigned b, double tol)
{
    if (b == 0) {
        throw DomainError("b must be positive");
    }
    const double r = std::abs(z);
    const double sigma = s.real();
    OddPowerSum out;
    if (std::abs(z - 1.0) < 1e-15) {
        if (!(sigma > 1.0)) {
            throw DomainError("z = 1 needs Re(s) > 1");
        }
        auto d = zeta_star_direct(s, tol);
        out.direct = {d.value, d.tail_bound, d.terms_used};
    } else {
        // sum z (z^2)^l (2l+1)^{-s} = z 2^{-s} Phi(z^2, s, 1/2), done by hand
        Complex sum = 0.0;
        Complex zm = z;
        double bound = 0.0;
        std::int64_t m = 1;
        for (;; ++m) {
            sum += zm * cpow_neg(2.0 * m - 1.0, s);
            zm *= z;
            const double next = 2.0 * m + 1.0;
            if (r < 1.0 - 1e-15) {
                const double ratio = sigma >= 0.0 ? r : r * std::pow((next + 2.0) / next, -sigma);
                bound = std::pow(r, static_cast<double>(m + 1)) * std::pow(next, -sigma) / (1.0 - ratio);
            } else {
                if (!(sigma > 1.0)) {
                    throw DomainError("|z| = 1 needs Re(s) > 1");
                }
                bound = 2.0 / std::abs(1.0 - z) * (1.0 + std::abs(s) / sigma) * std::pow(next, -sigma);
            }
            if (bound <= tol || m >= 10'000'000) {
                break;
            }
        }
        out.direct = {sum, bound, m};
    }

    const Complex scale = cpow_neg(2.0 * b, s);
    const Complex zb = std::pow(z, static_cast<int>(b));
    Complex dec = 0.0;
    Complex lit = 0.0;
    double dec_bound = 0.0;
    std::int64_t terms = 0;
    Complex zj = 1.0;
    const double piece_tol = tol / (b * std::max(std::abs(scale), 1e-300));
    for (unsigned j = 1; j <= b; ++j) {
        auto phi = lerch_phi(zb, s, (2.0 * j - 1.0) / (2.0 * b), piece_tol);
        lit += zj * phi.value;
        zj *= z;
        dec += zj * phi.value;
        dec_bound += std::abs(zj) * phi.tail_bound;
        terms += phi.terms_used;
    }
    out.decomposition = {scale * dec, std::abs(scale) * dec_bound, terms};
    out.literal = {scale * lit, std::abs(scale) * dec_bound, terms};
    return out;
}

/// psi(x) for x > 0: shift to x >= 10, then the asymptotic series, whose
/// error is below the first omitted term.
inline double digamma(double x, double tol = 1e-15)
{
    if (!(x > 0.0)) {
        throw DomainError("digamma is implemented for x > 0");
    }
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const auto& b2 = detail::even_bernoulli();
    double result = acc + std::log(x) - 0.5 / x;
    const double inv2 = 1.0 / (x * x);
    double p = inv2;
    for (std::size_t k = 1; k < b2.size(); ++k) {
        const double term = b2[k] / (2.0 * k) * p;
        result -= term;
        if (std::abs(term) <= 0.1 * tol) {
            break;
        }
        p *= inv2;
    }
    return result;
}

/// Sum_{n>=1} c(n) / (a n + b)^p for coefficients of period c.size() (c[r-1] is
/// c(r)). For p = 1 the period sum must vanish and the value is
/// -(1/(aP)) sum_r c_r psi((a r + b)/(aP)); for p > 1 it is a Hurwitz sum.
inline Complex periodic_series(const std::vector<Complex>& c, double a, double b, unsigned p, double tol = 1e-15)
{
    const auto period = static_cast<double>(c.size());
    const double ap = a * period;
    Complex total = 0.0;
    if (p == 1) {
        Complex period_sum = 0.0;
        double scale = 0.0;
        for (const auto& v : c) {
            period_sum += v;
            scale += std::abs(v);
        }
        if (std::abs(period_sum) > 1e-9 * std::max(1.0, scale)) {
            throw DomainError("periodic harmonic series diverges: coefficients do not sum to zero over a period");
        }
        for (std::size_t r = 1; r <= c.size(); ++r) {
            if (c[r - 1] != Complex(0.0)) {
                total -= c[r - 1] * digamma((a * r + b) / ap, tol);
            }
        }
        return total / ap;
    }
    for (std::size_t r = 1; r <= c.size(); ++r) {
        if (c[r - 1] != Complex(0.0)) {
            total += c[r - 1] * hurwitz_zeta(Complex(p, 0.0), (a * r + b) / ap, tol).value;
        }
    }
    return total * std::pow(ap, -static_cast<double>(p));
}

/// 2 sum_{n>=1} (-1)^n chi(n) n^{-s}, the classical Genocchi-type l-series.
inline SeriesValue alternating_character_series(Complex s, const DirichletCharacter& chi, double tol)
{
    const std::uint64_t period = std::lcm<std::uint64_t>(2, chi.modulus());
    const auto pd = static_cast<double>(period);
    const Complex scale = 2.0 * cpow_neg(pd, s);
    Complex sum = 0.0;
    double bound = 0.0;
    std::int64_t terms = 0;
    for (std::uint64_t r = 1; r <= period; ++r) {
        const Complex c = chi(static_cast<std::int64_t>(r));
        if (c == Complex(0.0)) {
            continue;
        }
        auto h = hurwitz_zeta(s, static_cast<double>(r) / pd, tol / (pd * std::abs(scale)));
        sum += ((r % 2 == 0) ? 1.0 : -1.0) * c * h.value;
        bound += h.tail_bound;
        terms += h.terms_used;
    }
    return {scale * sum, std::abs(scale) * bound, terms};
}

}  // namespace hbq
