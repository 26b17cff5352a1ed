#pragma once

// Generic numerical kernels: complex gamma, Gauss-Kronrod quadrature,
// Neville extrapolation and alternating-series acceleration.

#include "hbq/exact.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace hbq {

namespace detail {

constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_coef = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

}  // namespace detail

/// Relative accuracy claimed for gamma_complex on Re(z) > 0.
constexpr double gamma_rel_error = 1e-13;

/// log Gamma(z) on the principal branch of the Lanczos expression, Re(z) >= 1/2.
inline Complex lgamma_complex(Complex z)
{
    using std::numbers::pi;
    if (z.real() < 0.5) {
        // reflection
        return std::log(pi / std::sin(pi * z)) - lgamma_complex(1.0 - z);
    }
    z -= 1.0;
    Complex x = detail::lanczos_coef[0];
    for (std::size_t i = 1; i < detail::lanczos_coef.size(); ++i) {
        x += detail::lanczos_coef[i] / (z + static_cast<double>(i));
    }
    Complex t = z + detail::lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

inline Complex gamma_complex(Complex z)
{
    using std::numbers::pi;
    if (z.real() < 0.5) {
        return pi / (std::sin(pi * z) * gamma_complex(1.0 - z));
    }
    return std::exp(lgamma_complex(z));
}

struct QuadResult {
    Complex value{};
    double error = 0.0;
    int subdivisions = 0;
    bool converged = false;
};

namespace detail {

constexpr std::array<double, 8> gk_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> gk_kronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for nodes 1, 3, 5 and the centre
constexpr std::array<double, 4> gk_gauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    Complex value;
    double error;
};

template <class F>
Panel gk15(F& f, double a, double b)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    Complex centre = f(c);
    Complex kronrod = centre * gk_kronrod[7];
    Complex gauss = centre * gk_gauss[3];
    for (std::size_t i = 0; i < 7; ++i) {
        const double dx = h * gk_nodes[i];
        Complex pair = f(c - dx) + f(c + dx);
        kronrod += pair * gk_kronrod[i];
        if (i % 2 == 1) {
            gauss += pair * gk_gauss[i / 2];
        }
    }
    return {a, b, kronrod * h, std::abs((kronrod - gauss) * h)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7, 15) on [a, b]. The panel with the largest
/// error estimate is bisected until the summed estimate is at most tol.
template <class F>
QuadResult integrate(F f, double a, double b, double tol, int max_subdivisions = 2000)
{
    std::vector<detail::Panel> panels{detail::gk15(f, a, b)};
    auto total = [&] {
        Complex v = 0.0;
        double e = 0.0;
        for (const auto& p : panels) {
            v += p.value;
            e += p.error;
        }
        return std::pair{v, e};
    };
    int subdivisions = 0;
    for (;;) {
        auto [value, error] = total();
        if (error <= tol) {
            return {value, error, subdivisions, true};
        }
        if (subdivisions >= max_subdivisions) {
            return {value, error, subdivisions, false};
        }
        auto worst = std::max_element(panels.begin(), panels.end(),
                                      [](const auto& l, const auto& r) { return l.error < r.error; });
        const double lo = worst->a;
        const double hi = worst->b;
        const double mid = 0.5 * (lo + hi);
        *worst = detail::gk15(f, lo, mid);
        panels.push_back(detail::gk15(f, mid, hi));
        ++subdivisions;
    }
}

struct Extrapolation {
    Complex value{};
    double residual = 0.0;
};

/// Polynomial (Neville) extrapolation of samples v(h_i) to h = 0 using the
/// last order+1 samples. The residual is the size of the final correction,
/// |T(order) - T(order-1)|.
inline Extrapolation richardson(const std::vector<double>& h, const std::vector<Complex>& v, int order)
{
    const std::size_t m = h.size();
    if (m != v.size() || m == 0) {
        throw DomainError("extrapolation needs matching, non-empty samples");
    }
    if (order <= 0) {
        return {v.back(), 0.0};
    }
    if (static_cast<std::size_t>(order) + 1 > m) {
        throw DomainError("extrapolation order exceeds the number of offsets minus one");
    }
    // T[i][j] uses samples i-j..i
    std::vector<std::vector<Complex>> t(m);
    for (std::size_t i = 0; i < m; ++i) {
        t[i].assign(std::min<std::size_t>(i, order) + 1, 0.0);
        t[i][0] = v[i];
        for (std::size_t j = 1; j < t[i].size(); ++j) {
            const double hi = h[i];
            const double hij = h[i - j];
            t[i][j] = (hij * t[i][j - 1] - hi * t[i - 1][j - 1]) / (hij - hi);
        }
    }
    const auto& last = t[m - 1];
    return {last[order], std::abs(last[order] - last[order - 1])};
}

/// Sum_{k>=0} (-1)^k a(k) by the Cohen-Rodriguez Villegas-Zagier weights with n
/// terms. When a(k) = int_0^1 x^k w(x) dx the error is at most 2 int|w| / d_n;
/// cvz_denominator(n) returns that d_n.
template <class A>
Complex cvz_alternating(A a, int n)
{
    const double root = 3.0 + std::sqrt(8.0);
    double d = std::pow(root, n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0;
    double c = -d;
    Complex s = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        s += c * a(k);
        b = (static_cast<double>(k) + n) * (static_cast<double>(k) - n) * b /
            ((k + 0.5) * (k + 1.0));
    }
    return s / d;
}

inline double cvz_denominator(int n)
{
    const double d = std::pow(3.0 + std::sqrt(8.0), n);
    return 0.5 * (d + 1.0 / d);
}

/// z^{-s} on the principal branch.
inline Complex cpow_neg(Complex z, Complex s) { return std::exp(-s * std::log(z)); }
inline Complex cpow_neg(double x, Complex s) { return std::exp(-s * std::log(x)); }

}  // namespace hbq
