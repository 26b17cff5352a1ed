#pragma once

// Mellin transforms of the generating functions by quadrature, and the
// product identities for the m-weighted differences y_0, y_1, y_2, y_{0,chi}, y_{1,chi}.

#include "hbq/classical_zeta.hpp"
#include "hbq/numerics.hpp"
#include "hbq/outcome.hpp"
#include "hbq/q_sums.hpp"
#include "hbq/q_zeta.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace hbq {

struct QuadratureConfig {
    double split = 1.0;
    double tol = 1e-10;        // absolute, on the transform
    double truncation = 0.0;   // T; 0 picks it from the exp(-t) decay
    int max_subdivisions = 2000;

    void validate() const
    {
        if (!(tol > 0.0)) {
            throw DomainError("quadrature tolerance must be positive");
        }
        if (!(split > 0.0)) {
            throw DomainError("split point must be positive");
        }
        if (truncation != 0.0 && !(truncation > split)) {
            throw DomainError("truncation point must exceed the split point");
        }
        if (max_subdivisions < 1) {
            throw DomainError("max subdivisions must be positive");
        }
    }
};

/// One of F, f, F_chi (with fixed q), or F(t, x) = sum_{n>=0} (-1)^n q^{-n} exp(-(q^{-n}[n] + x) t).
struct MellinIntegrand {
    GenFnKind kind;
    std::optional<double> x;

    static MellinIntegrand F() { return {GenFnKind::make(GenFnTag::F), std::nullopt}; }
    static MellinIntegrand f() { return {GenFnKind::make(GenFnTag::f), std::nullopt}; }
    static MellinIntegrand F_chi(const DirichletCharacter& chi) { return {GenFnKind::make(GenFnTag::F_chi, chi), std::nullopt}; }
    static MellinIntegrand f_chi(const DirichletCharacter& chi) { return {GenFnKind::make(GenFnTag::f_chi, chi), std::nullopt}; }
    static MellinIntegrand F_x(double x)
    {
        detail::check_x(x);
        return {GenFnKind::make(GenFnTag::F), x};
    }

    [[nodiscard]] int first_index() const { return x ? 0 : 1; }
};

namespace detail {

struct MellinSetup {
    double log_inv_q;
    double delta;
    double shift;
    int n0;

    [[nodiscard]] double mu(std::int64_t n) const { return std::expm1(n * log_inv_q) / delta + shift; }
    [[nodiscard]] double weight(std::int64_t n) const { return std::exp(n * log_inv_q); }
};

inline Complex integrand_value(const MellinIntegrand& g, const MellinSetup& m, double t)
{
    Complex sum = 0.0;
    for (std::int64_t n = m.n0;; ++n) {
        const double mag = std::exp(n * m.log_inv_q - m.mu(n) * t);
        sum += g.kind.coefficient(n) * mag;
        const double ratio = std::exp(m.log_inv_q - std::exp((n + 1) * m.log_inv_q) * t);
        if (ratio < 0.5 && 2.0 * mag <= 1e-18 * (1.0 + std::abs(sum))) {
            return sum;
        }
        if (n > 100000) {
            throw DomainError("integrand series did not converge");
        }
    }
}

/// sum_n q^{-n} int_0^{t0} t^{sigma-1} e^{-mu_n t} dt, bounded per term by
/// min(Gamma(sigma) mu^{-sigma}, t0^sigma / sigma).
inline double head_bound(const MellinSetup& m, double sigma, double t0)
{
    const double gamma_sigma = std::tgamma(sigma);
    const double r = std::exp(-(sigma - 1.0) * m.log_inv_q);
    double total = 0.0;
    for (std::int64_t n = m.n0;; ++n) {
        const double full = m.weight(n) * gamma_sigma * std::pow(m.mu(n), -sigma);
        const double term = std::min(full, m.weight(n) * std::pow(t0, sigma) / sigma);
        total += term;
        if (full <= 1e-6 * total) {
            return total + full * r / (1.0 - r);
        }
    }
}

/// sum_n q^{-n} mu_n^{-sigma} Gamma(sigma, mu_n T), using
/// Gamma(a, y) <= y^{a-1} e^{-y} y / (y - (a - 1)) for y > a - 1.
inline double tail_bound(const MellinSetup& m, double sigma, double big_t)
{
    double total = 0.0;
    for (std::int64_t n = m.n0;; ++n) {
        const double y = m.mu(n) * big_t;
        if (!(y > sigma)) {
            return std::numeric_limits<double>::infinity();
        }
        const double term = m.weight(n) * std::pow(m.mu(n), -sigma) * std::pow(y, sigma - 1.0) * std::exp(-y) * y /
                            (y - (sigma - 1.0));
        total += term;
        if (term <= 1e-3 * total || term == 0.0) {
            // consecutive terms shrink by far more than half once mu_n T exceeds a few units
            return 2.0 * total;
        }
    }
}

}  // namespace detail

/// (1 / Gamma(s)) int_0^infty t^{s-1} g(t) dt. The error certificate folds the
/// quadrature estimates, the (0, t0) and (T, infty) bounds and the Gamma error.
inline SeriesValue mellin_transform(const MellinIntegrand& g, Complex s, const QParam& q, const QuadratureConfig& cfg)
{
    cfg.validate();
    if (!(s.real() > 1.0)) {
        throw DomainError("the Mellin transform needs Re(s) > 1");
    }
    if (!q.is_exact() || q.is_limit()) {
        throw DomainError("the Mellin transform is implemented for real 0 < q < 1");
    }
    const double sigma = s.real();
    const double delta = q.one_minus().real();
    const detail::MellinSetup setup{-std::log1p(-delta), delta, g.x.value_or(0.0), g.first_index()};
    const Complex gamma = gamma_complex(s);
    const double budget = 0.25 * cfg.tol * std::abs(gamma);

    double t0 = 1e-4;
    double head = detail::head_bound(setup, sigma, t0);
    while (head > budget && t0 > 1e-300) {
        t0 *= 1e-2;
        head = detail::head_bound(setup, sigma, t0);
    }
    if (head > budget) {
        throw DomainError("cannot certify the Mellin integrand near 0");
    }
    if (!(t0 < cfg.split)) {
        t0 = 0.5 * cfg.split;
        head = detail::head_bound(setup, sigma, t0);
    }

    double big_t = cfg.truncation;
    double tail = 0.0;
    if (big_t == 0.0) {
        big_t = std::max(2.0 * cfg.split, (sigma + 40.0) / setup.mu(setup.n0));
        tail = detail::tail_bound(setup, sigma, big_t);
        while (tail > budget) {
            big_t *= 1.5;
            tail = detail::tail_bound(setup, sigma, big_t);
        }
    } else {
        tail = detail::tail_bound(setup, sigma, big_t);
    }

    // near zero in u = log t, where the integrand t^s g(t) is smooth
    auto near = [&](double u) {
        const double t = std::exp(u);
        return std::exp(s * u) * detail::integrand_value(g, setup, t);
    };
    auto far = [&](double t) { return std::exp((s - 1.0) * std::log(t)) * detail::integrand_value(g, setup, t); };
    const auto a = integrate(near, std::log(t0), std::log(cfg.split), budget, cfg.max_subdivisions);
    const auto b = integrate(far, cfg.split, big_t, budget, cfg.max_subdivisions);
    if (!a.converged || !b.converged) {
        throw DomainError("quadrature did not reach the tolerance within " + std::to_string(cfg.max_subdivisions) +
                          " subdivisions");
    }
    const Complex value = (a.value + b.value) / gamma;
    const double error = (a.error + b.error + head + tail) / std::abs(gamma) + gamma_rel_error * std::abs(value);
    return {value, error, a.subdivisions + b.subdivisions};
}

/// Series route of the same transform: the q-zeta family member that the
/// generating function is mapped to.
inline SeriesValue mellin_series_value(const MellinIntegrand& g, Complex s, const QParam& q, double tol)
{
    if (g.x) {
        return im_q_hurwitz(s, *g.x, q, tol, HurwitzVariant::Additive);
    }
    switch (g.kind.tag) {
        case GenFnTag::F: return im_q(s, q, tol);
        case GenFnTag::f: return zeta_q(s, q, tol);
        case GenFnTag::F_chi: return l_q(s, *g.kind.chi, q, tol);
        case GenFnTag::f_chi: return big_l_q(s, *g.kind.chi, q, tol);
    }
    throw DomainError("unknown generating function");
}

struct ProductConfig {
    RegularizationSchedule reg{{0.02, 0.01, 0.005, 0.0025}, 3};
    int direct_terms = 64;   // m summed directly; the rest through Hurwitz zeta values
    int binomial_terms = 10;
};

namespace detail {

struct ProductShape {
    GenFnKind kind;
    bool odd_weights;
};

inline ProductShape product_shape(int id, const std::optional<DirichletCharacter>& chi)
{
    switch (id) {
        case 19: return {GenFnKind::make(GenFnTag::F), true};
        case 20: return {GenFnKind::make(GenFnTag::f), true};
        case 21: return {GenFnKind::make(GenFnTag::F), false};
        case 22:
        case 23:
            if (!chi) {
                throw DomainError("product identity " + std::to_string(id) + " needs a character");
            }
            return {GenFnKind::make(id == 22 ? GenFnTag::F_chi : GenFnTag::f_chi, chi), true};
        default: break;
    }
    throw DomainError("product identity id must be 19..23, got " + std::to_string(id));
}

inline Complex binomial_neg(Complex s, int j)
{
    // C(-s, j)
    Complex c = 1.0;
    for (int i = 0; i < j; ++i) {
        c *= (-s - static_cast<double>(i)) / static_cast<double>(i + 1);
    }
    return c;
}

/// Damped Mellin transform of the y-integrand at offset eps:
/// sum_n c(n) q^{-n} sum_m w_m^{-1} [(eps - i lambda_n w_m)^{-s} - (eps + i lambda_n w_m)^{-s}].
inline SeriesValue damped_product_lhs(const ProductShape& shape, Complex s, const QParam& q, double eps, double tol,
                                      const ProductConfig& cfg, const std::vector<Complex>& hurwitz_tails)
{
    const double sigma = s.real();
    const double delta = q.one_minus().real();
    const double log_inv_q = -std::log1p(-delta);
    const Complex minus_i_pow = std::exp(Complex(0.0, 0.5 * std::numbers::pi) * s);  // (-i)^{-s}
    const Complex i_pow = std::exp(Complex(0.0, -0.5 * std::numbers::pi) * s);       // i^{-s}
    const double branch = std::exp(0.5 * std::numbers::pi * std::abs(s.imag()));
    const double ratio = std::exp(-(sigma - 1.0) * log_inv_q);
    const double inner_cap = 2.0 * branch * std::abs(riemann_zeta(sigma + 1.0, 1e-15).value);

    Complex total = 0.0;
    for (std::int64_t n = 1;; ++n) {
        const double lam = std::expm1(n * log_inv_q) / delta;
        const Complex c = shape.kind.coefficient(n);
        const double qn = std::exp(n * log_inv_q);
        if (c != Complex(0.0)) {
            Complex inner = 0.0;
            for (int m = 1; m <= cfg.direct_terms; ++m) {
                const double w = shape.odd_weights ? 2.0 * m - 1.0 : static_cast<double>(m);
                const double cm = lam * w;
                inner += (cpow_neg(Complex(eps, -cm), s) - cpow_neg(Complex(eps, cm), s)) / w;
            }
            for (int j = 0; j < cfg.binomial_terms; ++j) {
                const Complex phase = minus_i_pow - (j % 2 == 0 ? 1.0 : -1.0) * i_pow;
                inner += binomial_neg(s, j) * std::pow(Complex(0.0, eps), j) * cpow_neg(lam, s + static_cast<double>(j)) *
                         hurwitz_tails[static_cast<std::size_t>(j)] * phase;
            }
            total += c * qn * inner;
        }
        const double lam1 = std::expm1((n + 1) * log_inv_q) / delta;
        const double bound = inner_cap * std::exp((n + 1) * log_inv_q) * std::pow(lam1, -sigma) / (1.0 - ratio);
        if (bound <= tol) {
            return {total, bound, n};
        }
    }
}

}  // namespace detail

/// Product identity id in {19, ..., 23}: the damped, extrapolated Mellin
/// transform of the y-integrand against i^{-s}((-1)^{-s} - 1) A(s) Z(s+1), with
/// A = Im_{G,q}, zeta_q, Im_{G,q}, l_{G,q}, L_q and Z = zeta*, zeta*, zeta, zeta*, zeta*.
inline VerificationOutcome verify_product_theorem(int id, Complex s, const QParam& q,
                                                  const std::optional<DirichletCharacter>& chi, double tol,
                                                  const ProductConfig& cfg = {})
{
    const auto shape = detail::product_shape(id, chi);
    if (!(s.real() > 1.0)) {
        throw DomainError("the product identities need Re(s) > 1");
    }
    if (!q.is_exact() || q.is_limit()) {
        throw DomainError("the product identities are checked for real 0 < q < 1");
    }
    cfg.reg.validate();
    const double series_tol = 1e-3 * tol;

    // sum_{m > M} w_m^{-(s+1+j)}
    std::vector<Complex> tails;
    for (int j = 0; j < cfg.binomial_terms; ++j) {
        const Complex p = s + 1.0 + static_cast<double>(j);
        if (shape.odd_weights) {
            tails.push_back(std::exp(-p * std::log(2.0)) *
                            hurwitz_zeta(p, cfg.direct_terms + 0.5, 1e-16).value);
        } else {
            tails.push_back(hurwitz_zeta(p, cfg.direct_terms + 1.0, 1e-16).value);
        }
    }

    std::vector<Complex> per_offset;
    double series_bound = 0.0;
    for (double eps : cfg.reg.offsets) {
        auto v = detail::damped_product_lhs(shape, s, q, eps, series_tol, cfg, tails);
        per_offset.push_back(v.value);
        series_bound = std::max(series_bound, v.tail_bound);
    }
    const auto ex = richardson(cfg.reg.offsets, per_offset, cfg.reg.order);

    SeriesValue factor;
    switch (id) {
        case 19:
        case 21: factor = im_q(s, q, series_tol, true); break;
        case 20: factor = zeta_q(s, q, series_tol); break;
        case 22: factor = l_q(s, *chi, q, series_tol, true); break;
        default: factor = big_l_q(s, *chi, q, series_tol); break;
    }
    const Complex z = id == 21 ? riemann_zeta(s + 1.0, series_tol).value : zeta_star(s + 1.0, series_tol).value;
    const Complex i_pow = std::exp(Complex(0.0, -0.5 * std::numbers::pi) * s);
    const Complex prefactor = i_pow * (std::exp(Complex(0.0, -std::numbers::pi) * s) - 1.0);
    const bool genocchi = id == 19 || id == 21 || id == 22;
    const Complex bracket2 = genocchi ? 1.0 + q.value() : Complex(1.0);
    // termwise limit of the left side: (-i)^{-s} - i^{-s} = 2i sin(pi s / 2)
    const Complex termwise = 2.0 * Complex(0.0, 1.0) * std::sin(0.5 * std::numbers::pi * s) * factor.value / bracket2 * z;

    VerificationOutcome out;
    out.name = "thm" + std::to_string(id);
    out.tolerance = tol;
    out.params = {{"s", std::to_string(s.real()) + (s.imag() != 0.0 ? "," + std::to_string(s.imag()) : "")},
                  {"q", q.to_string()}};
    if (chi) {
        out.params.emplace_back("chi", chi->label());
    }
    out.lhs = ex.value;
    out.rhs = prefactor * factor.value * z;
    out.extras.emplace_back("extrapolation_residual", ex.residual);
    out.extras.emplace_back("series_tail_bound", series_bound + factor.tail_bound * std::abs(z));
    out.extras.emplace_back("termwise_limit", termwise);
    if (std::abs(out.rhs) > 1e-300) {
        out.extras.emplace_back("lhs_over_rhs", out.lhs / out.rhs);
    }
    if (id == 20 || id == 23) {
        out.notes.emplace_back(id == 20 ? "zeta_q(s) = sum q^{-n} (q^{-n}[n])^{-s}"
                                        : "L_q(s,chi) = sum chi(n) q^{-n} (q^{-n}[n])^{-s}");
    }
    if (genocchi) {
        out.notes.emplace_back("the termwise limit carries the unscaled series; it is the right side divided by [2] = 1+q "
                               "wherever the prefactors agree (odd integer s)");
    }
    out.settle();
    return out;
}

}  // namespace hbq
