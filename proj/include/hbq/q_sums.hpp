#pragma once

// Generating functions f, F, f_chi, F_chi, the damped sums Y_0..Y_5 and Y_p,
// the q-Hardy-Berndt and q-Dedekind sums built from them, and the closed-form
// evaluation of the classical tan/cot series.

#include "hbq/classical_zeta.hpp"
#include "hbq/dirichlet.hpp"
#include "hbq/exact.hpp"
#include "hbq/finite_sums.hpp"
#include "hbq/numbers.hpp"
#include "hbq/numerics.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace hbq {

enum class GenFnTag { f, F, f_chi, F_chi };

struct GenFnKind {
    GenFnTag tag = GenFnTag::F;
    std::optional<DirichletCharacter> chi;

    [[nodiscard]] bool alternating() const { return tag == GenFnTag::F || tag == GenFnTag::F_chi; }

    [[nodiscard]] Complex coefficient(std::int64_t n) const
    {
        Complex c = (alternating() && n % 2 != 0) ? -1.0 : 1.0;
        if (chi) {
            c *= (*chi)(n);
        }
        return c;
    }

    [[nodiscard]] std::uint64_t period() const
    {
        const std::uint64_t base = alternating() ? 2 : 1;
        return chi ? std::lcm<std::uint64_t>(base, chi->modulus()) : base;
    }

    static GenFnKind make(GenFnTag tag, std::optional<DirichletCharacter> chi = std::nullopt)
    {
        const bool needs_chi = tag == GenFnTag::f_chi || tag == GenFnTag::F_chi;
        if (needs_chi && !chi) {
            throw DomainError("character generating functions need a character");
        }
        if (!needs_chi && chi) {
            throw DomainError("a character was given for a character-free generating function");
        }
        return {tag, std::move(chi)};
    }
};

/// G(t) = sum_{n>=1} c(n) q^{-n} exp(-q^{-n}[n] t) for Re(t) > 0. At q = 1 the
/// geometric closed form sum_{r<=L} c(r) e^{-rt} / (1 - e^{-Lt}) is used.
inline SeriesValue eval_gen(const GenFnKind& kind, Complex t, const QParam& q, double tol)
{
    if (!(t.real() > 0.0)) {
        throw DomainError("generating functions diverge for Re(t) <= 0; use the damped sums");
    }
    if (!(tol > 0.0)) {
        throw DomainError("tolerance must be positive");
    }
    if (q.is_limit()) {
        const std::uint64_t period = kind.period();
        const Complex z = std::exp(-t);
        Complex num = 0.0;
        Complex zr = 1.0;
        for (std::uint64_t r = 1; r <= period; ++r) {
            zr *= z;
            num += kind.coefficient(static_cast<std::int64_t>(r)) * zr;
        }
        return {num / (1.0 - zr), 0.0, static_cast<std::int64_t>(period)};
    }
    if (!q.is_exact()) {
        throw DomainError("generating functions are implemented for real 0 < q < 1");
    }
    const double delta = q.one_minus().real();
    const double log_inv_q = -std::log1p(-delta);
    const double eps = t.real();
    Complex sum = 0.0;
    for (std::int64_t n = 1;; ++n) {
        const double lam = std::expm1(n * log_inv_q) / delta;
        sum += kind.coefficient(n) * std::exp(n * log_inv_q - lam * t);
        // ratio of consecutive envelopes q^{-1} exp(-q^{-(n+1)} eps) only decreases
        const double lam1 = std::expm1((n + 1) * log_inv_q) / delta;
        const double ratio = std::exp(log_inv_q - std::exp((n + 2) * log_inv_q) * eps);
        if (ratio < 1.0) {
            const double bound = std::exp((n + 1) * log_inv_q - lam1 * eps) / (1.0 - ratio);
            if (bound <= tol) {
                return {sum, bound, n};
            }
        }
        if (n > 100000) {
            throw DomainError("generating function series did not converge");
        }
    }
}

/// Partial sums of sum_n chi(n) q^{-n} exp(-q^{n}[n] t), the exponent written
/// with q^{n}. Its terms grow like q^{-n}, so only partial sums exist.
inline Complex fc_verbatim_partial(const DirichletCharacter& chi, Complex t, const QParam& q, std::int64_t terms)
{
    if (!q.is_exact() || q.is_limit()) {
        throw DomainError("needs real 0 < q < 1");
    }
    const double delta = q.one_minus().real();
    const double log_q = std::log1p(-delta);
    Complex sum = 0.0;
    for (std::int64_t n = 1; n <= terms; ++n) {
        const double qn_bracket = std::exp(n * log_q) * (-std::expm1(n * log_q) / delta);
        sum += chi(n) * std::exp(-n * log_q - qn_bracket * t);
    }
    return sum;
}

struct RegularizationSchedule {
    std::vector<double> offsets{0.2, 0.1, 0.05, 0.025};
    int order = 2;  // 0 means no extrapolation

    void validate() const
    {
        if (offsets.empty()) {
            throw DomainError("empty regularization schedule");
        }
        for (std::size_t i = 0; i < offsets.size(); ++i) {
            if (!(offsets[i] > 0.0)) {
                throw DomainError("damping offsets must be positive");
            }
            if (i > 0 && !(offsets[i] < offsets[i - 1])) {
                throw DomainError("damping offsets must be strictly decreasing");
            }
        }
        if (order < 0) {
            throw DomainError("extrapolation order must be nonnegative");
        }
        if (order > 0 && offsets.size() < static_cast<std::size_t>(order) + 1) {
            throw DomainError("extrapolation order " + std::to_string(order) + " needs at least " +
                              std::to_string(order + 1) + " offsets");
        }
    }
};

enum class YFamily { Y0, Y1, Y2, Y3, Y4, Y5, Dedekind };
enum class YRoute { NFirst, MFirst };

struct YArgs {
    YFamily family = YFamily::Y0;
    std::int64_t h = 1;
    std::int64_t k = 1;
    unsigned p = 1;  // weight exponent, Dedekind family only
    std::optional<DirichletCharacter> chi;
};

struct YSumResult {
    Complex value{};
    std::vector<double> offsets;
    std::vector<Complex> per_offset;
    double residual = 0.0;
    bool divergent = false;
    // exact epsilon -> 0 limit of the damped sum, available at q = 1
    std::optional<Complex> abel_limit;
    std::int64_t terms_used = 0;
    YRoute route = YRoute::NFirst;
};

namespace detail {

enum class WeightKind { Odd, Plain, Power };

inline WeightKind weight_kind(YFamily f)
{
    switch (f) {
        case YFamily::Y0:
        case YFamily::Y1:
        case YFamily::Y4:
        case YFamily::Y5: return WeightKind::Odd;
        case YFamily::Y2:
        case YFamily::Y3: return WeightKind::Plain;
        case YFamily::Dedekind: return WeightKind::Power;
    }
    return WeightKind::Odd;
}

inline bool uses_alternating(YFamily f)
{
    return f == YFamily::Y0 || f == YFamily::Y2 || f == YFamily::Y3 || f == YFamily::Y5;
}

inline GenFnKind gen_kind(const YArgs& args)
{
    const bool alt = uses_alternating(args.family);
    if (args.chi) {
        return GenFnKind::make(alt ? GenFnTag::F_chi : GenFnTag::f_chi, args.chi);
    }
    return GenFnKind::make(alt ? GenFnTag::F : GenFnTag::f);
}

/// The angle of term m is w_m * pi * rho with w_m = 2m-1, m or 2m.
inline Rational angle_ratio(const YArgs& s)
{
    switch (weight_kind(s.family)) {
        case WeightKind::Odd: return Rational(s.h, 2 * s.k);
        case WeightKind::Plain: return Rational(s.h, s.k);
        case WeightKind::Power: return Rational(2 * s.h, s.k);
    }
    return 0;
}

inline bool excluded(const YArgs& s, std::int64_t m)
{
    switch (s.family) {
        case YFamily::Y1:
        case YFamily::Y5: return (2 * m - 1) % s.k == 0;
        case YFamily::Y2: return (2 * m) % s.k == 0;
        default: return false;
    }
}

// sign of sin(pi v)
inline int sgn_sin_pi(const Rational& v)
{
    const Rational w = frac(v / 2);
    if (w == 0 || w == Rational(1, 2)) {
        return 0;
    }
    return w < Rational(1, 2) ? 1 : -1;
}

inline Rational bernoulli_polynomial(unsigned p, const Rational& x)
{
    static const auto b = number_table(NumberKind::Bernoulli, 64);
    if (p >= b.entries.size()) {
        throw DomainError("Bernoulli polynomial degree too large");
    }
    Rational sum = 0;
    BigInt binom = 1;
    for (unsigned j = 0; j <= p; ++j) {
        sum += Rational(binom) * b.entries[j] * pow(x, p - j);
        binom = binom * (p - j) / (j + 1);
    }
    return sum;
}

/// sum over admissible m of sin(w_m pi v) / w_m^p, with pi * v the base angle
/// times the frequency q^{-n}[n].
inline double inner_m_sum(const YArgs& s, const Rational& v)
{
    using std::numbers::pi;
    switch (weight_kind(s.family)) {
        case WeightKind::Odd: {
            // sum sin((2m-1)x)/(2m-1) = (pi/4) sgn(sin x)
            double value = sgn_sin_pi(v);
            if ((s.family == YFamily::Y1 || s.family == YFamily::Y5) && s.k % 2 != 0) {
                value -= static_cast<double>(sgn_sin_pi(v * s.k)) / static_cast<double>(s.k);
            }
            return 0.25 * pi * value;
        }
        case WeightKind::Plain: {
            // sum sin(m x)/m = -pi ((x / 2 pi))
            double value = -to_double(sawtooth(v / 2));
            if (s.family == YFamily::Y2) {
                const std::int64_t kp = s.k / std::gcd<std::int64_t>(s.k, 2);
                value += to_double(sawtooth(v * kp / 2)) / static_cast<double>(kp);
            }
            return pi * value;
        }
        case WeightKind::Power: {
            // sum sin(2 pi m y)/m^p = (-1)^{(p+1)/2} (2 pi)^p Bbar_p(y) / (2 p!)
            const Rational y = v / 2;
            const Rational bbar = s.p == 1 ? sawtooth(y) : bernoulli_polynomial(s.p, frac(y));
            double fact = 1.0;
            for (unsigned i = 2; i <= s.p; ++i) {
                fact *= i;
            }
            const double sign = ((s.p + 1) / 2) % 2 == 0 ? 1.0 : -1.0;
            return sign * std::pow(2.0 * pi, s.p) * to_double(bbar) / (2.0 * fact);
        }
    }
    return 0.0;
}

inline void validate_args(const YArgs& s)
{
    detail::require_coprime(s.h, s.k);
    if (s.family == YFamily::Dedekind && (s.p % 2 == 0 || s.p == 0)) {
        throw DomainError("the Dedekind-type sum needs an odd weight exponent p >= 1");
    }
    if (s.family != YFamily::Dedekind && s.p != 1) {
        throw DomainError("weight exponent p applies to the Dedekind-type sum only");
    }
}

struct NFirstTerms {
    std::vector<Complex> amplitude;  // c(n) q^{-n} 2i I_n
    std::vector<double> lambda;      // q^{-n}[n]
};

/// Damped value for one offset at q = 1 from the periodic closed form.
inline Complex limit1_offset(const std::vector<Complex>& a, double eps)
{
    const auto period = static_cast<double>(a.size());
    Complex num = 0.0;
    for (std::size_t r = 1; r <= a.size(); ++r) {
        num += a[r - 1] * std::exp(-static_cast<double>(r) * eps);
    }
    return num / (-std::expm1(-period * eps));
}

inline std::vector<Complex> limit1_amplitudes(const YArgs& s, const GenFnKind& g)
{
    std::uint64_t period = std::lcm<std::uint64_t>(4 * static_cast<std::uint64_t>(s.k), g.period());
    const Rational rho = angle_ratio(s);
    std::vector<Complex> a(period);
    for (std::uint64_t r = 1; r <= period; ++r) {
        const auto n = static_cast<std::int64_t>(r);
        a[r - 1] = g.coefficient(n) * Complex(0.0, 2.0) * inner_m_sum(s, rho * n);
    }
    return a;
}

inline Complex m_first_limit1(const YArgs& s, const GenFnKind& g, double eps)
{
    using std::numbers::pi;
    const auto kind = weight_kind(s.family);
    const std::int64_t period = 2 * s.k;
    const double rho = to_double(angle_ratio(s));
    std::vector<Complex> d(static_cast<std::size_t>(period));
    const QParam one = QParam::one();
    for (std::int64_t m = 1; m <= period; ++m) {
        if (excluded(s, m)) {
            continue;
        }
        const double w = kind == WeightKind::Odd ? 2.0 * m - 1.0 : static_cast<double>(m);
        const double theta = w * pi * rho;
        d[m - 1] = eval_gen(g, Complex(eps, -theta), one, 1e-15).value -
                   eval_gen(g, Complex(eps, theta), one, 1e-15).value;
    }
    if (kind == WeightKind::Odd) {
        return periodic_series(d, 2.0, -1.0, 1);
    }
    return periodic_series(d, 1.0, 0.0, kind == WeightKind::Power ? s.p : 1);
}

}  // namespace detail

/// Damped, extrapolated Y-sum. Each offset eps replaces the arguments -+i theta
/// by eps -+ i theta; the offsets are then extrapolated to eps = 0.
inline YSumResult y_sum(const YArgs& args, const QParam& q, const RegularizationSchedule& reg, double tol,
                        YRoute route = YRoute::NFirst, std::int64_t m_max = 20000)
{
    using namespace detail;
    validate_args(args);
    reg.validate();
    if (!(tol > 0.0)) {
        throw DomainError("tolerance must be positive");
    }
    if (!q.is_exact()) {
        throw DomainError("damped sums are implemented for real rational q in (0, 1] ");
    }
    const GenFnKind g = gen_kind(args);
    YSumResult out;
    out.offsets = reg.offsets;
    out.route = route;

    if (q.is_limit()) {
        const auto amplitudes = limit1_amplitudes(args, g);
        Complex period_sum = 0.0;
        Complex moment = 0.0;
        double scale = 0.0;
        for (std::size_t r = 1; r <= amplitudes.size(); ++r) {
            period_sum += amplitudes[r - 1];
            moment += static_cast<double>(r) * amplitudes[r - 1];
            scale += std::abs(amplitudes[r - 1]);
        }
        if (std::abs(period_sum) <= 1e-12 * std::max(1.0, scale)) {
            out.abel_limit = -moment / static_cast<double>(amplitudes.size());
        }
        for (double eps : reg.offsets) {
            out.per_offset.push_back(route == YRoute::NFirst ? limit1_offset(amplitudes, eps)
                                                             : m_first_limit1(args, g, eps));
        }
        out.terms_used = static_cast<std::int64_t>(amplitudes.size());
    } else if (route == YRoute::NFirst) {
        // exact frequencies lambda_n = q^{-n}[n] keep the phases of the closed-form m-sums exact
        const Rational& qe = q.exact();
        const Rational rho = angle_ratio(args);
        const double log_inv_q = -std::log(q.real_value());
        const double eps_min = reg.offsets.back();
        constexpr double inner_max = std::numbers::pi;
        NFirstTerms terms;
        Rational lam = 0;
        for (std::int64_t n = 1;; ++n) {
            lam = (lam + 1) / qe;
            const double lam_d = to_double(lam);
            terms.lambda.push_back(lam_d);
            terms.amplitude.push_back(g.coefficient(n) * std::exp(n * log_inv_q) * Complex(0.0, 2.0) *
                                      inner_m_sum(args, lam * rho));
            const double lam1 = to_double((lam + 1) / qe);
            const double ratio = std::exp(log_inv_q - std::exp((n + 2) * log_inv_q) * eps_min);
            if (ratio < 1.0) {
                const double bound =
                    2.0 * inner_max * std::exp((n + 1) * log_inv_q - lam1 * eps_min) / (1.0 - ratio);
                if (bound <= 1e-3 * tol) {
                    break;
                }
            }
            if (n > 2000) {
                throw DomainError("damped sum did not converge in n");
            }
        }
        for (double eps : reg.offsets) {
            Complex v = 0.0;
            for (std::size_t i = 0; i < terms.lambda.size(); ++i) {
                v += terms.amplitude[i] * std::exp(-terms.lambda[i] * eps);
            }
            out.per_offset.push_back(v);
        }
        out.terms_used = static_cast<std::int64_t>(terms.lambda.size());
    } else {
        // truncated m-sum of exactly evaluated generating-function differences
        const auto kind = weight_kind(args.family);
        const double rho = to_double(angle_ratio(args));
        for (double eps : reg.offsets) {
            Complex v = 0.0;
            for (std::int64_t m = 1; m <= m_max; ++m) {
                if (excluded(args, m)) {
                    continue;
                }
                const double w = kind == WeightKind::Odd ? 2.0 * m - 1.0 : static_cast<double>(m);
                const double theta = w * std::numbers::pi * rho;
                const Complex diff = eval_gen(g, Complex(eps, -theta), q, 1e-3 * tol).value -
                                     eval_gen(g, Complex(eps, theta), q, 1e-3 * tol).value;
                v += diff / std::pow(w, kind == WeightKind::Power ? args.p : 1U);
            }
            out.per_offset.push_back(v);
        }
        out.terms_used = m_max;
    }

    auto ex = richardson(reg.offsets, out.per_offset, reg.order);
    out.value = ex.value;
    out.residual = ex.residual;
    out.divergent = !(out.residual <= 1e3 * tol);
    return out;
}

inline YFamily family_of(SumVariant v)
{
    switch (v) {
        case SumVariant::S: return YFamily::Y0;
        case SumVariant::s1: return YFamily::Y1;
        case SumVariant::s2: return YFamily::Y2;
        case SumVariant::s3: return YFamily::Y3;
        case SumVariant::s4: return YFamily::Y4;
        case SumVariant::s5: return YFamily::Y5;
        case SumVariant::dedekind: return YFamily::Dedekind;
    }
    return YFamily::Y0;
}

/// Constant c with q-sum = c * Y: 4/(pi i), -2/(pi i), -1/(2 pi i), 1/(pi i), 4/(pi i), 2/(pi i).
inline Complex theorem_scale(SumVariant v)
{
    using std::numbers::pi;
    const Complex pi_i(0.0, pi);
    switch (v) {
        case SumVariant::S: return 4.0 / pi_i;
        case SumVariant::s1: return -2.0 / pi_i;
        case SumVariant::s2: return -1.0 / (2.0 * pi_i);
        case SumVariant::s3: return 1.0 / pi_i;
        case SumVariant::s4: return 4.0 / pi_i;
        case SumVariant::s5: return 2.0 / pi_i;
        case SumVariant::dedekind: break;
    }
    throw DomainError("no q-analogue scaling for the Dedekind variant; use q_dedekind_sum");
}

struct QSumResult {
    Complex value{};
    Complex scale{};
    YSumResult y;
    ParityCondition parity;
    std::optional<Complex> abel_value;  // scale * exact Abel limit, q = 1 only
};

/// q-Hardy-Berndt sum as the scaled damped Y-sum. With warn_only the parity
/// hypothesis is reported instead of enforced.
inline QSumResult q_hardy_berndt(SumVariant variant, std::int64_t h, std::int64_t k, const QParam& q,
                                 const RegularizationSchedule& reg, double tol,
                                 std::optional<DirichletCharacter> chi = std::nullopt, bool warn_only = false,
                                 YRoute route = YRoute::NFirst)
{
    if (variant == SumVariant::dedekind) {
        throw DomainError("use q_dedekind_sum for the Dedekind-type sum");
    }
    detail::require_coprime(h, k);
    QSumResult out;
    out.parity = parity_condition(variant, h, k);
    if (!out.parity.holds && !warn_only) {
        throw DomainError("parity hypothesis fails for " + std::string(to_string(variant)) + ": needs " +
                          out.parity.description);
    }
    out.scale = theorem_scale(variant);
    out.y = y_sum({family_of(variant), h, k, 1, std::move(chi)}, q, reg, tol, route);
    out.value = out.scale * out.y.value;
    if (out.y.abel_limit) {
        out.abel_value = out.scale * *out.y.abel_limit;
    }
    return out;
}

/// p! / (2 pi i)^p times the damped Y_p.
inline QSumResult q_dedekind_sum(unsigned p, std::int64_t h, std::int64_t k, const QParam& q,
                                 const RegularizationSchedule& reg, double tol, YRoute route = YRoute::NFirst)
{
    if (p == 0 || p % 2 == 0) {
        throw DomainError("p must be an odd integer >= 1");
    }
    QSumResult out;
    out.parity = {SumVariant::dedekind, true, "none"};
    Complex scale = 1.0;
    for (unsigned i = 1; i <= p; ++i) {
        scale *= static_cast<double>(i) / Complex(0.0, 2.0 * std::numbers::pi);
    }
    out.scale = scale;
    out.y = y_sum({YFamily::Dedekind, h, k, p, std::nullopt}, q, reg, tol, route);
    out.value = scale * out.y.value;
    if (out.y.abel_limit) {
        out.abel_value = scale * *out.y.abel_limit;
    }
    return out;
}

/// The classical tan/cot series for variant (S, s1..s5), summed in closed form:
/// the coefficients have period k and vanish over a period, so the series is a
/// finite digamma combination.
inline double classical_trig_series(SumVariant variant, std::int64_t h, std::int64_t k, double tol = 1e-15)
{
    detail::require_coprime(h, k);
    const auto parity = parity_condition(variant, h, k);
    if (variant == SumVariant::dedekind) {
        throw DomainError("no trigonometric series for the Dedekind variant here");
    }
    if (!parity.holds) {
        throw DomainError("parity hypothesis fails for " + std::string(to_string(variant)) + ": needs " +
                          parity.description);
    }
    using std::numbers::pi;
    const bool odd_args = variant == SumVariant::S || variant == SumVariant::s1 || variant == SumVariant::s4 ||
                          variant == SumVariant::s5;
    const bool uses_cot = variant == SumVariant::s1 || variant == SumVariant::s4;
    std::vector<Complex> c(static_cast<std::size_t>(k));
    for (std::int64_t n = 1; n <= k; ++n) {
        if ((variant == SumVariant::s1 || variant == SumVariant::s5) && (2 * n - 1) % k == 0) {
            continue;
        }
        if (variant == SumVariant::s2 && (2 * n) % k == 0) {
            continue;
        }
        // argument pi * num / (2k)
        const std::int64_t num = odd_args ? h * (2 * n - 1) : 2 * h * n;
        const std::int64_t m = ((num % (2 * k)) + 2 * k) % (2 * k);
        const bool pole = uses_cot ? (m == 0) : (m == k);
        if (pole) {
            throw DomainError(std::string(uses_cot ? "cot" : "tan") + " pole at residue n = " + std::to_string(n) +
                              " mod " + std::to_string(k));
        }
        const double angle = pi * static_cast<double>(m) / (2.0 * static_cast<double>(k));
        c[n - 1] = uses_cot ? 1.0 / std::tan(angle) : std::tan(angle);
    }
    const double series = odd_args ? periodic_series(c, 2.0, -1.0, 1, tol).real()
                                   : periodic_series(c, 1.0, 0.0, 1, tol).real();
    switch (variant) {
        case SumVariant::S: return 4.0 / pi * series;
        case SumVariant::s1: return -2.0 / pi * series;
        case SumVariant::s2: return -1.0 / (2.0 * pi) * series;
        case SumVariant::s3: return 1.0 / pi * series;
        case SumVariant::s4: return 4.0 / pi * series;
        case SumVariant::s5: return 2.0 / pi * series;
        case SumVariant::dedekind: break;
    }
    return 0.0;
}

}  // namespace hbq
