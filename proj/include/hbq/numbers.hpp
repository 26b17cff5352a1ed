#pragma once

// Bernoulli, Euler and Genocchi numbers as exact rationals, and the
// q-Euler / q-Genocchi numbers.

#include "hbq/exact.hpp"

#include <cmath>
#include <vector>

namespace hbq {

enum class NumberKind { Bernoulli, Euler, Genocchi };

struct NumberTable {
    NumberKind kind;
    std::vector<Rational> entries;

    [[nodiscard]] const Rational& operator[](std::size_t n) const { return entries.at(n); }
    [[nodiscard]] std::size_t size() const noexcept { return entries.size(); }
};

namespace detail {

// Pascal row n: C(n, 0..n).
inline std::vector<BigInt> binomial_row(unsigned n)
{
    std::vector<BigInt> row(n + 1);
    row[0] = 1;
    for (unsigned k = 1; k <= n; ++k) {
        row[k] = row[k - 1] * (n - k + 1) / k;
    }
    return row;
}

}  // namespace detail

/// Entries 0..n_max of the chosen table.
///
/// Bernoulli: sum_{k<=n} C(n+1,k) B_k = 0 for n >= 1 (B_1 = -1/2).
/// Euler:     2 = (e^t + 1) sum E_n t^n/n!, i.e. 2 E_n + sum_{k<n} C(n,k) E_k = 2 [n = 0].
/// Genocchi:  2t = (e^t + 1) sum G_n t^n/n!, i.e. 2 G_n + sum_{k<n} C(n,k) G_k = 2 [n = 1].
inline NumberTable number_table(NumberKind kind, unsigned n_max)
{
    NumberTable table{kind, {}};
    auto& e = table.entries;
    e.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
        if (kind == NumberKind::Bernoulli) {
            if (n == 0) {
                e.emplace_back(1);
                continue;
            }
            auto row = detail::binomial_row(n + 1);
            Rational acc = 0;
            for (unsigned k = 0; k < n; ++k) {
                acc += Rational(row[k]) * e[k];
            }
            e.push_back(-acc / Rational(row[n]));
        } else {
            auto row = detail::binomial_row(n);
            Rational acc = 0;
            for (unsigned k = 0; k < n; ++k) {
                acc += Rational(row[k]) * e[k];
            }
            const unsigned source = kind == NumberKind::Euler ? 0U : 1U;
            Rational rhs = (n == source) ? Rational(2) : Rational(0);
            e.push_back((rhs - acc) / 2);
        }
    }
    return table;
}

/// Kim's q-Euler number E_{m,q} from the Cauchy product of its generating
/// function: [2] (1-q)^{-m} sum_{k=0}^{m} C(m,k) (-1)^k / (1 + q^{k+1}).
inline Rational q_euler_number(unsigned m, const Rational& q)
{
    if (q == 1) {
        throw DomainError("q-Euler numbers are undefined at q = 1; use the Euler table");
    }
    auto row = detail::binomial_row(m);
    Rational sum = 0;
    Rational qk = q;  // q^{k+1}
    for (unsigned k = 0; k <= m; ++k) {
        Rational term = Rational(row[k]) / (1 + qk);
        sum += (k % 2 == 0) ? term : Rational(-term);
        qk *= q;
    }
    return (1 + q) * sum / pow(1 - q, m);
}

inline Complex q_euler_number(unsigned m, Complex q)
{
    auto row = detail::binomial_row(m);
    Complex sum = 0.0;
    Complex qk = q;
    for (unsigned k = 0; k <= m; ++k) {
        Complex term = row[k].convert_to<double>() / (1.0 + qk);
        sum += (k % 2 == 0) ? term : -term;
        qk *= q;
    }
    return (1.0 + q) * sum / std::pow(1.0 - q, static_cast<double>(m));
}

inline Complex q_euler_number(unsigned m, const QParam& q)
{
    if (q.is_limit()) {
        throw DomainError("q-Euler numbers are undefined at q = 1; use the Euler table");
    }
    if (q.is_exact()) {
        return {to_double(q_euler_number(m, q.exact())), 0.0};
    }
    return q_euler_number(m, q.value());
}

/// G_{m,q} = [2] m sum_{n>=0} (-1)^n q^n [n]^{m-1}, summed until the geometric
/// majorant |q|^N B^{m-1}/(1-|q|) with B = 1/(1-|q|) >= sup |[n]| drops below tol.
inline SeriesValue q_genocchi_number(unsigned m, const QParam& q, double tol)
{
    if (!(tol > 0.0)) {
        throw DomainError("tolerance must be positive");
    }
    if (q.is_limit()) {
        throw DomainError("q-Genocchi numbers need |q| < 1; use the Genocchi table at q = 1");
    }
    if (m == 0) {
        return {Complex(0.0), 0.0, 1};
    }
    const Complex qv = q.value();
    const Complex two = 1.0 + qv;
    if (m == 1) {
        // [2] sum (-q)^n = 1 exactly
        return {Complex(1.0), 0.0, 1};
    }
    const double r = std::abs(qv);
    const double bracket_bound = 1.0 / (1.0 - r);
    const double scale = std::abs(two) * m * std::pow(bracket_bound, m - 1.0) / (1.0 - r);

    Complex sum = 0.0;
    Complex bracket = 0.0;  // [n]
    Complex qn = 1.0;       // q^n
    double rn = 1.0;        // |q|^n
    std::int64_t n = 0;
    for (;; ++n) {
        Complex term = qn * std::pow(bracket, static_cast<int>(m - 1));
        sum += (n % 2 == 0) ? term : -term;
        bracket += qn;
        qn *= qv;
        rn *= r;
        if (rn * scale <= tol) {
            break;
        }
    }
    return {two * static_cast<double>(m) * sum, rn * scale, n + 1};
}

/// Closed form of G_{m,q} for exact q: binomial expansion of [n]^{m-1} turns each
/// piece into a geometric series, giving m E_{m-1,q}.
inline Rational q_genocchi_number_exact(unsigned m, const Rational& q)
{
    if (m == 0) {
        return 0;
    }
    return Rational(m) * q_euler_number(m - 1, q);
}

}  // namespace hbq
