#pragma once

// Exact arithmetic foundation: big rationals, the sawtooth function, the
// q-bracket and the uniform result record for infinite series.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace hbq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

/// Raised when an argument lies outside the domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Largest integer not exceeding r.
inline BigInt floor(const Rational& r)
{
    BigInt n = numerator(r);
    BigInt d = denominator(r);
    BigInt q = n / d;  // truncates toward zero
    if (n < 0 && q * d != n) {
        --q;
    }
    return q;
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// r - floor(r), in [0, 1).
inline Rational frac(const Rational& r) { return r - Rational(floor(r)); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational pow(const Rational& base, unsigned exponent)
{
    Rational out = 1;
    Rational b = base;
    while (exponent != 0) {
        if ((exponent & 1U) != 0) {
            out *= b;
        }
        b *= b;
        exponent >>= 1U;
    }
    return out;
}

inline std::string to_string(const Rational& r)
{
    if (is_integer(r)) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p/r", "n", or a terminating decimal such as "-0.25" into an exact
/// rational. No floating point is involved.
inline Rational parse_rational(std::string_view text)
{
    auto bad = [&] { return DomainError("not a rational number: '" + std::string(text) + "'"); };
    auto parse_int = [&](std::string_view s) -> BigInt {
        if (s.empty()) {
            throw bad();
        }
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) {
            throw bad();
        }
        for (std::size_t j = i; j < s.size(); ++j) {
            if (s[j] < '0' || s[j] > '9') {
                throw bad();
            }
        }
        // a leading zero would make Boost read the digits as octal
        const auto first = s.find_first_not_of('0', i);
        BigInt v(first == std::string_view::npos ? std::string("0") : std::string(s.substr(first)));
        return s[0] == '-' ? BigInt(-v) : v;
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt den = parse_int(text.substr(slash + 1));
        if (den == 0) {
            throw bad();
        }
        return Rational(parse_int(text.substr(0, slash)), den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string digits(text.substr(0, dot));
        std::string_view fraction = text.substr(dot + 1);
        if (fraction.empty() || digits.empty() || digits == "-" || digits == "+") {
            digits += "0";
        }
        for (char c : fraction) {
            if (c < '0' || c > '9') {
                throw bad();
            }
        }
        BigInt whole = parse_int(std::string(digits) + std::string(fraction));
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(fraction.size()));
        return Rational(whole, scale);
    }
    return Rational(parse_int(text));
}

/// ((x)) = x - floor(x) - 1/2 for non-integral x, and 0 on the integers.
inline Rational sawtooth(const Rational& x)
{
    if (is_integer(x)) {
        return 0;
    }
    return frac(x) - Rational(1, 2);
}

/// The deformation parameter q together with the regime that decides which
/// evaluation paths are legal.
class QParam {
public:
    enum class Regime { RealUnit, Limit1, ComplexUnitDisk };

    /// 0 < q < 1, held exactly.
    static QParam real(const Rational& q)
    {
        if (q <= 0 || q >= 1) {
            throw DomainError("q must satisfy 0 < q < 1, got " + hbq::to_string(q));
        }
        return QParam(Regime::RealUnit, q, Complex(to_double(q), 0.0));
    }

    static QParam one() { return QParam(Regime::Limit1, Rational(1), Complex(1.0, 0.0)); }

    /// |q| < 1 in the complex plane.
    static QParam complex(Complex q)
    {
        if (!(std::abs(q) < 1.0)) {
            throw DomainError("complex q must satisfy |q| < 1");
        }
        return QParam(Regime::ComplexUnitDisk, Rational(0), q);
    }

    /// Parses "1", "p/r", a decimal, or "re,im" for a complex q.
    static QParam parse(std::string_view text)
    {
        if (auto comma = text.find(','); comma != std::string_view::npos) {
            double re = std::stod(std::string(text.substr(0, comma)));
            double im = std::stod(std::string(text.substr(comma + 1)));
            if (im == 0.0 && re > 0.0 && re < 1.0) {
                return real(parse_rational(text.substr(0, comma)));
            }
            return complex(Complex(re, im));
        }
        Rational q = parse_rational(text);
        if (q == 1) {
            return one();
        }
        return real(q);
    }

    [[nodiscard]] Regime regime() const noexcept { return regime_; }
    [[nodiscard]] bool is_exact() const noexcept { return regime_ != Regime::ComplexUnitDisk; }
    [[nodiscard]] bool is_limit() const noexcept { return regime_ == Regime::Limit1; }

    /// Exact value; only meaningful when is_exact().
    [[nodiscard]] const Rational& exact() const
    {
        if (!is_exact()) {
            throw DomainError("complex q has no exact value");
        }
        return exact_;
    }

    [[nodiscard]] Complex value() const noexcept { return approx_; }
    [[nodiscard]] double real_value() const noexcept { return approx_.real(); }

    /// 1 - q, computed exactly before rounding when q is rational.
    [[nodiscard]] Complex one_minus() const
    {
        if (is_exact()) {
            return Complex(to_double(Rational(1) - exact_), 0.0);
        }
        return Complex(1.0, 0.0) - approx_;
    }

    /// q^f as a parameter of the same regime.
    [[nodiscard]] QParam power(unsigned f) const
    {
        switch (regime_) {
            case Regime::RealUnit: return real(hbq::pow(exact_, f));
            case Regime::Limit1: return one();
            case Regime::ComplexUnitDisk: return complex(std::pow(approx_, static_cast<int>(f)));
        }
        return *this;
    }

    [[nodiscard]] std::string to_string() const
    {
        if (is_exact()) {
            return hbq::to_string(exact_);
        }
        return std::to_string(approx_.real()) + "," + std::to_string(approx_.imag());
    }

private:
    QParam(Regime r, Rational exact, Complex approx) : regime_(r), exact_(std::move(exact)), approx_(approx) {}

    Regime regime_;
    Rational exact_;
    Complex approx_;
};

/// Value of an infinite series with a bound on the truncation error.
struct SeriesValue {
    Complex value{};
    double tail_bound = 0.0;
    std::int64_t terms_used = 0;
};

/// [n] = (1 - q^n)/(1 - q) exactly; [n] = n at q = 1.
inline Rational qbracket(std::uint64_t n, const Rational& q)
{
    if (q == 1) {
        return Rational(n);
    }
    // geometric sum 1 + q + ... + q^{n-1} avoids the division
    Rational sum = 0;
    Rational term = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        sum += term;
        term *= q;
    }
    return sum;
}

/// [x] for real x >= 0 in floating point. Uses expm1/log1p so that q close
/// to 1 keeps full relative accuracy.
inline double qbracket_real(double x, const QParam& q)
{
    if (q.is_limit()) {
        return x;
    }
    const double delta = q.one_minus().real();
    return -std::expm1(x * std::log1p(-delta)) / delta;
}

/// Complex-q bracket (1 - q^x)/(1 - q) on the principal branch.
inline Complex qbracket_complex(Complex x, Complex q)
{
    return (Complex(1.0, 0.0) - std::pow(q, x)) / (Complex(1.0, 0.0) - q);
}

/// qbracket(n, q) in whichever domain the regime dictates.
inline std::variant<Rational, Complex> qbracket(std::uint64_t n, const QParam& q)
{
    if (q.is_exact()) {
        return qbracket(n, q.exact());
    }
    return qbracket_complex(Complex(static_cast<double>(n), 0.0), q.value());
}

}  // namespace hbq
