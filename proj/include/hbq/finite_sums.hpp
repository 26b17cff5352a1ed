#pragma once

// Classical Dedekind sum and the six Hardy-Berndt sums, exactly.

#include "hbq/exact.hpp"

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

namespace hbq {

enum class SumVariant { S, s1, s2, s3, s4, s5, dedekind };

inline std::string_view to_string(SumVariant v)
{
    switch (v) {
        case SumVariant::S: return "S";
        case SumVariant::s1: return "s1";
        case SumVariant::s2: return "s2";
        case SumVariant::s3: return "s3";
        case SumVariant::s4: return "s4";
        case SumVariant::s5: return "s5";
        case SumVariant::dedekind: return "dedekind";
    }
    return "?";
}

inline SumVariant parse_variant(std::string_view text)
{
    for (auto v : {SumVariant::S, SumVariant::s1, SumVariant::s2, SumVariant::s3, SumVariant::s4,
                   SumVariant::s5, SumVariant::dedekind}) {
        if (text == to_string(v)) {
            return v;
        }
    }
    throw DomainError("unknown sum variant '" + std::string(text) + "'");
}

struct SumArgs {
    SumVariant variant;
    std::int64_t h;
    std::int64_t k;
};

struct ParityCondition {
    SumVariant variant;
    bool holds;
    std::string description;
};

namespace detail {

inline void require_coprime(std::int64_t h, std::int64_t k)
{
    if (k < 1) {
        throw DomainError("k must be positive, got " + std::to_string(k));
    }
    if (std::gcd(h, k) != 1) {
        throw DomainError("h and k must be coprime, got (" + std::to_string(h) + ", " + std::to_string(k) + ")");
    }
}

inline int parity_sign(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

inline std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

}  // namespace detail

/// s(h, k) = sum_{j=1}^{k-1} ((j/k)) ((hj/k)).
inline Rational dedekind_sum(std::int64_t h, std::int64_t k)
{
    detail::require_coprime(h, k);
    Rational sum = 0;
    for (std::int64_t j = 1; j < k; ++j) {
        sum += sawtooth(Rational(j, k)) * sawtooth(Rational(h * j, k));
    }
    return sum;
}

inline Rational hardy_berndt(const SumArgs& args)
{
    const auto [variant, h, k] = args;
    if (variant == SumVariant::dedekind) {
        return dedekind_sum(h, k);
    }
    detail::require_coprime(h, k);
    using detail::parity_sign;
    Rational sum = 0;
    for (std::int64_t j = 1; j <= k; ++j) {
        const std::int64_t fl = detail::floor_div(h * j, k);
        switch (variant) {
            case SumVariant::S:
                if (j < k) {
                    sum += parity_sign(j + 1 + fl);
                }
                break;
            case SumVariant::s1:
                sum += parity_sign(fl) * sawtooth(Rational(j, k));
                break;
            case SumVariant::s2:
                sum += parity_sign(j) * sawtooth(Rational(j, k)) * sawtooth(Rational(h * j, k));
                break;
            case SumVariant::s3:
                sum += parity_sign(j) * sawtooth(Rational(h * j, k));
                break;
            case SumVariant::s4:
                if (j < k) {
                    sum += parity_sign(fl);
                }
                break;
            case SumVariant::s5:
                sum += parity_sign(j + fl) * sawtooth(Rational(j, k));
                break;
            case SumVariant::dedekind: break;
        }
    }
    return sum;
}

inline ParityCondition parity_condition(SumVariant variant, std::int64_t h, std::int64_t k)
{
    const bool h_odd = (h % 2) != 0;
    const bool k_odd = (k % 2) != 0;
    switch (variant) {
        case SumVariant::S: return {variant, h_odd != k_odd, "h+k odd"};
        case SumVariant::s1: return {variant, !h_odd && k_odd, "h even and k odd"};
        case SumVariant::s2: return {variant, h_odd && !k_odd, "h odd and k even"};
        case SumVariant::s3: return {variant, k_odd, "k odd"};
        case SumVariant::s4: return {variant, h_odd, "h odd"};
        case SumVariant::s5: return {variant, h_odd && k_odd, "h and k odd"};
        case SumVariant::dedekind: return {variant, true, "none"};
    }
    return {variant, false, "?"};
}

}  // namespace hbq
