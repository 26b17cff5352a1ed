#pragma once

// Dirichlet characters mod f, built from a cyclic decomposition of the unit
// group via the Chinese remainder theorem.

#include "hbq/exact.hpp"

#include <cmath>
#include <cstdint>
#include <memory>
#include <numbers>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace hbq {

namespace detail {

struct CyclicFactor {
    std::uint64_t generator;  // residue mod f, trivial on the other prime powers
    std::uint64_t order;
};

/// (Z/f)^x as a product of cyclic groups, with discrete logs of every unit.
struct UnitGroup {
    std::uint64_t modulus = 1;
    std::vector<CyclicFactor> factors;
    std::vector<std::vector<std::uint32_t>> logs;  // logs[n] per factor
    std::vector<char> is_unit;
};

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t multiplicative_order(std::uint64_t g, std::uint64_t m)
{
    std::uint64_t x = g % m;
    std::uint64_t k = 1;
    while (x != 1 % m) {
        x = mulmod(x, g, m);
        ++k;
    }
    return k;
}

// Lifts r mod pe to a residue mod f that is 1 mod f/pe.
inline std::uint64_t crt_lift(std::uint64_t r, std::uint64_t pe, std::uint64_t f)
{
    const std::uint64_t rest = f / pe;
    for (std::uint64_t x = r % pe;; x += pe) {
        if (x % rest == 1 % rest) {
            return x % f;
        }
    }
}

inline std::shared_ptr<const UnitGroup> build_unit_group(std::uint64_t f)
{
    auto group = std::make_shared<UnitGroup>();
    group->modulus = f;
    std::uint64_t rest = f;
    for (std::uint64_t p = 2; rest > 1; ++p) {
        if (p * p > rest) {
            p = rest;
        }
        if (rest % p != 0) {
            continue;
        }
        std::uint64_t pe = 1;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            pe *= p;
            ++e;
        }
        if (p == 2) {
            if (e == 2) {
                group->factors.push_back({crt_lift(3, pe, f), 2});
            } else if (e >= 3) {
                group->factors.push_back({crt_lift(pe - 1, pe, f), 2});
                group->factors.push_back({crt_lift(5, pe, f), pe / 4});
            }
            continue;
        }
        const std::uint64_t phi = pe / p * (p - 1);
        std::uint64_t g = 2;
        while (multiplicative_order(g, pe) != phi) {
            ++g;
        }
        group->factors.push_back({crt_lift(g, pe, f), phi});
    }

    group->logs.assign(f, {});
    group->is_unit.assign(f, 0);
    const std::size_t r = group->factors.size();
    std::vector<std::uint32_t> exps(r, 0);
    for (;;) {
        std::uint64_t n = 1 % f;
        for (std::size_t i = 0; i < r; ++i) {
            for (std::uint32_t t = 0; t < exps[i]; ++t) {
                n = mulmod(n, group->factors[i].generator, f);
            }
        }
        group->logs[n] = exps;
        group->is_unit[n] = 1;
        std::size_t i = 0;
        while (i < r && ++exps[i] == group->factors[i].order) {
            exps[i] = 0;
            ++i;
        }
        if (i == r) {
            break;
        }
    }
    return group;
}

}  // namespace detail

class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const detail::UnitGroup> group, std::vector<std::uint32_t> exponents)
        : group_(std::move(group)), exponents_(std::move(exponents))
    {
        std::uint64_t lcm = 1;
        for (const auto& fac : group_->factors) {
            lcm = std::lcm(lcm, fac.order);
        }
        // phase of chi(generator_i) is exponents_[i] / order_i
        std::uint64_t g = lcm;
        for (std::size_t i = 0; i < exponents_.size(); ++i) {
            g = std::gcd(g, exponents_[i] * (lcm / group_->factors[i].order));
        }
        order_ = lcm / g;
        const std::uint64_t f = group_->modulus;
        phase_.assign(f, -1);
        for (std::uint64_t n = 0; n < f; ++n) {
            if (group_->is_unit[n] == 0) {
                continue;
            }
            const auto& lg = group_->logs[n];
            std::uint64_t num = 0;
            for (std::size_t i = 0; i < lg.size(); ++i) {
                num += static_cast<std::uint64_t>(exponents_[i]) * lg[i] * (lcm / group_->factors[i].order);
                num %= lcm;
            }
            phase_[n] = static_cast<std::int64_t>(num / g);
        }
    }

    [[nodiscard]] std::uint64_t modulus() const noexcept { return group_->modulus; }
    [[nodiscard]] std::uint64_t order() const noexcept { return order_; }
    [[nodiscard]] const std::vector<std::uint32_t>& exponents() const noexcept { return exponents_; }
    [[nodiscard]] bool is_principal() const noexcept { return order_ == 1; }
    [[nodiscard]] bool is_real() const noexcept { return order_ <= 2; }

    /// chi(n) = exp(2 pi i phase/order); -1 when gcd(n, f) > 1.
    [[nodiscard]] std::int64_t phase(std::int64_t n) const
    {
        const auto f = static_cast<std::int64_t>(modulus());
        return phase_[static_cast<std::size_t>(((n % f) + f) % f)];
    }

    /// Exact value for characters of order <= 2.
    [[nodiscard]] int real_value(std::int64_t n) const
    {
        const auto ph = phase(n);
        if (ph < 0) {
            return 0;
        }
        if (order_ > 2) {
            throw DomainError("character is not real");
        }
        return ph == 0 ? 1 : -1;
    }

    [[nodiscard]] Complex operator()(std::int64_t n) const
    {
        const auto ph = phase(n);
        if (ph < 0) {
            return 0.0;
        }
        // exact fast paths for 1, -1, i, -i
        if (4 % order_ == 0) {
            switch (ph * static_cast<std::int64_t>(4 / order_)) {
                case 0: return {1.0, 0.0};
                case 1: return {0.0, 1.0};
                case 2: return {-1.0, 0.0};
                default: return {0.0, -1.0};
            }
        }
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(ph) / static_cast<double>(order_);
        return {std::cos(angle), std::sin(angle)};
    }

    /// chi(-1) = +1 (even) or -1 (odd).
    [[nodiscard]] int parity() const
    {
        if (modulus() <= 2) {
            return 1;
        }
        return phase(-1) == 0 ? 1 : -1;
    }

    [[nodiscard]] std::string label() const
    {
        std::string out = std::to_string(modulus()) + ":[";
        for (std::size_t i = 0; i < exponents_.size(); ++i) {
            out += (i ? "," : "") + std::to_string(exponents_[i]);
        }
        return out + "]";
    }

private:
    std::shared_ptr<const detail::UnitGroup> group_;
    std::vector<std::uint32_t> exponents_;
    std::uint64_t order_ = 1;
    std::vector<std::int64_t> phase_;
};

/// All phi(f) characters mod f; principal first, then lexicographic in the
/// exponent vector.
inline std::vector<DirichletCharacter> characters_mod(std::uint64_t f)
{
    if (f == 0) {
        throw DomainError("modulus must be positive");
    }
    auto group = detail::build_unit_group(f);
    const std::size_t r = group->factors.size();
    std::vector<DirichletCharacter> out;
    std::vector<std::uint32_t> exps(r, 0);
    for (;;) {
        out.emplace_back(group, exps);
        // increment the last coordinate first so the output is lexicographic
        std::size_t i = r;
        while (i > 0) {
            --i;
            if (++exps[i] < group->factors[i].order) {
                break;
            }
            exps[i] = 0;
            if (i == 0) {
                return out;
            }
        }
        if (r == 0) {
            return out;
        }
    }
}

inline DirichletCharacter principal_character(std::uint64_t f = 1) { return characters_mod(f).front(); }

/// Parses the "f:index" addressing used by the command line.
inline DirichletCharacter parse_character(std::string_view text)
{
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw DomainError("character must be written f:index, got '" + std::string(text) + "'");
    }
    std::uint64_t f = 0;
    std::uint64_t index = 0;
    try {
        f = std::stoull(std::string(text.substr(0, colon)));
        index = std::stoull(std::string(text.substr(colon + 1)));
    } catch (const std::exception&) {
        throw DomainError("character must be written f:index, got '" + std::string(text) + "'");
    }
    auto chars = characters_mod(f);
    if (index >= chars.size()) {
        throw DomainError("character index " + std::to_string(index) + " out of range for modulus " +
                          std::to_string(f) + " (" + std::to_string(chars.size()) + " characters)");
    }
    return chars[index];
}

inline Complex chi_eval(const DirichletCharacter& chi, std::int64_t n) { return chi(n); }

}  // namespace hbq
