#pragma once

// Verification suites over fixed parameter grids, shared by the command line
// and the acceptance runner. Flags given in SuiteOptions replace one grid axis.

#include "hbq/hbq.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hbq {

struct SuiteOptions {
    std::optional<Complex> s;
    std::optional<QParam> q;
    std::optional<DirichletCharacter> chi;
    std::optional<double> x;
    std::optional<double> tol;
    std::optional<SumVariant> variant;
    std::optional<std::int64_t> h;
    std::optional<std::int64_t> k;
    std::optional<RegularizationSchedule> reg;
};

namespace detail {

inline std::string format_s(Complex s)
{
    return format_double(s.real()) + (s.imag() != 0.0 ? "," + format_double(s.imag()) : "");
}

template <class T>
std::vector<T> axis(const std::optional<T>& flag, std::vector<T> grid)
{
    if (flag) {
        return {*flag};
    }
    return grid;
}

inline std::vector<QParam> q_axis(const std::optional<QParam>& flag, std::initializer_list<const char*> grid)
{
    if (flag) {
        return {*flag};
    }
    std::vector<QParam> out;
    for (const char* g : grid) {
        out.push_back(QParam::parse(g));
    }
    return out;
}

inline std::vector<DirichletCharacter> odd_conductor_characters()
{
    std::vector<DirichletCharacter> out;
    for (std::uint64_t f : {3, 5}) {
        for (auto& c : characters_mod(f)) {
            out.push_back(c);
        }
    }
    return out;
}

inline double extra(const VerificationOutcome& o, const std::string& name)
{
    for (const auto& [k, v] : o.extras) {
        if (k == name) {
            return std::abs(v);
        }
    }
    return 0.0;
}

}  // namespace detail

/// Closed-form tan/cot series against the exact finite sums, all coprime
/// (h, k) with k <= 15 and each admissible variant.
inline std::vector<ReportItem> suite_thm4(const SuiteOptions& o)
{
    const double tol = o.tol.value_or(1e-9);
    std::vector<ReportItem> out;
    const auto variants = detail::axis<SumVariant>(
        o.variant, {SumVariant::S, SumVariant::s1, SumVariant::s2, SumVariant::s3, SumVariant::s4, SumVariant::s5});
    for (auto v : variants) {
        for (std::int64_t k = 1; k <= 15; ++k) {
            if (o.k && *o.k != k) {
                continue;
            }
            for (std::int64_t h = 1; h <= k; ++h) {
                if ((o.h && *o.h != h) || std::gcd(h, k) != 1 || !parity_condition(v, h, k).holds) {
                    continue;
                }
                VerificationOutcome oc;
                oc.name = "thm4";
                oc.tolerance = tol;
                oc.params = {{"variant", std::string(to_string(v))}, {"h", std::to_string(h)}, {"k", std::to_string(k)}};
                oc.rhs = to_double(hardy_berndt({v, h, k}));
                try {
                    oc.lhs = classical_trig_series(v, h, k);
                    oc.settle();
                } catch (const DomainError& e) {
                    oc.lhs = std::numeric_limits<double>::quiet_NaN();
                    oc.abs_diff = std::numeric_limits<double>::infinity();
                    oc.pass = false;
                    oc.notes.emplace_back(e.what());
                }
                auto item = ReportItem::from_outcome(oc, "digamma-closed-form", "tail_bound", 1e-14 * k);
                item.exact = to_string(hardy_berndt({v, h, k}));
                out.push_back(std::move(item));
            }
        }
    }
    return out;
}

inline std::vector<ReportItem> suite_decomposition(bool two_variable, const SuiteOptions& o)
{
    const double tol = o.tol.value_or(1e-10);
    const auto chars = o.chi ? std::vector<DirichletCharacter>{*o.chi} : detail::odd_conductor_characters();
    const auto ss = detail::axis<Complex>(o.s, {2.0, 3.0});
    const auto qs = detail::q_axis(o.q, {"1/2", "1/3"});
    const auto xs = detail::axis<double>(o.x, {0.25, 0.5});
    struct Case {
        DirichletCharacter chi;
        Complex s;
        QParam q;
        double x;
    };
    std::vector<Case> cases;
    for (const auto& c : chars) {
        for (auto s : ss) {
            for (const auto& q : qs) {
                if (two_variable) {
                    for (double x : xs) {
                        cases.push_back({c, s, q, x});
                    }
                } else {
                    cases.push_back({c, s, q, 0.0});
                }
            }
        }
    }
    return parallel_map(cases.size(), [&](std::size_t i) {
        const auto& c = cases[i];
        auto oc = two_variable ? verify_theorem6(c.s, c.x, c.chi, c.q, tol) : verify_theorem5(c.s, c.chi, c.q, tol);
        for (auto& [k, v] : oc.params) {
            if (k == "s") {
                v = detail::format_s(c.s);
            } else if (k == "x") {
                v = detail::format_double(c.x);
            }
        }
        const double bound = detail::extra(oc, "lhs_tail_bound") + detail::extra(oc, "rhs_tail_bound");
        return ReportItem::from_outcome(oc, "q-series", "tail_bound", bound);
    });
}

/// Quadrature against series for Im_q, the additive Im_q(s, x) and l_q.
inline std::vector<ReportItem> suite_mellin_defs(const SuiteOptions& o)
{
    const double tol = o.tol.value_or(1e-8);
    const auto ss = detail::axis<Complex>(o.s, {2.0, 3.0, 2.5});
    const auto qs = detail::q_axis(o.q, {"3/10", "1/2", "4/5"});
    const DirichletCharacter chi = o.chi.value_or(parse_character("4:1"));
    const double x = o.x.value_or(0.5);
    struct Case {
        Complex s;
        QParam q;
        int which;
    };
    std::vector<Case> cases;
    for (auto s : ss) {
        for (const auto& q : qs) {
            for (int which = 0; which < 3; ++which) {
                cases.push_back({s, q, which});
            }
        }
    }
    return parallel_map(cases.size(), [&](std::size_t i) {
        const auto& c = cases[i];
        const MellinIntegrand g = c.which == 0   ? MellinIntegrand::F()
                                  : c.which == 1 ? MellinIntegrand::F_x(x)
                                                 : MellinIntegrand::F_chi(chi);
        QuadratureConfig cfg;
        cfg.tol = 1e-2 * tol;
        const auto quad = mellin_transform(g, c.s, c.q, cfg);
        const auto series = mellin_series_value(g, c.s, c.q, 1e-3 * tol);
        VerificationOutcome oc;
        oc.name = "mellin-defs";
        oc.tolerance = tol;
        oc.params = {{"function", c.which == 0 ? "Im_q" : c.which == 1 ? "Im_q(s,x)" : "l_q"},
                     {"s", detail::format_s(c.s)},
                     {"q", c.q.to_string()}};
        if (c.which == 1) {
            oc.params.emplace_back("x", detail::format_double(x));
        }
        if (c.which == 2) {
            oc.params.emplace_back("chi", chi.label());
        }
        oc.lhs = quad.value;
        oc.rhs = series.value;
        oc.extras.emplace_back("quadrature_error_bound", quad.tail_bound);
        oc.extras.emplace_back("series_tail_bound", series.tail_bound);
        oc.settle();
        return ReportItem::from_outcome(oc, "quadrature-vs-series", "tail_bound", quad.tail_bound + series.tail_bound);
    });
}

inline std::vector<ReportItem> suite_product(int id, const SuiteOptions& o)
{
    const double tol = o.tol.value_or(1e-4);
    const Complex s = o.s.value_or(2.0);
    const QParam q = o.q.value_or(QParam::parse("1/2"));
    std::optional<DirichletCharacter> chi;
    if (id == 22 || id == 23) {
        chi = o.chi.value_or(parse_character("4:1"));
    }
    ProductConfig cfg;
    if (o.reg) {
        cfg.reg = *o.reg;
    }
    auto oc = verify_product_theorem(id, s, q, chi, tol, cfg);
    oc.params[0].second = detail::format_s(s);
    return {ReportItem::from_outcome(oc, "damped-extrapolated", "residual",
                                     detail::extra(oc, "extrapolation_residual") + detail::extra(oc, "series_tail_bound"))};
}

/// q = 1 q-sums against the exact finite sums.
inline std::vector<ReportItem> suite_qlimit(const SuiteOptions& o)
{
    const double tol = o.tol.value_or(1e-6);
    const RegularizationSchedule reg = o.reg.value_or(RegularizationSchedule{});
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs{{1, 2}, {2, 3}, {1, 3}, {3, 4}, {1, 5}};
    if (o.h && o.k) {
        pairs = {{*o.h, *o.k}};
    }
    const auto variants = detail::axis<SumVariant>(
        o.variant, {SumVariant::S, SumVariant::s1, SumVariant::s2, SumVariant::s3, SumVariant::s4, SumVariant::s5});
    std::vector<ReportItem> out;
    for (auto v : variants) {
        for (auto [h, k] : pairs) {
            if (!parity_condition(v, h, k).holds) {
                continue;
            }
            const auto r = q_hardy_berndt(v, h, k, QParam::one(), reg, tol, o.chi);
            VerificationOutcome oc;
            oc.name = "qlimit";
            oc.tolerance = tol;
            oc.params = {{"variant", std::string(to_string(v))}, {"h", std::to_string(h)}, {"k", std::to_string(k)}};
            if (o.chi) {
                oc.params.emplace_back("chi", o.chi->label());
            }
            oc.lhs = r.value;
            oc.rhs = to_double(hardy_berndt({v, h, k}));
            oc.extras.emplace_back("extrapolation_residual", r.y.residual);
            if (r.abel_value) {
                oc.extras.emplace_back("exact_abel_limit", *r.abel_value);
            }
            try {
                oc.extras.emplace_back("classical_trig_series", classical_trig_series(v, h, k));
            } catch (const DomainError&) {
            }
            oc.settle();
            auto item = ReportItem::from_outcome(oc, "damped-extrapolated", "residual", r.y.residual);
            item.terms_used = r.y.terms_used;
            out.push_back(std::move(item));
        }
    }
    return out;
}

inline const std::vector<std::string>& suite_targets()
{
    static const std::vector<std::string> names{"thm4",  "thm5",  "thm6",  "mellin-defs", "thm19", "thm20",
                                                "thm21", "thm22", "thm23", "all",         "qlimit"};
    return names;
}

/// "all" runs every target except qlimit.
inline std::vector<ReportItem> run_suite(const std::string& target, const SuiteOptions& o)
{
    if (target == "thm4") {
        return suite_thm4(o);
    }
    if (target == "thm5" || target == "thm6") {
        return suite_decomposition(target == "thm6", o);
    }
    if (target == "mellin-defs") {
        return suite_mellin_defs(o);
    }
    if (target == "qlimit") {
        return suite_qlimit(o);
    }
    if (target.size() == 5 && target.rfind("thm", 0) == 0) {
        const int id = std::stoi(target.substr(3));
        if (id >= 19 && id <= 23) {
            return suite_product(id, o);
        }
    }
    if (target == "all") {
        std::vector<ReportItem> out;
        for (const auto& t : suite_targets()) {
            if (t == "all" || t == "qlimit") {
                continue;
            }
            auto part = run_suite(t, o);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw DomainError("unknown verify target '" + target + "'");
}

}  // namespace hbq
