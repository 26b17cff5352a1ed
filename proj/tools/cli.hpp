#pragma once

// Command-line front end. run_cli returns 0 when every requested check passes,
// 1 when a check fails and 2 on usage or domain errors.

#include "hbq/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hbq::cli {

struct Flags {
    std::string q;
    std::string s;
    std::optional<std::int64_t> h;
    std::optional<std::int64_t> k;
    std::string variant;
    std::string chi;
    std::optional<double> x;
    unsigned p = 1;
    std::optional<double> tol;
    std::string eps;
    int order = 2;
    std::int64_t terms_max = 20000;
    std::string format = "text";
    std::string out;
    // subcommand specific
    std::string kind = "bernoulli";
    unsigned n = 10;
    std::uint64_t f = 4;
    std::optional<std::int64_t> at;
    std::string fn;
    std::string z;
    bool genocchi = false;
    std::string hurwitz = "additive";
    std::string route = "n-first";
    bool warn_parity = false;
    bool raw = false;
    std::string target;
};

inline Complex parse_complex(const std::string& text, const char* flag)
{
    try {
        std::size_t used = 0;
        if (auto comma = text.find(','); comma != std::string::npos) {
            const double re = std::stod(text.substr(0, comma), &used);
            const double im = std::stod(text.substr(comma + 1));
            return {re, im};
        }
        const double re = std::stod(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return {re, 0.0};
    } catch (const std::exception&) {
        throw DomainError(std::string(flag) + ": expected re[,im], got '" + text + "'");
    }
}

inline RegularizationSchedule parse_schedule(const Flags& f)
{
    RegularizationSchedule reg;
    if (!f.eps.empty()) {
        reg.offsets.clear();
        std::stringstream ss(f.eps);
        std::string part;
        while (std::getline(ss, part, ',')) {
            try {
                reg.offsets.push_back(std::stod(part));
            } catch (const std::exception&) {
                throw DomainError("--eps: cannot parse '" + part + "'");
            }
        }
        reg.order = std::min<int>(f.order, static_cast<int>(reg.offsets.size()) - 1);
    } else {
        reg.order = f.order;
    }
    reg.validate();
    return reg;
}

inline QParam require_q(const Flags& f, const char* fallback = nullptr)
{
    if (f.q.empty()) {
        if (fallback != nullptr) {
            return QParam::parse(fallback);
        }
        throw DomainError("--q is required");
    }
    try {
        return QParam::parse(f.q);
    } catch (const DomainError&) {
        throw;
    } catch (const std::exception&) {
        throw DomainError("--q: cannot parse '" + f.q + "'");
    }
}

inline std::int64_t require(const std::optional<std::int64_t>& v, const char* flag)
{
    if (!v) {
        throw DomainError(std::string(flag) + " is required");
    }
    return *v;
}

inline double tolerance(const Flags& f, double fallback)
{
    const double t = f.tol.value_or(fallback);
    if (!(t > 0.0)) {
        throw DomainError("--tol must be positive");
    }
    return t;
}

inline ReportItem value_item(std::string name, std::vector<std::pair<std::string, std::string>> params,
                             std::string route, const SeriesValue& v)
{
    ReportItem item;
    item.name = std::move(name);
    item.params = std::move(params);
    item.route = std::move(route);
    item.value = v.value;
    item.certificate = v.tail_bound;
    item.terms_used = v.terms_used;
    return item;
}

inline ReportItem exact_item(std::string name, std::vector<std::pair<std::string, std::string>> params,
                             const Rational& r)
{
    ReportItem item;
    item.name = std::move(name);
    item.params = std::move(params);
    item.route = "exact";
    item.value = to_double(r);
    item.exact = to_string(r);
    item.certificate_kind = "exact";
    return item;
}

inline void cmd_finite(const Flags& f, Report& rep)
{
    const auto v = parse_variant(f.variant.empty() ? "S" : f.variant);
    const auto h = require(f.h, "--h");
    const auto k = require(f.k, "--k");
    const Rational r = v == SumVariant::dedekind ? dedekind_sum(h, k) : hardy_berndt({v, h, k});
    auto item = exact_item(std::string(to_string(v)), {{"h", std::to_string(h)}, {"k", std::to_string(k)}}, r);
    const auto parity = parity_condition(v, h, k);
    if (!parity.holds) {
        item.notes.push_back("parity hypothesis (" + parity.description + ") does not hold");
    }
    rep.items.push_back(std::move(item));
}

inline void cmd_numbers(const Flags& f, Report& rep)
{
    const std::string& kind = f.kind;
    if (kind == "bernoulli" || kind == "euler" || kind == "genocchi") {
        const auto nk = kind == "bernoulli" ? NumberKind::Bernoulli : kind == "euler" ? NumberKind::Euler : NumberKind::Genocchi;
        const auto table = number_table(nk, f.n);
        for (unsigned i = 0; i <= f.n; ++i) {
            rep.items.push_back(exact_item(kind, {{"n", std::to_string(i)}}, table[i]));
        }
        return;
    }
    if (kind != "q-euler" && kind != "q-genocchi") {
        throw DomainError("--kind must be bernoulli, euler, genocchi, q-euler or q-genocchi");
    }
    const QParam q = require_q(f);
    for (unsigned i = 0; i <= f.n; ++i) {
        std::vector<std::pair<std::string, std::string>> params{{"n", std::to_string(i)}, {"q", q.to_string()}};
        if (q.is_exact() && !q.is_limit()) {
            const Rational r = kind == "q-euler" ? q_euler_number(i, q.exact()) : q_genocchi_number_exact(i, q.exact());
            rep.items.push_back(exact_item(kind, params, r));
        } else if (kind == "q-euler") {
            rep.items.push_back(value_item(kind, params, "recurrence", {q_euler_number(i, q), 0.0, 0}));
        } else {
            rep.items.push_back(value_item(kind, params, "q-series", q_genocchi_number(i, q, tolerance(f, 1e-12))));
        }
    }
}

inline void cmd_characters(const Flags& f, Report& rep)
{
    const auto chars = characters_mod(f.f);
    for (std::size_t i = 0; i < chars.size(); ++i) {
        const auto& c = chars[i];
        ReportItem item;
        item.name = "character";
        item.params = {{"chi", std::to_string(f.f) + ":" + std::to_string(i)},
                       {"exponents", c.label()},
                       {"order", std::to_string(c.order())},
                       {"parity", c.parity() > 0 ? "even" : "odd"}};
        item.route = "unit-group";
        item.certificate_kind = "exact";
        if (f.at) {
            item.params.emplace_back("n", std::to_string(*f.at));
            item.value = c(*f.at);
        } else {
            for (std::uint64_t a = 0; a < f.f; ++a) {
                item.extras.emplace_back("chi(" + std::to_string(a) + ")", c(static_cast<std::int64_t>(a)));
            }
        }
        rep.items.push_back(std::move(item));
    }
}

inline void cmd_zeta(const Flags& f, Report& rep)
{
    const double tol = tolerance(f, 1e-12);
    const std::string fn = f.fn.empty() ? "riemann" : f.fn;
    if (fn == "digamma") {
        if (!f.x) {
            throw DomainError("--x is required");
        }
        rep.items.push_back(value_item(fn, {{"x", detail::format_double(*f.x)}}, "asymptotic", {digamma(*f.x, tol), tol, 0}));
        return;
    }
    if (f.s.empty()) {
        throw DomainError("--s is required");
    }
    const Complex s = parse_complex(f.s, "--s");
    std::vector<std::pair<std::string, std::string>> params{{"s", detail::format_s(s)}};
    if (fn == "riemann") {
        rep.items.push_back(value_item(fn, params, "eta-cvz", riemann_zeta(s, tol)));
    } else if (fn == "eta") {
        rep.items.push_back(value_item(fn, params, "cvz", dirichlet_eta(s, tol)));
    } else if (fn == "genocchi") {
        rep.items.push_back(value_item(fn, params, "cvz", genocchi_zeta_classical(s, tol)));
    } else if (fn == "zeta-star") {
        rep.items.push_back(value_item(fn, params, "hurwitz", zeta_star(s, tol)));
    } else if (fn == "hurwitz") {
        if (!f.x) {
            throw DomainError("--x is required");
        }
        params.emplace_back("a", detail::format_double(*f.x));
        rep.items.push_back(value_item(fn, params, "euler-maclaurin", hurwitz_zeta(s, *f.x, tol)));
    } else if (fn == "lerch") {
        if (!f.x || f.z.empty()) {
            throw DomainError("--x and --z are required");
        }
        const Complex z = parse_complex(f.z, "--z");
        params.emplace_back("z", detail::format_s(z));
        params.emplace_back("a", detail::format_double(*f.x));
        rep.items.push_back(value_item(fn, params, "direct", lerch_phi(z, s, *f.x, tol, f.terms_max)));
    } else if (fn == "alt-character") {
        if (f.chi.empty()) {
            throw DomainError("--chi is required");
        }
        params.emplace_back("chi", f.chi);
        rep.items.push_back(value_item(fn, params, "hurwitz", alternating_character_series(s, parse_character(f.chi), tol)));
    } else {
        throw DomainError("--fn must be riemann, eta, genocchi, zeta-star, hurwitz, lerch, digamma or alt-character");
    }
}

inline void cmd_qzeta(const Flags& f, Report& rep)
{
    const double tol = tolerance(f, 1e-12);
    const std::string fn = f.fn.empty() ? "im" : f.fn;
    if (f.s.empty()) {
        throw DomainError("--s is required");
    }
    const Complex s = parse_complex(f.s, "--s");
    const QParam q = require_q(f);
    std::vector<std::pair<std::string, std::string>> params{{"s", detail::format_s(s)}, {"q", q.to_string()}};
    if (f.genocchi) {
        params.emplace_back("scale", "[2]");
    }
    const std::string route = q.is_limit() ? "classical" : "q-series";
    if (fn == "im") {
        rep.items.push_back(value_item(fn, params, route, im_q(s, q, tol, f.genocchi)));
    } else if (fn == "im-hurwitz") {
        if (!f.x) {
            throw DomainError("--x is required");
        }
        if (f.hurwitz != "additive" && f.hurwitz != "bracket") {
            throw DomainError("--hurwitz must be additive or bracket");
        }
        const auto variant = f.hurwitz == "additive" ? HurwitzVariant::Additive : HurwitzVariant::Bracket;
        params.emplace_back("x", detail::format_double(*f.x));
        params.emplace_back("variant", f.hurwitz);
        rep.items.push_back(value_item(fn, params, route, im_q_hurwitz(s, *f.x, q, tol, variant, f.genocchi)));
    } else if (fn == "l" || fn == "big-l") {
        if (f.chi.empty()) {
            throw DomainError("--chi is required");
        }
        const auto chi = parse_character(f.chi);
        params.emplace_back("chi", f.chi);
        if (fn == "l") {
            if (f.x) {
                params.emplace_back("x", detail::format_double(*f.x));
            }
            rep.items.push_back(value_item(fn, params, route, l_q(s, chi, q, tol, f.genocchi, f.x)));
        } else {
            rep.items.push_back(value_item(fn, params, route, big_l_q(s, chi, q, tol)));
        }
    } else if (fn == "zeta-q") {
        rep.items.push_back(value_item(fn, params, route, zeta_q(s, q, tol)));
    } else if (fn == "cck") {
        rep.items.push_back(value_item(fn, params, route, cck_zeta(s, q, tol)));
    } else {
        throw DomainError("--fn must be im, im-hurwitz, l, big-l, zeta-q or cck");
    }
}

inline void cmd_qsum(const Flags& f, Report& rep)
{
    const double tol = tolerance(f, 1e-8);
    const auto v = parse_variant(f.variant.empty() ? "S" : f.variant);
    const auto h = require(f.h, "--h");
    const auto k = require(f.k, "--k");
    const QParam q = require_q(f);
    const auto reg = parse_schedule(f);
    if (f.route != "n-first" && f.route != "m-first") {
        throw DomainError("--route must be n-first or m-first");
    }
    const auto route = f.route == "n-first" ? YRoute::NFirst : YRoute::MFirst;
    std::optional<DirichletCharacter> chi;
    if (!f.chi.empty()) {
        chi = parse_character(f.chi);
    }
    std::vector<std::pair<std::string, std::string>> params{
        {"variant", std::string(to_string(v))}, {"h", std::to_string(h)}, {"k", std::to_string(k)}, {"q", q.to_string()}};
    if (chi) {
        params.emplace_back("chi", f.chi);
    }
    QSumResult r;
    if (v == SumVariant::dedekind) {
        if (chi) {
            throw DomainError("the Dedekind-type q-sum takes no character");
        }
        params.emplace_back("p", std::to_string(f.p));
        r = q_dedekind_sum(f.p, h, k, q, reg, tol, route);
    } else {
        r = q_hardy_berndt(v, h, k, q, reg, tol, chi, f.warn_parity, route);
    }
    ReportItem item;
    item.name = f.raw ? "Y" : "qsum";
    item.params = params;
    item.route = std::string(route == YRoute::NFirst ? "n-first" : "m-first") + "+richardson";
    item.value = f.raw ? r.y.value : r.value;
    item.certificate_kind = "residual";
    item.certificate = f.raw ? r.y.residual : r.y.residual * std::abs(r.scale);
    item.terms_used = r.y.terms_used;
    for (std::size_t i = 0; i < r.y.offsets.size(); ++i) {
        item.extras.emplace_back("eps=" + detail::format_double(r.y.offsets[i]),
                                 f.raw ? r.y.per_offset[i] : r.scale * r.y.per_offset[i]);
    }
    if (r.y.abel_limit) {
        item.extras.emplace_back("exact_abel_limit", f.raw ? *r.y.abel_limit : *r.abel_value);
    }
    if (r.y.divergent) {
        item.notes.emplace_back("per-offset values do not stabilize: residual exceeds 1e3 * tol");
    }
    if (!r.parity.holds) {
        item.notes.push_back("parity hypothesis (" + r.parity.description + ") does not hold");
    }
    rep.items.push_back(std::move(item));
}

inline bool cmd_verify(const Flags& f, Report& rep)
{
    SuiteOptions o;
    if (!f.s.empty()) {
        o.s = parse_complex(f.s, "--s");
    }
    if (!f.q.empty()) {
        o.q = require_q(f);
    }
    if (!f.chi.empty()) {
        o.chi = parse_character(f.chi);
    }
    o.x = f.x;
    o.tol = f.tol;
    if (!f.variant.empty()) {
        o.variant = parse_variant(f.variant);
    }
    o.h = f.h;
    o.k = f.k;
    if (!f.eps.empty()) {
        o.reg = parse_schedule(f);
    }
    rep.items = run_suite(f.target, o);
    return rep.pass();
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"finite sums, q-zeta functions and identity checks", "hbq"};
    // -h stays free for --h; subcommands inherit this
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);
    Flags f;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", f.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", f.out, "write the report to FILE");
        sub->add_option("--tol", f.tol, "absolute tolerance");
    };
    auto hk = [&](CLI::App* sub) {
        sub->add_option("--h", f.h);
        sub->add_option("--k", f.k);
        sub->add_option("--variant", f.variant, "S, s1..s5 or dedekind");
    };

    auto* finite = app.add_subcommand("finite", "exact Dedekind and Hardy-Berndt sums");
    hk(finite);
    common(finite);

    auto* numbers = app.add_subcommand("numbers", "Bernoulli, Euler, Genocchi numbers and q-variants");
    numbers->add_option("--kind", f.kind, "bernoulli, euler, genocchi, q-euler, q-genocchi");
    numbers->add_option("--n", f.n, "largest index");
    numbers->add_option("--q", f.q);
    common(numbers);

    auto* characters = app.add_subcommand("characters", "Dirichlet characters mod f");
    characters->add_option("--f", f.f, "modulus")->check(CLI::Range(1, 100000));
    characters->add_option("--n", f.at, "evaluate at n");
    common(characters);

    auto* zeta = app.add_subcommand("zeta", "classical zeta family");
    zeta->add_option("--fn", f.fn, "riemann, eta, genocchi, zeta-star, hurwitz, lerch, digamma, alt-character");
    zeta->add_option("--s", f.s, "re[,im]");
    zeta->add_option("--x", f.x, "Hurwitz/Lerch shift a, or the digamma argument");
    zeta->add_option("--z", f.z, "Lerch base re[,im]");
    zeta->add_option("--chi", f.chi, "f:index");
    zeta->add_option("--terms-max", f.terms_max);
    common(zeta);

    auto* qzeta = app.add_subcommand("qzeta", "q-Genocchi zeta and l-functions");
    qzeta->add_option("--fn", f.fn, "im, im-hurwitz, l, big-l, zeta-q, cck");
    qzeta->add_option("--s", f.s, "re[,im]");
    qzeta->add_option("--q", f.q, "p/r, 1, or re,im");
    qzeta->add_option("--x", f.x);
    qzeta->add_option("--chi", f.chi, "f:index");
    qzeta->add_option("--hurwitz", f.hurwitz, "additive or bracket");
    qzeta->add_flag("--genocchi", f.genocchi, "multiply by [2] = 1+q");
    common(qzeta);

    auto* qsum = app.add_subcommand("qsum", "damped q-Hardy-Berndt and q-Dedekind sums");
    hk(qsum);
    qsum->add_option("--q", f.q, "p/r or 1");
    qsum->add_option("--chi", f.chi, "f:index");
    qsum->add_option("--p", f.p, "odd weight exponent for the Dedekind type");
    qsum->add_option("--eps", f.eps, "decreasing damping offsets e1,e2,...");
    qsum->add_option("--order", f.order, "extrapolation order");
    qsum->add_option("--route", f.route, "n-first or m-first");
    qsum->add_option("--terms-max", f.terms_max, "m cut-off for the m-first route");
    qsum->add_flag("--warn-parity", f.warn_parity, "report instead of reject a failing parity hypothesis");
    qsum->add_flag("--raw", f.raw, "print the unscaled Y-sum");
    common(qsum);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("target", f.target, "thm4, thm5, thm6, mellin-defs, thm19..thm23, all, qlimit")
        ->required()
        ->check(CLI::IsMember(suite_targets()));
    hk(verify);
    verify->add_option("--s", f.s, "re[,im]");
    verify->add_option("--q", f.q);
    verify->add_option("--chi", f.chi, "f:index");
    verify->add_option("--x", f.x);
    verify->add_option("--eps", f.eps);
    verify->add_option("--order", f.order);
    common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << tool_version << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    Report rep;
    for (int i = 1; i < argc; ++i) {
        rep.command += (i > 1 ? " " : "") + std::string(argv[i]);
    }
    bool ok = true;
    try {
        if (finite->parsed()) {
            cmd_finite(f, rep);
        } else if (numbers->parsed()) {
            cmd_numbers(f, rep);
        } else if (characters->parsed()) {
            cmd_characters(f, rep);
        } else if (zeta->parsed()) {
            cmd_zeta(f, rep);
        } else if (qzeta->parsed()) {
            cmd_qzeta(f, rep);
        } else if (qsum->parsed()) {
            cmd_qsum(f, rep);
        } else if (verify->parsed()) {
            ok = cmd_verify(f, rep);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    rep.finalize();

    const std::string text = f.format == "json" ? to_json_string(rep) : f.format == "csv" ? to_csv(rep) : to_text(rep);
    if (f.out.empty()) {
        out << text;
    } else {
        std::ofstream file(f.out, std::ios::binary);
        if (!file) {
            err << "error: --out: cannot open '" << f.out << "'\n";
            return 2;
        }
        file << text;
        out << (ok ? "pass" : "FAIL") << ": " << rep.items.size() << " item(s) written to " << f.out << '\n';
    }
    return ok ? 0 : 1;
}

}  // namespace hbq::cli
