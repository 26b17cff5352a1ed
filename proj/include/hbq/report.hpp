#pragma once

// Machine-readable reports: computed values and verification outcomes, each
// tagged with the route that produced it and an error certificate.

#include "hbq/exact.hpp"
#include "hbq/outcome.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hbq {

inline constexpr const char* tool_version = "1.0.0";

enum class ItemKind { Value, Check };

struct ReportItem {
    ItemKind kind = ItemKind::Value;
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    std::string route;
    Complex value{};
    std::optional<std::string> exact;  // rational result, when available
    std::string certificate_kind = "tail_bound";  // tail_bound | residual | exact
    double certificate = 0.0;
    std::int64_t terms_used = 0;
    // checks only
    Complex lhs{};
    Complex rhs{};
    double abs_diff = 0.0;
    double tolerance = 0.0;
    bool pass = true;
    std::vector<std::pair<std::string, Complex>> extras;
    std::vector<std::string> notes;

    [[nodiscard]] std::string sort_key() const
    {
        auto sorted = params;
        std::sort(sorted.begin(), sorted.end());
        std::string key = name;
        for (const auto& [k, v] : sorted) {
            key += '\x1f' + k + '=' + v;
        }
        return key;
    }

    static ReportItem from_outcome(const VerificationOutcome& o, std::string route, std::string certificate_kind,
                                   double certificate)
    {
        ReportItem item;
        item.kind = ItemKind::Check;
        item.name = o.name;
        item.params = o.params;
        item.route = std::move(route);
        item.value = o.lhs;
        item.lhs = o.lhs;
        item.rhs = o.rhs;
        item.abs_diff = o.abs_diff;
        item.tolerance = o.tolerance;
        item.pass = o.pass;
        item.certificate_kind = std::move(certificate_kind);
        item.certificate = certificate;
        item.extras = o.extras;
        item.notes = o.notes;
        return item;
    }
};

inline bool operator==(const ReportItem& a, const ReportItem& b)
{
    auto same = [](double x, double y) { return x == y || (std::isnan(x) && std::isnan(y)); };
    auto same_c = [&](Complex x, Complex y) { return same(x.real(), y.real()) && same(x.imag(), y.imag()); };
    if (a.extras.size() != b.extras.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.extras.size(); ++i) {
        if (a.extras[i].first != b.extras[i].first || !same_c(a.extras[i].second, b.extras[i].second)) {
            return false;
        }
    }
    return a.kind == b.kind && a.name == b.name && a.params == b.params && a.route == b.route &&
           same_c(a.value, b.value) && a.exact == b.exact && a.certificate_kind == b.certificate_kind &&
           same(a.certificate, b.certificate) && a.terms_used == b.terms_used && same_c(a.lhs, b.lhs) &&
           same_c(a.rhs, b.rhs) && same(a.abs_diff, b.abs_diff) && same(a.tolerance, b.tolerance) &&
           a.pass == b.pass && a.notes == b.notes;
}

struct Report {
    std::string version = tool_version;
    std::string command;
    std::vector<ReportItem> items;

    [[nodiscard]] bool pass() const
    {
        return std::all_of(items.begin(), items.end(), [](const auto& i) { return i.pass; });
    }

    /// Stable order by name, then by the sorted parameter list.
    void finalize()
    {
        std::stable_sort(items.begin(), items.end(),
                         [](const auto& a, const auto& b) { return a.sort_key() < b.sort_key(); });
    }

    bool operator==(const Report&) const = default;
};

namespace detail {

// JSON has no inf/nan; those travel as strings.
inline nlohmann::json number_json(double x)
{
    if (std::isfinite(x)) {
        return x;
    }
    if (std::isnan(x)) {
        return "nan";
    }
    return x > 0 ? "inf" : "-inf";
}

inline double number_from_json(const nlohmann::json& j)
{
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "nan") {
            return std::numeric_limits<double>::quiet_NaN();
        }
        return s == "inf" ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
    }
    return j.get<double>();
}

inline nlohmann::json complex_json(Complex z) { return {{"re", number_json(z.real())}, {"im", number_json(z.imag())}}; }

inline Complex complex_from_json(const nlohmann::json& j)
{
    return {number_from_json(j.at("re")), number_from_json(j.at("im"))};
}

inline std::string format_double(double x)
{
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string format_complex(Complex z)
{
    if (z.imag() == 0.0) {
        return format_double(z.real());
    }
    return format_double(z.real()) + (std::signbit(z.imag()) ? "" : "+") + format_double(z.imag()) + "i";
}

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

inline std::string joined_params(const std::vector<std::pair<std::string, std::string>>& params)
{
    std::string out;
    for (const auto& [k, v] : params) {
        out += (out.empty() ? "" : ";") + k + "=" + v;
    }
    return out;
}

}  // namespace detail

inline nlohmann::json to_json(const ReportItem& item)
{
    using detail::complex_json;
    using detail::number_json;
    nlohmann::json params = nlohmann::json::array();
    for (const auto& [k, v] : item.params) {
        params.push_back({k, v});
    }
    nlohmann::json j = {{"kind", item.kind == ItemKind::Check ? "check" : "value"},
                        {"name", item.name},
                        {"params", params},
                        {"route", item.route},
                        {"value", complex_json(item.value)},
                        {"certificate", {{"kind", item.certificate_kind}, {"bound", number_json(item.certificate)}}},
                        {"terms_used", item.terms_used},
                        {"pass", item.pass}};
    if (item.exact) {
        j["exact"] = *item.exact;
    }
    if (item.kind == ItemKind::Check) {
        j["lhs"] = complex_json(item.lhs);
        j["rhs"] = complex_json(item.rhs);
        j["abs_diff"] = number_json(item.abs_diff);
        j["tolerance"] = number_json(item.tolerance);
    }
    nlohmann::json extras = nlohmann::json::array();
    for (const auto& [k, v] : item.extras) {
        extras.push_back({{"name", k}, {"value", complex_json(v)}});
    }
    j["extras"] = extras;
    j["notes"] = item.notes;
    return j;
}

inline ReportItem item_from_json(const nlohmann::json& j)
{
    using detail::complex_from_json;
    using detail::number_from_json;
    ReportItem item;
    item.kind = j.at("kind").get<std::string>() == "check" ? ItemKind::Check : ItemKind::Value;
    item.name = j.at("name").get<std::string>();
    for (const auto& p : j.at("params")) {
        item.params.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    }
    item.route = j.at("route").get<std::string>();
    item.value = complex_from_json(j.at("value"));
    if (j.contains("exact")) {
        item.exact = j.at("exact").get<std::string>();
    }
    item.certificate_kind = j.at("certificate").at("kind").get<std::string>();
    item.certificate = number_from_json(j.at("certificate").at("bound"));
    item.terms_used = j.at("terms_used").get<std::int64_t>();
    item.pass = j.at("pass").get<bool>();
    if (item.kind == ItemKind::Check) {
        item.lhs = complex_from_json(j.at("lhs"));
        item.rhs = complex_from_json(j.at("rhs"));
        item.abs_diff = number_from_json(j.at("abs_diff"));
        item.tolerance = number_from_json(j.at("tolerance"));
    }
    for (const auto& e : j.at("extras")) {
        item.extras.emplace_back(e.at("name").get<std::string>(), complex_from_json(e.at("value")));
    }
    item.notes = j.at("notes").get<std::vector<std::string>>();
    return item;
}

inline nlohmann::json to_json(const Report& r)
{
    nlohmann::json items = nlohmann::json::array();
    for (const auto& item : r.items) {
        items.push_back(to_json(item));
    }
    return {{"version", r.version}, {"command", r.command}, {"pass", r.pass()}, {"items", items}};
}

inline Report report_from_json(const nlohmann::json& j)
{
    Report r;
    r.version = j.at("version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    for (const auto& item : j.at("items")) {
        r.items.push_back(item_from_json(item));
    }
    return r;
}

inline std::string to_json_string(const Report& r) { return to_json(r).dump(2) + "\n"; }

inline std::string to_csv(const Report& r)
{
    using namespace detail;
    std::ostringstream out;
    out << "kind,name,params,route,value_re,value_im,exact,certificate_kind,certificate,terms_used,lhs_re,lhs_im,"
           "rhs_re,rhs_im,abs_diff,tolerance,pass\n";
    for (const auto& i : r.items) {
        const bool check = i.kind == ItemKind::Check;
        out << (check ? "check" : "value") << ',' << csv_field(i.name) << ',' << csv_field(joined_params(i.params))
            << ',' << csv_field(i.route) << ',' << format_double(i.value.real()) << ','
            << format_double(i.value.imag()) << ',' << csv_field(i.exact.value_or("")) << ',' << i.certificate_kind
            << ',' << format_double(i.certificate) << ',' << i.terms_used << ',';
        if (check) {
            out << format_double(i.lhs.real()) << ',' << format_double(i.lhs.imag()) << ','
                << format_double(i.rhs.real()) << ',' << format_double(i.rhs.imag()) << ','
                << format_double(i.abs_diff) << ',' << format_double(i.tolerance) << ',';
        } else {
            out << ",,,,,,";
        }
        out << (i.pass ? "true" : "false") << '\n';
    }
    return out.str();
}

inline std::string to_text(const Report& r)
{
    using namespace detail;
    std::ostringstream out;
    for (const auto& i : r.items) {
        const std::string params = joined_params(i.params);
        if (i.kind == ItemKind::Check) {
            out << (i.pass ? "PASS " : "FAIL ") << i.name << (params.empty() ? "" : " [" + params + "]")
                << "  lhs=" << format_complex(i.lhs) << "  rhs=" << format_complex(i.rhs)
                << "  |diff|=" << format_double(i.abs_diff) << "  tol=" << format_double(i.tolerance) << '\n';
        } else {
            out << i.name << (params.empty() ? "" : " [" + params + "]") << " = "
                << (i.exact ? *i.exact : format_complex(i.value));
            if (i.certificate_kind != "exact") {
                out << "  (" << i.route << ", " << i.certificate_kind << " " << format_double(i.certificate) << ")";
            }
            out << '\n';
        }
        for (const auto& [k, v] : i.extras) {
            out << "    " << k << " = " << format_complex(v) << '\n';
        }
        for (const auto& n : i.notes) {
            out << "    note: " << n << '\n';
        }
    }
    if (std::any_of(r.items.begin(), r.items.end(), [](const auto& i) { return i.kind == ItemKind::Check; })) {
        const auto failed = std::count_if(r.items.begin(), r.items.end(), [](const auto& i) { return !i.pass; });
        out << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << '\n';
    }
    return out.str();
}

}  // namespace hbq
