#include "hbq/report.hpp"

#include <gtest/gtest.h>

#include <limits>

using namespace hbq;

namespace {

Report sample()
{
    Report r;
    r.command = "verify thm5";
    ReportItem v;
    v.name = "S";
    v.params = {{"k", "2"}, {"h", "1"}};
    v.route = "exact";
    v.value = 1.0;
    v.exact = "1";
    v.certificate_kind = "exact";
    r.items.push_back(v);
    VerificationOutcome o;
    o.name = "thm5";
    o.lhs = Complex(0.1, -1.0 / 3.0);
    o.rhs = Complex(0.1, -1.0 / 3.0 + 1e-17);
    o.tolerance = 1e-10;
    o.params = {{"s", "2"}, {"chi", "3:[1]"}};
    o.extras = {{"ratio", Complex(std::numeric_limits<double>::infinity(), 0.0)}};
    o.notes = {"a, \"quoted\" note"};
    o.settle();
    r.items.push_back(ReportItem::from_outcome(o, "q-series", "tail_bound", 3e-13));
    r.finalize();
    return r;
}

}  // namespace

TEST(Report, JsonRoundTripIsLossless)
{
    const Report r = sample();
    const auto text = to_json_string(r);
    const Report back = report_from_json(nlohmann::json::parse(text));
    EXPECT_EQ(back, r);
    EXPECT_EQ(to_json_string(back), text);
}

TEST(Report, DeterministicOrdering)
{
    Report a = sample();
    Report b = sample();
    std::reverse(b.items.begin(), b.items.end());
    b.finalize();
    EXPECT_EQ(to_json_string(a), to_json_string(b));
    EXPECT_EQ(a.items.front().name, "S");
}

TEST(Report, PassFlag)
{
    Report r = sample();
    EXPECT_TRUE(r.pass());
    r.items.back().pass = false;
    EXPECT_FALSE(r.pass());
    EXPECT_NE(to_json_string(r).find("\"pass\": false"), std::string::npos);
}

TEST(Report, CsvHasHeaderAndQuotes)
{
    const auto csv = to_csv(sample());
    EXPECT_EQ(csv.rfind("kind,name,params,route", 0), 0U);
    EXPECT_NE(csv.find(",s=2;chi=3:[1],"), std::string::npos);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}

TEST(Report, TextCarriesCertificates)
{
    const auto text = to_text(sample());
    EXPECT_NE(text.find("PASS thm5"), std::string::npos);
    EXPECT_NE(text.find("all checks passed"), std::string::npos);
    EXPECT_NE(text.find("ratio = inf"), std::string::npos);
}

TEST(Report, SeventeenDigits)
{
    EXPECT_EQ(detail::format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(detail::format_complex(Complex(1.0, -2.0)), "1-2i");
}
