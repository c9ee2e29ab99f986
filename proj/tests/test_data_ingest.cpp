#include "bgap/data_ingest.hpp"
#include "bgap/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

using namespace bgap;

namespace {

std::vector<MonthlyPoint> monthly(int year, std::initializer_list<double> values, int first_month = 1)
{
    std::vector<MonthlyPoint> out;
    int m = first_month;
    for (double v : values)
        out.push_back({year, m++, v});
    return out;
}

std::vector<QuarterlyPoint> quarterly(Quarter first, std::initializer_list<double> values)
{
    std::vector<QuarterlyPoint> out;
    for (double v : values) {
        out.push_back({first, v});
        first = first.next();
    }
    return out;
}

} // namespace

TEST_CASE("quarter keys")
{
    CHECK(Quarter::parse("2001Q1") == Quarter{2001, 1});
    CHECK(Quarter{2000, 4}.next() == Quarter{2001, 1});
    CHECK(Quarter{2001, 1}.prev() == Quarter{2000, 4});
    CHECK(Quarter{1951, 1}.distance_to({2019, 4}) == 275);
    CHECK(Quarter::of_month(1990, 3) == Quarter{1990, 1});
    CHECK(Quarter::of_month(1990, 10) == Quarter{1990, 4});
    CHECK(Quarter{1959, 3}.str() == "1959Q3");
    CHECK_FALSE(Quarter::try_parse("1959Q5"));
    CHECK_FALSE(Quarter::try_parse("1959-03"));
    CHECK_THROWS_AS(Quarter::parse("junk"), ConfigError);
}

TEST_CASE("parse_series_csv converts percent and sorts")
{
    const auto pts = parse_series_csv("date,value\n1951-03,3.4\n1951-01,3.7\n1951-02,3.5\n", ValueUnit::percent);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].year == 1951);
    CHECK(pts[0].month == 1);
    CHECK(pts[0].value == doctest::Approx(0.037).epsilon(1e-15));
    CHECK(pts[1].month == 2);
    CHECK(pts[2].month == 3);
    CHECK(pts[2].value == doctest::Approx(0.034).epsilon(1e-15));
}

TEST_CASE("parse_series_csv errors")
{
    CHECK_THROWS_AS(parse_series_csv("date,value\n1951-01,3.7\n1951-01,3.8\n", ValueUnit::percent), DuplicateError);
    CHECK_THROWS_AS(parse_series_csv("date,value\n1951-01,-0.1\n", ValueUnit::fraction), DomainError);
    try {
        parse_series_csv("date,value\n1951-01,3.7\n\n1951-02,abc\n", ValueUnit::percent);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
    CHECK_THROWS_AS(parse_series_csv("when,value\n", ValueUnit::percent), ParseError);
    CHECK_THROWS_AS(parse_series_csv("date,value\n1951-13,3\n", ValueUnit::percent), ParseError);
}

TEST_CASE("percent and fraction inputs agree")
{
    const auto pct = parse_series_csv("date,value\n1990-01,5.4\n1990-02,5.3\n", ValueUnit::percent);
    const auto frac = parse_series_csv("date,value\n1990-01,0.054\n1990-02,0.053\n", ValueUnit::fraction);
    REQUIRE(pct.size() == frac.size());
    for (std::size_t i = 0; i < pct.size(); ++i)
        CHECK(pct[i].value == doctest::Approx(frac[i].value).epsilon(1e-15));
}

TEST_CASE("to_quarterly averages complete quarters")
{
    const auto q = to_quarterly(monthly(1990, {0.04, 0.05, 0.06}));
    REQUIRE(q.points.size() == 1);
    CHECK(q.points[0].quarter == Quarter{1990, 1});
    CHECK(q.points[0].value == doctest::Approx(0.05).epsilon(1e-15));
    CHECK(q.dropped.empty());

    const auto partial = to_quarterly(monthly(1990, {0.04, 0.05}));
    CHECK(partial.points.empty());
    REQUIRE(partial.dropped.size() == 1);
    CHECK(partial.dropped[0] == Quarter{1990, 1});
}

TEST_CASE("to_quarterly on a year of data")
{
    // Means computed by hand: (1+2+3)/3, (4+5+6)/3, ...
    const auto q = to_quarterly(monthly(2000, {0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08, 0.09, 0.10, 0.11, 0.12}));
    REQUIRE(q.points.size() == 4);
    const double expected[] = {0.02, 0.05, 0.08, 0.11};
    for (int i = 0; i < 4; ++i)
        CHECK(q.points[i].value == doctest::Approx(expected[i]).epsilon(1e-14));
}

TEST_CASE("to_quarterly of a constant series is the constant")
{
    std::vector<MonthlyPoint> pts;
    for (int y = 1990; y < 1993; ++y)
        for (int m = 1; m <= 12; ++m)
            pts.push_back({y, m, 0.0375});
    pts.push_back({1993, 1, 0.0375});
    const auto q = to_quarterly(pts);
    CHECK(q.points.size() == 12);
    for (const auto& p : q.points)
        CHECK(p.value == 0.0375);
    CHECK(q.dropped.size() == 1);
}

TEST_CASE("splice_vacancy")
{
    const auto pre = quarterly({2000, 1}, {0.040, 0.041, 0.042, 0.043});
    const auto post = quarterly({2001, 1}, {0.035, 0.034});

    SUBCASE("switches source at the cutover")
    {
        const auto s = splice_vacancy(pre, post, {2001, 1});
        REQUIRE(s.size() == 6);
        CHECK(s[3].value == 0.043);
        CHECK(s[4].quarter == Quarter{2001, 1});
        CHECK(s[4].value == 0.035);
    }
    SUBCASE("post wins when both cover the cutover")
    {
        auto longer = pre;
        longer.push_back({{2001, 1}, 0.099});
        const auto s = splice_vacancy(longer, post, {2001, 1});
        REQUIRE(s.size() == 6);
        CHECK(s[4].value == 0.035);
    }
    SUBCASE("piecewise identity")
    {
        const auto s = splice_vacancy(pre, post, {2001, 1});
        for (const auto& p : s) {
            const auto& src = p.quarter < Quarter{2001, 1} ? pre : post;
            const auto it = std::ranges::find(src, p.quarter, &QuarterlyPoint::quarter);
            REQUIRE(it != src.end());
            CHECK(it->value == p.value);
        }
    }
    SUBCASE("missing quarter before the cutover")
    {
        const auto short_pre = quarterly({2000, 1}, {0.040, 0.041, 0.042});
        CHECK_THROWS_AS(splice_vacancy(short_pre, post, {2001, 1}), CoverageError);
    }
}

TEST_CASE("build_panel")
{
    SUBCASE("single row arithmetic")
    {
        const auto p = build_panel(quarterly({1990, 1}, {0.05}), quarterly({1990, 1}, {0.03}));
        REQUIRE(p.size() == 1);
        CHECK(p[0].theta == doctest::Approx(0.6).epsilon(1e-15));
        CHECK(p[0].n == doctest::Approx(0.95).epsilon(1e-15));
    }
    SUBCASE("1997 averages")
    {
        const auto p = build_panel(quarterly({1997, 1}, {0.049}), quarterly({1997, 1}, {0.033}));
        CHECK(p[0].theta == doctest::Approx(0.673469).epsilon(1e-6));
    }
    SUBCASE("inner join and identities")
    {
        const auto p = build_panel(quarterly({1990, 1}, {0.05, 0.06, 0.07, 0.08}),
                                   quarterly({1990, 3}, {0.03, 0.02, 0.01}));
        REQUIRE(p.size() == 2);
        CHECK(p[0].quarter == Quarter{1990, 3});
        for (const auto& r : p.rows()) {
            CHECK(std::abs(r.theta * r.u - r.v) < 1e-12);
            CHECK(std::abs(r.n + r.u - 1.0) < 1e-15);
        }
    }
    SUBCASE("errors")
    {
        CHECK_THROWS_AS(build_panel(quarterly({1990, 1}, {0.05}), quarterly({1991, 1}, {0.03})), AlignmentError);
        try {
            build_panel(quarterly({1990, 1}, {0.05, 0.0}), quarterly({1990, 1}, {0.03, 0.03}));
            FAIL("expected a domain error");
        } catch (const DomainError& e) {
            CHECK(std::string(e.what()).find("1990Q2") != std::string::npos);
        }
    }
}

TEST_CASE("panel slicing and export")
{
    const auto p = build_panel(quarterly({1990, 1}, {0.05, 0.06, 0.07}), quarterly({1990, 1}, {0.03, 0.02, 0.01}));
    CHECK(p.slice({1990, 2}, {1990, 3}).size() == 2);
    CHECK(p.slice({1991, 1}, {1991, 4}).empty());
    std::ostringstream os;
    write_panel_csv(os, p);
    const auto s = os.str();
    CHECK(s.rfind("quarter,u,v,theta,n\n1990Q1,0.05,0.03,0.6,0.95\n", 0) == 0);
}
