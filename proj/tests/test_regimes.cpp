#include "bgap/error.hpp"
#include "bgap/regimes.hpp"

#include <doctest.h>

#include <algorithm>
#include <fstream>

using namespace bgap;

namespace {

std::vector<ElasticityEstimate> fake_estimates(const RegimeTable& t)
{
    std::vector<ElasticityEstimate> out;
    double eps = 0.8;
    for (const auto& r : t.regimes()) {
        out.push_back({r.label, eps, -3.0 - eps, 0.05, 0.95, 10});
        eps += 0.05;
    }
    return out;
}

std::vector<Quarter> range(Quarter a, Quarter b)
{
    std::vector<Quarter> out;
    for (; a <= b; a = a.next())
        out.push_back(a);
    return out;
}

} // namespace

TEST_CASE("default table holds the seven subperiods")
{
    const auto t = RegimeTable::us_default();
    REQUIRE(t.size() == 7);
    const char* expected[][2] = {{"1951Q1", "1959Q2"}, {"1959Q4", "1971Q1"}, {"1971Q3", "1975Q1"},
                                 {"1975Q3", "1987Q3"}, {"1990Q1", "1999Q1"}, {"2001Q1", "2009Q3"},
                                 {"2010Q1", "2019Q4"}};
    for (std::size_t i = 0; i < 7; ++i) {
        CHECK(t.regimes()[i].start == Quarter::parse(expected[i][0]));
        CHECK(t.regimes()[i].end == Quarter::parse(expected[i][1]));
        if (i > 0)
            CHECK(t.regimes()[i - 1].end < t.regimes()[i].start);
    }
}

TEST_CASE("assign_regime")
{
    const auto t = RegimeTable::us_default();
    const auto r = assign_regime({2015, 2}, t);
    REQUIRE(r);
    CHECK(r->start == Quarter{2010, 1});
    CHECK_FALSE(assign_regime({1959, 3}, t));
    CHECK_FALSE(assign_regime({1950, 4}, t));
    CHECK(assign_regime({1951, 1}, t));
    CHECK(assign_regime({2019, 4}, t));
}

TEST_CASE("regime file parsing")
{
    const auto t = RegimeTable::parse("# label,start,end\nlate,2010Q1,2019Q4\n\nearly,1951Q1,1959Q2\n");
    REQUIRE(t.size() == 2);
    CHECK(t.regimes()[0].label == "early");

    try {
        RegimeTable::parse("a,1951Q1,1959Q2\nb,1960Q1,19x\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(RegimeTable::parse("a,1951Q1,1959Q2\nb,1959Q2,1960Q1\n"), ConfigError);
    CHECK_THROWS_AS(RegimeTable::parse("a,1959Q2,1951Q1\n"), ConfigError);
    CHECK_THROWS_AS(RegimeTable::parse("a,1951Q1,1952Q1\na,1960Q1,1961Q1\n"), ConfigError);
}

TEST_CASE("bundled regime file matches the built-in table")
{
    std::ifstream in(BGAP_DATA_DIR "/regimes.txt");
    REQUIRE(in);
    const auto t = RegimeTable::parse(in);
    const auto d = RegimeTable::us_default();
    REQUIRE(t.size() == d.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        CHECK(t.regimes()[i] == d.regimes()[i]);
}

TEST_CASE("build_schedule")
{
    const auto t = RegimeTable::us_default();
    const auto est = fake_estimates(t);
    const auto quarters = range({1951, 1}, {2019, 4});
    const auto s = build_schedule(t, est, quarters);
    REQUIRE(s.size() == quarters.size());

    const auto* gap = s.find({1959, 3});
    REQUIRE(gap);
    CHECK(gap->is_gap_quarter);
    CHECK(gap->epsilon == est[0].epsilon);

    const auto* inside = s.find({2010, 1});
    REQUIRE(inside);
    CHECK_FALSE(inside->is_gap_quarter);
    CHECK(inside->epsilon == est[6].epsilon);

    SUBCASE("in-regime quarters carry their regime's estimate exactly")
    {
        for (const auto& e : s.entries()) {
            if (const auto r = assign_regime(e.quarter, t)) {
                const auto it = std::ranges::find(est, r->label, &ElasticityEstimate::regime);
                CHECK(e.epsilon == it->epsilon);
                CHECK(e.log_v0 == it->log_v0);
                CHECK_FALSE(e.is_gap_quarter);
            }
        }
    }
    SUBCASE("gap quarters copy the last in-regime quarter")
    {
        const ScheduleEntry* last = nullptr;
        for (const auto& e : s.entries()) {
            if (e.is_gap_quarter) {
                REQUIRE(last);
                CHECK(e.epsilon == last->epsilon);
                CHECK(e.regime == last->regime);
            } else {
                last = &e;
            }
        }
    }
    SUBCASE("missing estimate")
    {
        auto partial = est;
        partial.pop_back();
        CHECK_THROWS_AS(build_schedule(t, partial, quarters), ConfigError);
    }
}

TEST_CASE("edges of the table")
{
    const auto t = RegimeTable::us_default();
    const auto est = fake_estimates(t);
    const std::vector<Quarter> q{{1950, 4}, {1951, 1}, {2020, 1}};
    const auto s = build_schedule(t, est, q);
    CHECK(s[0].is_gap_quarter);
    CHECK(s[0].epsilon == est.front().epsilon);
    CHECK_FALSE(s[1].is_gap_quarter);
    CHECK(s[2].is_gap_quarter);
    CHECK(s[2].epsilon == est.back().epsilon);
}

TEST_CASE("single-regime panel gives a constant schedule")
{
    const auto t = RegimeTable::us_default();
    const auto est = fake_estimates(t);
    const auto q = range({1991, 1}, {1998, 4});
    const auto s = build_schedule(t, est, q);
    for (const auto& e : s.entries())
        CHECK(e.epsilon == s[0].epsilon);

    const auto c = ElasticitySchedule::constant(q, est[2]);
    CHECK(c.size() == q.size());
    CHECK(c.find({1995, 2})->epsilon == est[2].epsilon);
    CHECK(c.find({2005, 2}) == nullptr);
}
