// The OpenMP kernels must agree bit for bit with their serial references.
#include "bgap/gap_engine.hpp"
#include "bgap/planner.hpp"

#include <doctest.h>

#include <omp.h>

#include <cmath>
#include <random>

using namespace bgap;

namespace {

struct Fixture {
    LaborMarketPanel panel;
    ElasticitySchedule schedule;
};

Fixture random_fixture(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ud(0.02, 0.11), vd(0.01, 0.06), ed(0.6, 1.4);
    std::vector<Quarter> q;
    std::vector<double> u, v;
    Quarter k{1900, 1};
    for (int i = 0; i < n; ++i, k = k.next()) {
        q.push_back(k);
        u.push_back(ud(rng));
        v.push_back(vd(rng));
    }
    std::vector<ScheduleEntry> entries;
    for (int i = 0; i < n; ++i)
        entries.push_back({q[i], ed(rng), -3.0, "r" + std::to_string(i / 40), i % 40 == 39});
    return {LaborMarketPanel::from_rates(q, u, v), ElasticitySchedule(std::move(entries))};
}

} // namespace

TEST_CASE("gap_series parallel equals serial")
{
    const auto f = random_fixture(997, 3);
    const GapOptions o{0.72, 0.25, 0.01, {{"r3", 0.9}}};
    for (int threads : {1, 2, 4}) {
        omp_set_num_threads(threads);
        const auto par = gap_series(f.panel, f.schedule, o);
        const auto ser = serial::gap_series(f.panel, f.schedule, o);
        REQUIRE(par.size() == ser.size());
        for (std::size_t i = 0; i < par.size(); ++i) {
            CHECK(par[i].quarter == ser[i].quarter);
            CHECK(par[i].u_star == ser[i].u_star);
            CHECK(par[i].theta_star == ser[i].theta_star);
            CHECK(par[i].classification == ser[i].classification);
            CHECK(par[i].is_gap_quarter == ser[i].is_gap_quarter);
        }
    }
}

TEST_CASE("sensitivity parallel equals serial")
{
    const auto f = random_fixture(513, 11);
    const std::vector<double> zetas{-0.3, 0.0, 0.25, 0.5, 0.96};
    const auto par = sensitivity(f.panel, f.schedule, 0.72, zetas);
    const auto ser = serial::sensitivity(f.panel, f.schedule, 0.72, zetas);
    CHECK(par.u_star == ser.u_star);
    CHECK(par.quarters == ser.quarters);
    CHECK(par.is_gap_quarter == ser.is_gap_quarter);
}

TEST_CASE("oracle grid parallel equals serial")
{
    const auto grid = default_oracle_grid();
    const auto par = verify_oracle_grid(grid);
    const auto ser = serial::verify_oracle_grid(grid);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].u_numeric == ser[i].u_numeric);
        CHECK(par[i].tangency_residual == ser[i].tangency_residual);
        CHECK(par[i].second_order_ok == ser[i].second_order_ok);
    }
}

TEST_CASE("errors inside parallel regions surface as exceptions")
{
    auto f = random_fixture(64, 5);
    std::vector<ScheduleEntry> entries(f.schedule.entries().begin(), f.schedule.entries().end());
    entries[17].epsilon = -1.0;
    const ElasticitySchedule bad(std::move(entries));
    CHECK_THROWS(gap_series(f.panel, bad, {}));
    CHECK_THROWS(serial::gap_series(f.panel, bad, {}));

    std::vector<OracleCase> grid = default_oracle_grid();
    grid[40].zeta = 1.5;
    CHECK_THROWS(verify_oracle_grid(grid));
}
