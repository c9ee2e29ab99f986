// Serial reference kernels against their OpenMP counterparts.
#include "bgap/gap_engine.hpp"
#include "bgap/planner.hpp"

#include <benchmark/benchmark.h>

#include <map>
#include <random>

using namespace bgap;

namespace {

struct Fixture {
    LaborMarketPanel panel;
    ElasticitySchedule schedule;
};

const Fixture& fixture(int n)
{
    static std::map<int, Fixture> cache;
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> ud(0.02, 0.11), vd(0.01, 0.06), ed(0.6, 1.4);
    std::vector<Quarter> q;
    std::vector<double> u, v;
    std::vector<ScheduleEntry> entries;
    Quarter k{1, 1};
    for (int i = 0; i < n; ++i, k = k.next()) {
        q.push_back(k);
        u.push_back(ud(rng));
        v.push_back(vd(rng));
        entries.push_back({k, ed(rng), -3.0, "r", false});
    }
    return cache.emplace(n, Fixture{LaborMarketPanel::from_rates(q, u, v), ElasticitySchedule(std::move(entries))})
        .first->second;
}

const std::vector<double> zetas{0.0, 0.1, 0.25, 0.4, 0.5, 0.75, 0.9, 0.96};

void BM_gap_serial(benchmark::State& st)
{
    const auto& f = fixture(static_cast<int>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(serial::gap_series(f.panel, f.schedule, {}));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_gap_parallel(benchmark::State& st)
{
    const auto& f = fixture(static_cast<int>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(gap_series(f.panel, f.schedule, {}));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_sensitivity_serial(benchmark::State& st)
{
    const auto& f = fixture(static_cast<int>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(serial::sensitivity(f.panel, f.schedule, 0.72, zetas));
}

void BM_sensitivity_parallel(benchmark::State& st)
{
    const auto& f = fixture(static_cast<int>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(sensitivity(f.panel, f.schedule, 0.72, zetas));
}

void BM_oracle_serial(benchmark::State& st)
{
    const auto grid = default_oracle_grid();
    for (auto _ : st)
        benchmark::DoNotOptimize(serial::verify_oracle_grid(grid));
}

void BM_oracle_parallel(benchmark::State& st)
{
    const auto grid = default_oracle_grid();
    for (auto _ : st)
        benchmark::DoNotOptimize(verify_oracle_grid(grid));
}

} // namespace

BENCHMARK(BM_gap_serial)->Arg(276)->Arg(100000);
BENCHMARK(BM_gap_parallel)->Arg(276)->Arg(100000)->UseRealTime();
BENCHMARK(BM_sensitivity_serial)->Arg(276)->Arg(100000);
BENCHMARK(BM_sensitivity_parallel)->Arg(276)->Arg(100000)->UseRealTime();
BENCHMARK(BM_oracle_serial);
BENCHMARK(BM_oracle_parallel)->UseRealTime();

BENCHMARK_MAIN();
