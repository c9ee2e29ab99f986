#include "bgap/regimes.hpp"

#include "bgap/error.hpp"
#include "bgap/text.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace bgap {

RegimeTable::RegimeTable(std::vector<Regime> regimes)
    : regimes_(std::move(regimes))
{
    std::ranges::sort(regimes_, {}, &Regime::start);
    for (std::size_t i = 0; i < regimes_.size(); ++i) {
        const auto& r = regimes_[i];
        if (r.end < r.start)
            throw ConfigError("regime " + r.label + " ends before it starts");
        if (i > 0 && !(regimes_[i - 1].end < r.start))
            throw ConfigError("regimes " + regimes_[i - 1].label + " and " + r.label + " overlap");
        for (std::size_t j = 0; j < i; ++j)
            if (regimes_[j].label == r.label)
                throw ConfigError("duplicate regime label " + r.label);
    }
}

RegimeTable RegimeTable::us_default()
{
    auto make = [](int y0, int q0, int y1, int q1) {
        const Quarter s{y0, q0}, e{y1, q1};
        return Regime{s.str() + "-" + e.str(), s, e};
    };
    return RegimeTable({
        make(1951, 1, 1959, 2),
        make(1959, 4, 1971, 1),
        make(1971, 3, 1975, 1),
        make(1975, 3, 1987, 3),
        make(1990, 1, 1999, 1),
        make(2001, 1, 2009, 3),
        make(2010, 1, 2019, 4),
    });
}

RegimeTable RegimeTable::parse(std::istream& in)
{
    std::vector<Regime> regimes;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = text::trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        const auto cols = text::split(t, ',');
        if (cols.size() != 3 || cols[0].empty())
            throw ParseError("expected 'label,start,end'", lineno);
        const auto start = Quarter::try_parse(cols[1]);
        const auto end = Quarter::try_parse(cols[2]);
        if (!start || !end)
            throw ParseError("malformed quarter (expected YYYYQn)", lineno);
        regimes.push_back({std::string(cols[0]), *start, *end});
    }
    if (regimes.empty())
        throw ConfigError("regime file defines no regimes");
    return RegimeTable(std::move(regimes));
}

RegimeTable RegimeTable::parse(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse(in);
}

std::optional<Regime> assign_regime(const Quarter& q, const RegimeTable& table)
{
    const auto regimes = table.regimes();
    const auto it = std::ranges::upper_bound(regimes, q, {}, &Regime::start);
    if (it == regimes.begin())
        return std::nullopt;
    const auto& r = *(it - 1);
    if (r.contains(q))
        return r;
    return std::nullopt;
}

const ScheduleEntry* ElasticitySchedule::find(const Quarter& q) const noexcept
{
    const auto it = std::ranges::lower_bound(entries_, q, {}, &ScheduleEntry::quarter);
    if (it == entries_.end() || it->quarter != q)
        return nullptr;
    return &*it;
}

ElasticitySchedule ElasticitySchedule::constant(std::span<const Quarter> quarters, const ElasticityEstimate& estimate)
{
    std::vector<ScheduleEntry> entries;
    entries.reserve(quarters.size());
    for (const auto& q : quarters)
        entries.push_back({q, estimate.epsilon, estimate.log_v0, estimate.regime, false});
    return ElasticitySchedule(std::move(entries));
}

ElasticitySchedule build_schedule(const RegimeTable& table,
                                  std::span<const ElasticityEstimate> estimates,
                                  std::span<const Quarter> quarters)
{
    if (table.empty())
        throw ConfigError("empty regime table");

    std::vector<const ElasticityEstimate*> by_regime;
    for (const auto& r : table.regimes()) {
        const auto it = std::ranges::find(estimates, r.label, &ElasticityEstimate::regime);
        if (it == estimates.end())
            throw ConfigError("no elasticity estimate for regime " + r.label);
        if (!(it->epsilon > 0.0))
            throw ConfigError("non-positive elasticity for regime " + r.label);
        by_regime.push_back(&*it);
    }

    const auto regimes = table.regimes();
    std::vector<ScheduleEntry> entries;
    entries.reserve(quarters.size());
    for (const auto& q : quarters) {
        // Last regime starting at or before q; none means q precedes the table.
        const auto it = std::ranges::upper_bound(regimes, q, {}, &Regime::start);
        std::size_t idx = 0;
        bool flagged = true;
        if (it != regimes.begin()) {
            idx = static_cast<std::size_t>(it - regimes.begin()) - 1;
            flagged = !regimes[idx].contains(q);
        }
        const auto& e = *by_regime[idx];
        entries.push_back({q, e.epsilon, e.log_v0, regimes[idx].label, flagged});
    }
    std::ranges::sort(entries, {}, &ScheduleEntry::quarter);
    return ElasticitySchedule(std::move(entries));
}

} // namespace bgap
