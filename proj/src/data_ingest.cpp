#include "bgap/data_ingest.hpp"

#include "bgap/error.hpp"
#include "bgap/text.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

namespace bgap {

ValueUnit parse_unit(std::string_view text)
{
    const auto t = text::trim(text);
    if (t == "percent")
        return ValueUnit::percent;
    if (t == "fraction")
        return ValueUnit::fraction;
    throw ConfigError("unknown unit '" + std::string(text) + "' (expected percent or fraction)");
}

std::vector<MonthlyPoint> parse_series_csv(std::istream& in, ValueUnit unit)
{
    std::vector<MonthlyPoint> points;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = text::trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        if (!header_seen) {
            header_seen = true;
            const auto cols = text::split(t, ',');
            if (cols.size() != 2 || cols[0] != "date" || cols[1] != "value")
                throw ParseError("expected header 'date,value'", lineno);
            continue;
        }
        const auto cols = text::split(t, ',');
        if (cols.size() != 2)
            throw ParseError("expected 2 columns, got " + std::to_string(cols.size()), lineno);
        const auto date = cols[0];
        MonthlyPoint p;
        if (date.size() != 7 || date[4] != '-' || !text::parse_int(date.substr(0, 4), p.year)
            || !text::parse_int(date.substr(5, 2), p.month) || p.month < 1 || p.month > 12)
            throw ParseError("malformed date '" + std::string(date) + "' (expected YYYY-MM)", lineno);
        if (!text::parse_double(cols[1], p.value))
            throw ParseError("malformed value '" + std::string(cols[1]) + "'", lineno);
        if (p.value < 0.0)
            throw DomainError("line " + std::to_string(lineno) + ": negative rate " + std::string(cols[1]));
        if (unit == ValueUnit::percent)
            p.value /= 100.0;
        points.push_back(p);
    }
    if (!header_seen)
        throw ParseError("empty series file", lineno);

    std::ranges::sort(points, {}, [](const MonthlyPoint& p) { return p.year * 12 + p.month; });
    const auto dup = std::ranges::adjacent_find(
        points, [](const MonthlyPoint& a, const MonthlyPoint& b) { return a.year == b.year && a.month == b.month; });
    if (dup != points.end())
        throw DuplicateError("duplicate date " + std::to_string(dup->year) + "-"
                             + (dup->month < 10 ? "0" : "") + std::to_string(dup->month));
    return points;
}

std::vector<MonthlyPoint> parse_series_csv(std::string_view text, ValueUnit unit)
{
    std::istringstream in{std::string(text)};
    return parse_series_csv(in, unit);
}

QuarterlySeries to_quarterly(std::span<const MonthlyPoint> points)
{
    struct Acc {
        double sum = 0.0;
        int count = 0;
    };
    std::map<Quarter, Acc> acc;
    for (const auto& p : points) {
        auto& a = acc[Quarter::of_month(p.year, p.month)];
        a.sum += p.value;
        ++a.count;
    }
    QuarterlySeries out;
    for (const auto& [q, a] : acc) {
        if (a.count == 3)
            out.points.push_back({q, a.sum / 3.0});
        else
            out.dropped.push_back(q);
    }
    return out;
}

std::vector<QuarterlyPoint> splice_vacancy(std::span<const QuarterlyPoint> pre,
                                           std::span<const QuarterlyPoint> post,
                                           const Quarter& cutover)
{
    std::vector<QuarterlyPoint> out;
    for (const auto& p : pre)
        if (p.quarter < cutover)
            out.push_back(p);
    const auto last_pre = cutover.prev();
    if (out.empty() || out.back().quarter != last_pre)
        throw CoverageError("pre-cutover vacancy series does not cover " + last_pre.str());
    const auto first_post = std::ranges::find(post, cutover, &QuarterlyPoint::quarter);
    if (first_post == post.end())
        throw CoverageError("post-cutover vacancy series does not cover " + cutover.str());
    for (const auto& p : post)
        if (p.quarter >= cutover)
            out.push_back(p);
    return out;
}

LaborMarketPanel LaborMarketPanel::from_rates(std::span<const Quarter> quarters,
                                              std::span<const double> u,
                                              std::span<const double> v)
{
    if (quarters.size() != u.size() || quarters.size() != v.size())
        throw AlignmentError("panel columns have different lengths");
    LaborMarketPanel panel;
    panel.rows_.reserve(quarters.size());
    for (std::size_t i = 0; i < quarters.size(); ++i) {
        const auto& q = quarters[i];
        if (i > 0 && !(quarters[i - 1] < q))
            throw AlignmentError("panel quarters not strictly increasing at " + q.str());
        if (!(u[i] > 0.0) || !(u[i] < 1.0) || !std::isfinite(u[i]))
            throw DomainError("unemployment rate must lie in (0,1) at " + q.str());
        if (!(v[i] > 0.0) || !std::isfinite(v[i]))
            throw DomainError("vacancy rate must be positive at " + q.str());
        panel.rows_.push_back({q, u[i], v[i], v[i] / u[i], 1.0 - u[i]});
    }
    return panel;
}

std::vector<Quarter> LaborMarketPanel::quarters() const
{
    std::vector<Quarter> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_)
        out.push_back(r.quarter);
    return out;
}

std::span<const PanelRow> LaborMarketPanel::slice(const Quarter& start, const Quarter& end) const
{
    const auto lo = std::ranges::lower_bound(rows_, start, {}, &PanelRow::quarter);
    const auto hi = std::ranges::upper_bound(rows_, end, {}, &PanelRow::quarter);
    if (hi <= lo)
        return {};
    return {lo, hi};
}

LaborMarketPanel build_panel(std::span<const QuarterlyPoint> u_series, std::span<const QuarterlyPoint> v_series)
{
    std::map<Quarter, double> vacancies;
    for (const auto& p : v_series)
        vacancies.emplace(p.quarter, p.value);

    std::map<Quarter, double> unemployment;
    for (const auto& p : u_series)
        unemployment.emplace(p.quarter, p.value);

    std::vector<Quarter> quarters;
    std::vector<double> u, v;
    for (const auto& [q, uq] : unemployment) {
        const auto it = vacancies.find(q);
        if (it == vacancies.end())
            continue;
        if (uq == 0.0 || it->second == 0.0)
            throw DomainError("zero rate at " + q.str());
        quarters.push_back(q);
        u.push_back(uq);
        v.push_back(it->second);
    }
    if (quarters.empty())
        throw AlignmentError("unemployment and vacancy series share no quarter");
    return LaborMarketPanel::from_rates(quarters, u, v);
}

void write_panel_csv(std::ostream& out, const LaborMarketPanel& panel)
{
    out << "quarter,u,v,theta,n\n";
    for (const auto& r : panel.rows())
        out << r.quarter.str() << ',' << text::number(r.u) << ',' << text::number(r.v) << ','
            << text::number(r.theta) << ',' << text::number(r.n) << '\n';
}

} // namespace bgap
