#include "bgap/gap_engine.hpp"

#include "bgap/error.hpp"
#include "bgap/text.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <ostream>

namespace bgap {

std::string_view to_string(Classification c) noexcept
{
    switch (c) {
    case Classification::inefficiently_slack:
        return "inefficiently_slack";
    case Classification::inefficiently_tight:
        return "inefficiently_tight";
    case Classification::efficient:
        return "efficient";
    }
    return "efficient";
}

double efficient_tightness(const SufficientStats& stats)
{
    stats.validate();
    return (1.0 - stats.zeta) / (stats.kappa * stats.epsilon);
}

Classification classify(double theta, double theta_star, double tol)
{
    if (theta > theta_star * (1.0 + tol))
        return Classification::inefficiently_tight;
    if (theta < theta_star * (1.0 - tol))
        return Classification::inefficiently_slack;
    return Classification::efficient;
}

double efficient_unemployment(double u, double v, const SufficientStats& stats)
{
    if (!(u > 0.0) || !(v > 0.0))
        throw DomainError("efficient_unemployment needs u > 0 and v > 0");
    stats.validate();
    const double ratio = stats.kappa * stats.epsilon / (1.0 - stats.zeta) * (v / u);
    return std::pow(ratio, 1.0 / (1.0 + stats.epsilon)) * u;
}

double implied_zeta(double theta, double kappa, double epsilon)
{
    return 1.0 - kappa * epsilon * theta;
}

namespace {

const ScheduleEntry& schedule_for(const ElasticitySchedule& schedule, const Quarter& q)
{
    const auto* e = schedule.find(q);
    if (e == nullptr)
        throw ConfigError("elasticity schedule does not cover " + q.str());
    if (!(e->epsilon > 0.0))
        throw DomainError("non-positive scheduled elasticity at " + q.str());
    return *e;
}

// Lookups are done up front so the parallel loops never throw.
std::vector<const ScheduleEntry*> align_schedule(const LaborMarketPanel& panel, const ElasticitySchedule& schedule)
{
    std::vector<const ScheduleEntry*> out;
    out.reserve(panel.size());
    for (const auto& r : panel.rows())
        out.push_back(&schedule_for(schedule, r.quarter));
    return out;
}

GapPoint evaluate(const PanelRow& row, const ScheduleEntry& entry, const GapOptions& options)
{
    const auto k = options.kappa_by_regime.find(entry.regime);
    const double kappa = k == options.kappa_by_regime.end() ? options.kappa : k->second;
    const SufficientStats stats{entry.epsilon, kappa, options.zeta};
    GapPoint p;
    p.quarter = row.quarter;
    p.u = row.u;
    p.v = row.v;
    p.theta = row.theta;
    p.epsilon = entry.epsilon;
    p.theta_star = efficient_tightness(stats);
    p.u_star = efficient_unemployment(row.u, row.v, stats);
    p.gap = unemployment_gap(row.u, p.u_star);
    p.classification = classify(row.theta, p.theta_star, options.tolerance);
    p.is_gap_quarter = entry.is_gap_quarter;
    p.out_of_range = !(p.u_star < 1.0);
    return p;
}

void check_options(const GapOptions& options)
{
    SufficientStats{1.0, options.kappa, options.zeta}.validate();
    for (const auto& [regime, kappa] : options.kappa_by_regime)
        if (!(kappa > 0.0))
            throw ConfigError("non-positive recruiting cost override for " + regime);
    if (!(options.tolerance >= 0.0 && options.tolerance < 1.0))
        throw ConfigError("classification tolerance must lie in [0,1)");
}

void check_zetas(std::span<const double> zetas)
{
    if (zetas.empty())
        throw ConfigError("empty zeta list");
    for (double z : zetas)
        if (!(z < 1.0))
            throw ConfigError("every zeta must be below 1");
}

SensitivityBand empty_band(const LaborMarketPanel& panel, const std::vector<const ScheduleEntry*>& entries,
                           std::span<const double> zetas)
{
    SensitivityBand band;
    band.zetas.assign(zetas.begin(), zetas.end());
    for (std::size_t i = 0; i < panel.size(); ++i) {
        band.quarters.push_back(panel[i].quarter);
        band.u.push_back(panel[i].u);
        band.is_gap_quarter.push_back(entries[i]->is_gap_quarter);
    }
    band.u_star.assign(zetas.size(), std::vector<double>(panel.size()));
    return band;
}

} // namespace

std::vector<GapPoint> gap_series(const LaborMarketPanel& panel, const ElasticitySchedule& schedule,
                                 const GapOptions& options)
{
    check_options(options);
    const auto entries = align_schedule(panel, schedule);
    const auto rows = panel.rows();
    const auto count = static_cast<long>(rows.size());
    std::vector<GapPoint> out(rows.size());
    std::vector<std::exception_ptr> errors(rows.size());

#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            out[k] = evaluate(rows[k], *entries[k], options);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

SensitivityBand sensitivity(const LaborMarketPanel& panel, const ElasticitySchedule& schedule, double kappa,
                            std::span<const double> zetas)
{
    check_zetas(zetas);
    SufficientStats{1.0, kappa, 0.0}.validate();
    const auto entries = align_schedule(panel, schedule);
    auto band = empty_band(panel, entries, zetas);
    const auto rows = panel.rows();
    const auto nz = static_cast<long>(zetas.size());
    const auto nq = static_cast<long>(rows.size());

#pragma omp parallel for collapse(2) schedule(static)
    for (long z = 0; z < nz; ++z)
        for (long q = 0; q < nq; ++q) {
            const auto& row = rows[static_cast<std::size_t>(q)];
            const SufficientStats stats{entries[static_cast<std::size_t>(q)]->epsilon, kappa,
                                        zetas[static_cast<std::size_t>(z)]};
            band.u_star[static_cast<std::size_t>(z)][static_cast<std::size_t>(q)]
                = efficient_unemployment(row.u, row.v, stats);
        }
    return band;
}

namespace serial {

std::vector<GapPoint> gap_series(const LaborMarketPanel& panel, const ElasticitySchedule& schedule,
                                 const GapOptions& options)
{
    check_options(options);
    std::vector<GapPoint> out;
    out.reserve(panel.size());
    for (const auto& row : panel.rows())
        out.push_back(evaluate(row, schedule_for(schedule, row.quarter), options));
    return out;
}

SensitivityBand sensitivity(const LaborMarketPanel& panel, const ElasticitySchedule& schedule, double kappa,
                            std::span<const double> zetas)
{
    check_zetas(zetas);
    SufficientStats{1.0, kappa, 0.0}.validate();
    const auto entries = align_schedule(panel, schedule);
    auto band = empty_band(panel, entries, zetas);
    for (std::size_t z = 0; z < zetas.size(); ++z)
        for (std::size_t q = 0; q < panel.size(); ++q)
            band.u_star[z][q] = efficient_unemployment(panel[q].u, panel[q].v, {entries[q]->epsilon, kappa, zetas[z]});
    return band;
}

} // namespace serial

GapSummary summarize(std::span<const GapPoint> points, bool exclude_gap_quarters)
{
    GapSummary s;
    s.min_gap.value = std::numeric_limits<double>::infinity();
    s.max_gap.value = -std::numeric_limits<double>::infinity();
    double su = 0.0, sus = 0.0, sg = 0.0;
    for (const auto& p : points) {
        if (exclude_gap_quarters && p.is_gap_quarter)
            continue;
        ++s.quarters;
        su += p.u;
        sus += p.u_star;
        sg += p.gap;
        if (p.gap < s.min_gap.value)
            s.min_gap = {p.gap, p.quarter};
        if (p.gap > s.max_gap.value)
            s.max_gap = {p.gap, p.quarter};
        switch (p.classification) {
        case Classification::inefficiently_slack:
            ++s.slack_quarters;
            break;
        case Classification::inefficiently_tight:
            ++s.tight_quarters;
            break;
        case Classification::efficient:
            ++s.efficient_quarters;
            break;
        }
        if (p.out_of_range)
            ++s.out_of_range_quarters;
    }
    if (s.quarters == 0)
        throw InputError("no quarters to summarize");
    const double n = s.quarters;
    s.mean_u = su / n;
    s.mean_u_star = sus / n;
    s.mean_gap = sg / n;
    return s;
}

std::optional<std::size_t> SensitivityBand::index_of(double zeta) const
{
    for (std::size_t i = 0; i < zetas.size(); ++i)
        if (std::abs(zetas[i] - zeta) < 1e-12)
            return i;
    return std::nullopt;
}

SensitivitySummary summarize_sensitivity(const LaborMarketPanel& panel, const ElasticitySchedule& schedule,
                                         const SensitivityBand& band, const SensitivityOptions& options)
{
    auto included = [&](std::size_t q) { return !(options.exclude_gap_quarters && band.is_gap_quarter[q]); };
    auto mean_of = [&](const std::vector<double>& xs) {
        double sum = 0.0;
        int n = 0;
        for (std::size_t q = 0; q < xs.size(); ++q)
            if (included(q)) {
                sum += xs[q];
                ++n;
            }
        if (n == 0)
            throw InputError("no quarters to summarize");
        return sum / n;
    };

    SensitivitySummary s;
    s.baseline_zeta = options.baseline_zeta;
    if (const auto b = band.index_of(options.baseline_zeta))
        s.baseline_mean_u_star = mean_of(band.u_star[*b]);
    else {
        const double z = options.baseline_zeta;
        const auto base = serial::sensitivity(panel, schedule, options.kappa, std::span<const double>(&z, 1));
        s.baseline_mean_u_star = mean_of(base.u_star[0]);
    }

    for (std::size_t z = 0; z < band.zetas.size(); ++z) {
        ZetaSummary zs;
        zs.zeta = band.zetas[z];
        zs.mean_u_star = mean_of(band.u_star[z]);
        zs.min_u_star = std::numeric_limits<double>::infinity();
        zs.max_u_star = -std::numeric_limits<double>::infinity();
        for (std::size_t q = 0; q < band.quarters.size(); ++q)
            if (included(q)) {
                zs.min_u_star = std::min(zs.min_u_star, band.u_star[z][q]);
                zs.max_u_star = std::max(zs.max_u_star, band.u_star[z][q]);
            }
        zs.mean_shift = zs.mean_u_star - s.baseline_mean_u_star;
        s.per_zeta.push_back(zs);
    }

    const auto lo = band.index_of(options.band_low);
    const auto hi = band.index_of(options.band_high);
    if (lo && hi) {
        std::vector<double> width(band.quarters.size());
        for (std::size_t q = 0; q < width.size(); ++q)
            width[q] = band.u_star[*hi][q] - band.u_star[*lo][q];
        s.mean_band_width = mean_of(width);
    }
    return s;
}

std::vector<ImpliedZetaPoint> implied_zeta_series(const LaborMarketPanel& panel, const ElasticitySchedule& schedule,
                                                  double kappa)
{
    std::vector<ImpliedZetaPoint> out;
    out.reserve(panel.size());
    for (const auto& row : panel.rows()) {
        const auto& e = schedule_for(schedule, row.quarter);
        out.push_back({row.quarter, row.theta, e.epsilon, implied_zeta(row.theta, kappa, e.epsilon), e.is_gap_quarter});
    }
    return out;
}

void write_gap_csv(std::ostream& out, std::span<const GapPoint> points)
{
    out << "quarter,u,v,theta,epsilon,u_star,theta_star,gap,classification,is_gap_quarter\n";
    for (const auto& p : points)
        out << p.quarter.str() << ',' << text::number(p.u) << ',' << text::number(p.v) << ','
            << text::number(p.theta) << ',' << text::number(p.epsilon) << ',' << text::number(p.u_star) << ','
            << text::number(p.theta_star) << ',' << text::number(p.gap) << ',' << to_string(p.classification) << ','
            << (p.is_gap_quarter ? 1 : 0) << '\n';
}

std::string zeta_column(double zeta)
{
    const long pct = std::lround(zeta * 100.0);
    if (std::abs(zeta * 100.0 - static_cast<double>(pct)) > 1e-9)
        return "z" + text::number(zeta);
    return pct < 0 ? "zm" + std::to_string(-pct) : "z" + std::to_string(pct);
}

void write_sensitivity_csv(std::ostream& out, const SensitivityBand& band)
{
    out << "quarter,u";
    for (double z : band.zetas)
        out << ",u_star_" << zeta_column(z);
    out << '\n';
    for (std::size_t q = 0; q < band.quarters.size(); ++q) {
        out << band.quarters[q].str() << ',' << text::number(band.u[q]);
        for (std::size_t z = 0; z < band.zetas.size(); ++z)
            out << ',' << text::number(band.u_star[z][q]);
        out << '\n';
    }
}

void write_implied_zeta_csv(std::ostream& out, std::span<const ImpliedZetaPoint> points)
{
    out << "quarter,theta,epsilon,zeta_star,is_gap_quarter\n";
    for (const auto& p : points)
        out << p.quarter.str() << ',' << text::number(p.theta) << ',' << text::number(p.epsilon) << ','
            << text::number(p.zeta_star) << ',' << (p.is_gap_quarter ? 1 : 0) << '\n';
}

} // namespace bgap
