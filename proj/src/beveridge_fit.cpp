#include "bgap/beveridge_fit.hpp"

#include "bgap/error.hpp"
#include "bgap/text.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <optional>
#include <ostream>

namespace bgap {

ElasticityEstimate fit_elasticity(std::span<const PanelRow> rows, std::string regime)
{
    const auto where = regime.empty() ? std::string{} : " in regime " + regime;
    const auto n = rows.size();
    if (n < 3)
        throw SampleSizeError("need at least 3 observations" + where + ", got " + std::to_string(n));

    double mx = 0.0, my = 0.0;
    for (const auto& r : rows) {
        if (!(r.u > 0.0) || !(r.v > 0.0))
            throw DomainError("non-positive rate at " + r.quarter.str() + where);
        mx += std::log(r.u);
        my += std::log(r.v);
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    // Centered sums keep the cross products well conditioned.
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto& r : rows) {
        const double dx = std::log(r.u) - mx;
        const double dy = std::log(r.v) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (!(sxx > 1e-14 * static_cast<double>(n)))
        throw DegenerateRegressorError("no variation in log unemployment" + where);

    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    if (!(slope < 0.0))
        throw DomainError("fitted Beveridge curve is not downward sloping" + where);

    double ssr = 0.0;
    for (const auto& r : rows) {
        const double e = std::log(r.v) - intercept - slope * std::log(r.u);
        ssr += e * e;
    }

    ElasticityEstimate est;
    est.regime = std::move(regime);
    est.epsilon = -slope;
    est.log_v0 = intercept;
    est.se_epsilon = std::sqrt(ssr / static_cast<double>(n - 2) / sxx);
    est.r_squared = syy > 0.0 ? std::clamp(1.0 - ssr / syy, 0.0, 1.0) : 1.0;
    est.n_obs = static_cast<int>(n);
    return est;
}

std::vector<ElasticityEstimate> fit_all(const LaborMarketPanel& panel, const RegimeTable& table)
{
    const auto regimes = table.regimes();
    const auto count = static_cast<long>(regimes.size());
    std::vector<ElasticityEstimate> out(regimes.size());
    std::vector<std::exception_ptr> errors(regimes.size());

#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i) {
        const auto& r = regimes[static_cast<std::size_t>(i)];
        try {
            out[static_cast<std::size_t>(i)] = fit_elasticity(panel.slice(r.start, r.end), r.label);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

double predicted_vacancy(double log_v0, double epsilon, double u)
{
    if (!(u > 0.0))
        throw DomainError("predicted_vacancy needs u > 0");
    return std::exp(log_v0 - epsilon * std::log(u));
}

double dmp_elasticity(double alpha, double u)
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("matching elasticity must lie in (0,1)");
    if (!(u > 0.0 && u < 1.0))
        throw DomainError("unemployment rate must lie in (0,1)");
    return (alpha + u / (1.0 - u)) / (1.0 - alpha);
}

void write_estimates_csv(std::ostream& out, std::span<const ElasticityEstimate> estimates, const RegimeTable& table)
{
    out << "regime,start,end,epsilon,se,log_v0,r2,n_obs\n";
    for (const auto& e : estimates) {
        const auto regimes = table.regimes();
        const auto r = std::ranges::find(regimes, e.regime, &Regime::label);
        const auto start = r != regimes.end() ? r->start.str() : std::string{};
        const auto end = r != regimes.end() ? r->end.str() : std::string{};
        out << e.regime << ',' << start << ',' << end << ',' << text::number(e.epsilon) << ','
            << text::number(e.se_epsilon) << ',' << text::number(e.log_v0) << ',' << text::number(e.r_squared)
            << ',' << e.n_obs << '\n';
    }
}

} // namespace bgap
