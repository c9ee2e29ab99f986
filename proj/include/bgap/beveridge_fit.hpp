#ifndef BGAP_BEVERIDGE_FIT_HPP
#define BGAP_BEVERIDGE_FIT_HPP

#include "bgap/data_ingest.hpp"
#include "bgap/estimate.hpp"
#include "bgap/regimes.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace bgap {

/// OLS of ln v on ln u with intercept.
///
/// epsilon is minus the slope, log_v0 the intercept, se_epsilon the classical
/// (homoskedastic) standard error of the slope. Needs at least 3 rows with
/// variation in u, and a downward-sloping fit.
ElasticityEstimate fit_elasticity(std::span<const PanelRow> rows, std::string regime = {});

/// One estimate per regime, in table order. Regimes are fitted in parallel.
/// Errors carry the regime label.
std::vector<ElasticityEstimate> fit_all(const LaborMarketPanel& panel, const RegimeTable& table);

/// v0 * u^-epsilon with v0 = exp(log_v0).
double predicted_vacancy(double log_v0, double epsilon, double u);

/// Beveridge elasticity of the Cobb-Douglas DMP steady state,
/// (alpha + u/(1-u)) / (1-alpha).
double dmp_elasticity(double alpha, double u);

void write_estimates_csv(std::ostream& out, std::span<const ElasticityEstimate> estimates, const RegimeTable& table);

} // namespace bgap

#endif
