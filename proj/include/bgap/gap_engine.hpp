#ifndef BGAP_GAP_ENGINE_HPP
#define BGAP_GAP_ENGINE_HPP

#include "bgap/calibration.hpp"
#include "bgap/data_ingest.hpp"
#include "bgap/regimes.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace bgap {

enum class Classification { inefficiently_slack, inefficiently_tight, efficient };

std::string_view to_string(Classification c) noexcept;

inline constexpr double default_classification_tolerance = 0.01;

/// (1 - zeta) / (kappa * epsilon).
double efficient_tightness(const SufficientStats& stats);

/// Tight above theta_star * (1 + tol), slack below theta_star * (1 - tol).
Classification classify(double theta, double theta_star, double tol = default_classification_tolerance);

/// [kappa * epsilon / (1 - zeta) * v / u]^(1 / (1 + epsilon)) * u.
/// Values >= 1 are returned as computed; callers flag them.
double efficient_unemployment(double u, double v, const SufficientStats& stats);

inline double unemployment_gap(double u, double u_star) noexcept { return u - u_star; }

/// 1 - kappa * epsilon * theta: the zeta that makes tightness theta efficient.
double implied_zeta(double theta, double kappa, double epsilon);

struct GapPoint {
    Quarter quarter;
    double u = 0.0;
    double v = 0.0;
    double theta = 0.0;
    double epsilon = 0.0;
    double u_star = 0.0;
    double theta_star = 0.0;
    double gap = 0.0;
    Classification classification = Classification::efficient;
    bool is_gap_quarter = false;
    bool out_of_range = false; // u_star >= 1
};

struct GapOptions {
    double kappa = 0.72;
    double zeta = 0.25;
    double tolerance = default_classification_tolerance;
    std::map<std::string, double> kappa_by_regime; // overrides kappa for listed regime labels
};

/// Per-quarter evaluation with each quarter's scheduled epsilon.
/// Quarters are evaluated in parallel; output order follows the panel.
std::vector<GapPoint> gap_series(const LaborMarketPanel& panel, const ElasticitySchedule& schedule,
                                 const GapOptions& options);

struct Extremum {
    double value = 0.0;
    Quarter quarter;
};

struct GapSummary {
    int quarters = 0;
    double mean_u = 0.0;
    double mean_u_star = 0.0;
    double mean_gap = 0.0;
    Extremum min_gap;
    Extremum max_gap;
    int slack_quarters = 0;
    int tight_quarters = 0;
    int efficient_quarters = 0;
    int out_of_range_quarters = 0;
};

/// Unweighted quarterly means. Throws InputError if no quarter qualifies.
GapSummary summarize(std::span<const GapPoint> points, bool exclude_gap_quarters);

/// u_star under several zeta values on a common panel.
struct SensitivityBand {
    std::vector<double> zetas;
    std::vector<Quarter> quarters;
    std::vector<double> u;
    std::vector<bool> is_gap_quarter;
    std::vector<std::vector<double>> u_star; // [zeta index][quarter index]

    std::optional<std::size_t> index_of(double zeta) const;
};

struct SensitivityOptions {
    double kappa = 0.72;
    double baseline_zeta = 0.25;
    double band_low = 0.0;
    double band_high = 0.5;
    bool exclude_gap_quarters = false;
};

struct ZetaSummary {
    double zeta = 0.0;
    double mean_u_star = 0.0;
    double min_u_star = 0.0;
    double max_u_star = 0.0;
    double mean_shift = 0.0; // versus the baseline zeta, fraction
};

struct SensitivitySummary {
    double baseline_zeta = 0.0;
    double baseline_mean_u_star = 0.0;
    std::vector<ZetaSummary> per_zeta;
    std::optional<double> mean_band_width; // between band_low and band_high when both are listed
};

/// Evaluates every (zeta, quarter) pair in parallel. Each zeta must be < 1.
SensitivityBand sensitivity(const LaborMarketPanel& panel, const ElasticitySchedule& schedule, double kappa,
                            std::span<const double> zetas);

SensitivitySummary summarize_sensitivity(const LaborMarketPanel& panel, const ElasticitySchedule& schedule,
                                         const SensitivityBand& band, const SensitivityOptions& options);

struct ImpliedZetaPoint {
    Quarter quarter;
    double theta = 0.0;
    double epsilon = 0.0;
    double zeta_star = 0.0;
    bool is_gap_quarter = false;
};

std::vector<ImpliedZetaPoint> implied_zeta_series(const LaborMarketPanel& panel, const ElasticitySchedule& schedule,
                                                  double kappa);

/// Single-threaded versions of the parallel kernels, kept as the reference
/// the parallel code is tested and benchmarked against.
namespace serial {

std::vector<GapPoint> gap_series(const LaborMarketPanel& panel, const ElasticitySchedule& schedule,
                                 const GapOptions& options);

SensitivityBand sensitivity(const LaborMarketPanel& panel, const ElasticitySchedule& schedule, double kappa,
                            std::span<const double> zetas);

} // namespace serial

void write_gap_csv(std::ostream& out, std::span<const GapPoint> points);
void write_sensitivity_csv(std::ostream& out, const SensitivityBand& band);
void write_implied_zeta_csv(std::ostream& out, std::span<const ImpliedZetaPoint> points);

/// Column label for a zeta value: 0 -> "z0", 0.25 -> "z25", 0.96 -> "z96".
std::string zeta_column(double zeta);

} // namespace bgap

#endif
