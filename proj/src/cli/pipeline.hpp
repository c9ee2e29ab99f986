#ifndef BGAP_CLI_PIPELINE_HPP
#define BGAP_CLI_PIPELINE_HPP

#include "bgap/beveridge_fit.hpp"
#include "bgap/calibration.hpp"
#include "bgap/config.hpp"
#include "bgap/data_ingest.hpp"
#include "bgap/gap_engine.hpp"
#include "bgap/planner.hpp"
#include "bgap/regimes.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bgap::cli {

namespace fs = std::filesystem;

struct RunConfig {
    fs::path u_series;
    fs::path v_pre;
    fs::path v_post;
    Quarter cutover{2001, 1};
    ValueUnit unit = ValueUnit::percent;
    std::optional<fs::path> regimes;     // bundled seven-regime table when unset
    std::optional<fs::path> recessions;  // `start,end` quarters
    std::optional<fs::path> calibration; // built-in US profile when unset
    std::optional<fs::path> kappa_overrides;

    std::optional<double> zeta; // overrides the calibration profile
    double tolerance = default_classification_tolerance;
    bool exclude_gap_quarters = false;

    std::vector<double> zetas{0.0, 0.25, 0.5, 0.96};
    double baseline_zeta = 0.25;
    double band_low = 0.0;
    double band_high = 0.5;
    bool implied_zeta = false;

    std::optional<fs::path> scenario;
    std::optional<std::uint64_t> seed; // falls back to the scenario file's seed

    fs::path out = "out";
    bool recompute = false;

    /// Reads the `[data]`, `[calibration]`, `[gap]`, `[sensitivity]`,
    /// `[simulate]` and `[output]` sections.
    static RunConfig from_config(const ConfigFile& cfg);
};

struct SpliceAudit {
    Quarter cutover;
    std::optional<double> last_pre;  // pre-source value in the quarter before the cutover
    std::optional<double> first_post;
    std::optional<double> overlap_pre; // pre-source value at the cutover, when it has one
};

struct Inputs {
    LaborMarketPanel panel;
    std::vector<Quarter> dropped_u;
    std::vector<Quarter> dropped_v;
    SpliceAudit splice;
    RegimeTable regimes;
    CalibrationProfile calibration;
    std::map<std::string, double> kappa_by_regime;
};

/// Loads the series, splices, builds the panel and reads the regime and
/// calibration files. Throws InputError with the offending file named.
Inputs load_inputs(const RunConfig& rc);

/// Fit per regime; failures collected instead of thrown.
struct FitOutcome {
    std::vector<ElasticityEstimate> estimates;
    std::vector<std::pair<std::string, std::string>> failures; // regime, message
};

FitOutcome fit_regimes(const Inputs& in);

struct Analysis {
    std::vector<ElasticityEstimate> estimates;
    ElasticitySchedule schedule;
    double kappa = 0.0;
    double zeta = 0.0;
};

/// Fits every regime (throwing on the first failure) and builds the schedule.
Analysis analyze(const Inputs& in, const RunConfig& rc);

GapOptions gap_options(const Analysis& a, const RunConfig& rc, const Inputs& in);

std::vector<std::pair<Quarter, Quarter>> load_recessions(const fs::path& path);

/// `regime,kappa` lines.
std::map<std::string, double> load_kappa_overrides(const fs::path& path);

/// Scenario file: `[economy]` alpha mu s p z c labor_force, `[scenario]`
/// u_base noise_scale shocks seed, `[perturbations]` kappa_step zeta_step
/// v0_factor epsilon_step.
struct ScenarioConfig {
    Scenario scenario;
    Perturbations perturbations;
};

ScenarioConfig load_scenario(const fs::path& path, std::optional<std::uint64_t> seed_override);

} // namespace bgap::cli

#endif
