#ifndef BGAP_PLANNER_HPP
#define BGAP_PLANNER_HPP

#include "bgap/calibration.hpp"
#include "bgap/data_ingest.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace bgap {

/// Diamond-Mortensen-Pissarides economy with Cobb-Douglas matching
/// m(u, v) = mu * u^alpha * v^(1-alpha).
struct DmpEconomy {
    double alpha = 0.5;      // matching elasticity, (0,1)
    double mu = 1.0;         // matching efficiency
    double s = 0.03;         // job-separation rate
    double p = 1.0;          // productivity of employed workers
    double z = 0.25;         // productivity of unemployed workers, z < p
    double c = 0.72;         // vacancy cost in units of p
    double labor_force = 1.0;

    void validate() const; // throws DomainError
};

/// v(u) = v0 * u^-epsilon.
struct IsoelasticCurve {
    double v0 = 0.0;
    double epsilon = 0.0;

    double operator()(double u) const;
    double slope(double u) const { return -epsilon * (*this)(u) / u; }
};

/// Steady-state curve s (1 - u) = m(u, v), solved for v.
double dmp_beveridge(const DmpEconomy& econ, double u);

/// dv/du along the DMP curve.
double dmp_beveridge_slope(const DmpEconomy& econ, double u);

/// (p n + z u - p c v) L with n = 1 - u.
double dmp_welfare(const DmpEconomy& econ, double u, double v);

struct DmpStats {
    double zeta = 0.0;  // z / p
    double kappa = 0.0; // c
};

DmpStats dmp_stats(const DmpEconomy& econ);

struct PlannerSolution {
    double u_star = 0.0;
    double v_star = 0.0;
    double theta_star = 0.0;
    double welfare = 0.0; // per unit of labor force
    double slope = 0.0;   // v'(u_star)
    bool at_boundary = false;
};

struct PlannerOptions {
    double u_lo = 1e-4;
    double u_hi = 0.5;
    double xtol = 1e-12;
};

/// Maximizes (1 - u) + zeta u - kappa v(u) over the bracket by derivative-free
/// search. `at_boundary` is set when welfare does not peak inside the bracket.
PlannerSolution solve_planner_numeric(const IsoelasticCurve& curve, double zeta, double kappa,
                                      const PlannerOptions& options = {});
PlannerSolution solve_planner_numeric(const DmpEconomy& econ, double zeta, double kappa,
                                      const PlannerOptions& options = {});

/// |v'(u*) + (1 - zeta)/kappa| / ((1 - zeta)/kappa).
double tangency_residual(const PlannerSolution& sol, double zeta, double kappa);

struct PlannerBase {
    IsoelasticCurve curve;
    double zeta = 0.25;
    double kappa = 0.72;
};

struct Perturbations {
    double kappa_step = 0.18;  // 0.72 -> 0.90
    double zeta_step = 0.25;   // 0.25 -> 0.50
    double v0_factor = 1.5;
    double epsilon_step = 0.1; // compensated
};

struct PropertyCheck {
    std::string name;
    bool passed = false;
    double u_before = 0.0, u_after = 0.0;
    double theta_before = 0.0, theta_after = 0.0;
    std::string detail;
};

struct ComparativeStaticsReport {
    std::vector<PropertyCheck> checks;
    double compensated_v0 = 0.0; // v0 that keeps maximized welfare fixed after the epsilon step

    bool all_passed() const;
    std::vector<std::string> violations() const;
};

/// Numerically verifies the sign pattern of the comparative statics:
/// kappa up and zeta up raise u* and lower theta*; an outward shift raises
/// u* and leaves theta* unchanged; a welfare-compensated rise in epsilon
/// raises u* and lowers theta*.
ComparativeStaticsReport comparative_statics_check(const PlannerBase& base, const Perturbations& perturbations,
                                                   const PlannerOptions& options = {});

struct ShockQuarter {
    Quarter quarter;
    double s_multiplier = 1.0;
    double mu_multiplier = 1.0;
};

/// Synthetic-panel scenario. Separation multipliers move the economy along
/// its Beveridge curve: u_t = s m_s / (s m_s + f) with the job-finding rate f
/// fixed at its value when u = u_base. Matching-efficiency multipliers shift
/// the curve: v_t is read off the curve with efficiency mu m_mu.
struct Scenario {
    DmpEconomy economy;
    double u_base = 0.05;
    std::vector<ShockQuarter> shocks;
    double noise_scale = 0.0;
    std::uint64_t seed = 0;
};

/// Deterministic given the seed. Noise is multiplicative log-normal on u and v.
LaborMarketPanel synth_panel(const Scenario& scenario);

/// `quarter,s_multiplier,mu_multiplier`.
std::vector<ShockQuarter> parse_shock_path(std::istream& in);

/// The 81-point verification grid and its outcome.
struct OracleCase {
    double epsilon = 0.0;
    double zeta = 0.0;
    double kappa = 0.0;
    double v0 = 0.0;
};

struct OracleResult {
    OracleCase params;
    double u_numeric = 0.0;
    double u_formula = 0.0;
    double abs_error = 0.0;
    double tangency_residual = 0.0;
    bool second_order_ok = false;
    bool at_boundary = false;
};

std::vector<OracleCase> default_oracle_grid();

/// Solves every case numerically (in parallel) and compares with the
/// closed-form efficient rate evaluated at an on-curve point.
std::vector<OracleResult> verify_oracle_grid(std::span<const OracleCase> grid, const PlannerOptions& options = {});

namespace serial {
std::vector<OracleResult> verify_oracle_grid(std::span<const OracleCase> grid, const PlannerOptions& options = {});
} // namespace serial

} // namespace bgap

#endif
