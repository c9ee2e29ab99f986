#ifndef BGAP_CALIBRATION_HPP
#define BGAP_CALIBRATION_HPP

#include <string>

namespace bgap {

class ConfigFile;

struct RecruitingSurvey {
    double recruiting_share = 0.0; // fraction of labor costs spent on recruiting
    double u = 0.0;
    double v = 0.0;
    std::string year;
};

/// Factors converting earnings into a marginal product of labor. Each >= 1.
struct MplAdjustment {
    double recruiting_wedge = 1.0;
    double payroll_tax_factor = 1.0;
    double recency_discount_undo = 1.0;
};

/// Public benefits received during unemployment, as fractions of the MPL.
struct BenefitOffset {
    double ui_replacement = 0.0;
    double takeup = 0.0;
    double tax_factor = 0.0;
    double filing_disutility_factor = 0.0;
    double expiry_factor = 0.0;
    double other_benefits = 0.0;
};

/// Inputs to the efficient-unemployment formula.
struct SufficientStats {
    double epsilon = 0.0; // Beveridge elasticity, > 0
    double kappa = 0.0;   // recruiting cost, > 0
    double zeta = 0.0;    // social value of nonwork, < 1

    /// Throws DomainError unless epsilon > 0, kappa > 0, zeta < 1.
    void validate() const;
};

/// kappa * v = share * (1 - u).
double kappa_from_survey(const RecruitingSurvey& s);

double mpl_factor(const MplAdjustment& adj);

double benefit_offset_value(const BenefitOffset& b);

/// raw / factor - offset.
double zeta_from_study(double raw_replacement, double factor, double offset);

double zeta_midrange(double lo, double hi);

/// Calibration profile loaded from a config file, with the US values as defaults.
struct CalibrationProfile {
    RecruitingSurvey survey{0.025, 0.049, 0.033, "1997"};
    double zeta = 0.25;
    double zeta_lo = 0.0;
    double zeta_hi = 0.5;

    double recruiting_wedge_low = 1.03;
    double recruiting_wedge_high = 1.25;
    double payroll_tax_factor = 1.077;
    double recency_discount_undo = 1.06;

    BenefitOffset benefits{0.215, 0.65, 0.83, 0.47, 0.83, 0.02};
    double rounded_offset = 0.07;

    double field_experiment_value = 0.58;
    double reenlistment_low = 0.13;
    double reenlistment_high = 0.35;

    double kappa() const { return kappa_from_survey(survey); }

    static CalibrationProfile from_config(const ConfigFile& cfg);
};

/// Range of zeta implied by the two study families.
struct ZetaBounds {
    double field_low = 0.0;  // field-experiment value, upper MPL factor
    double field_high = 0.0; // field-experiment value, lower MPL factor
    double reenlist_low = 0.0;
    double reenlist_high = 0.0;
};

/// `offset` is subtracted from the reenlistment estimates only.
ZetaBounds zeta_bounds(const CalibrationProfile& p, double offset);

} // namespace bgap

#endif
