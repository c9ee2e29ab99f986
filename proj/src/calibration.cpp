#include "bgap/calibration.hpp"

#include "bgap/config.hpp"
#include "bgap/error.hpp"

#include <cmath>

namespace bgap {

void SufficientStats::validate() const
{
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw DomainError("Beveridge elasticity must be positive");
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw DomainError("recruiting cost must be positive");
    if (!(zeta < 1.0) || !std::isfinite(zeta))
        throw DomainError("social value of nonwork must be below 1");
}

double kappa_from_survey(const RecruitingSurvey& s)
{
    if (!(s.v > 0.0))
        throw DomainError("recruiting survey needs a positive vacancy rate");
    return s.recruiting_share * (1.0 - s.u) / s.v;
}

double mpl_factor(const MplAdjustment& adj)
{
    return adj.recruiting_wedge * adj.payroll_tax_factor * adj.recency_discount_undo;
}

double benefit_offset_value(const BenefitOffset& b)
{
    return b.ui_replacement * b.takeup * b.tax_factor * b.filing_disutility_factor * b.expiry_factor
        + b.other_benefits;
}

double zeta_from_study(double raw_replacement, double factor, double offset)
{
    return raw_replacement / factor - offset;
}

double zeta_midrange(double lo, double hi)
{
    return 0.5 * (lo + hi);
}

CalibrationProfile CalibrationProfile::from_config(const ConfigFile& cfg)
{
    CalibrationProfile p;
    p.survey.recruiting_share = cfg.get_double("recruiting.recruiting_share", p.survey.recruiting_share);
    p.survey.u = cfg.get_double("recruiting.u_1997", p.survey.u);
    p.survey.v = cfg.get_double("recruiting.v_1997", p.survey.v);
    p.zeta = cfg.get_double("zeta.zeta", p.zeta);
    p.zeta_lo = cfg.get_double("zeta.zeta_lo", p.zeta_lo);
    p.zeta_hi = cfg.get_double("zeta.zeta_hi", p.zeta_hi);
    p.recruiting_wedge_low = cfg.get_double("mpl.recruiting_wedge_low", p.recruiting_wedge_low);
    p.recruiting_wedge_high = cfg.get_double("mpl.recruiting_wedge_high", p.recruiting_wedge_high);
    p.payroll_tax_factor = cfg.get_double("mpl.payroll_tax_factor", p.payroll_tax_factor);
    p.recency_discount_undo = cfg.get_double("mpl.recency_discount_undo", p.recency_discount_undo);
    p.benefits.ui_replacement = cfg.get_double("benefits.ui_replacement", p.benefits.ui_replacement);
    p.benefits.takeup = cfg.get_double("benefits.takeup", p.benefits.takeup);
    p.benefits.tax_factor = cfg.get_double("benefits.tax_factor", p.benefits.tax_factor);
    p.benefits.filing_disutility_factor
        = cfg.get_double("benefits.filing_disutility_factor", p.benefits.filing_disutility_factor);
    p.benefits.expiry_factor = cfg.get_double("benefits.expiry_factor", p.benefits.expiry_factor);
    p.benefits.other_benefits = cfg.get_double("benefits.other_benefits", p.benefits.other_benefits);
    p.rounded_offset = cfg.get_double("benefits.rounded_offset", p.rounded_offset);
    p.field_experiment_value = cfg.get_double("studies.field_experiment_value", p.field_experiment_value);
    p.reenlistment_low = cfg.get_double("studies.reenlistment_low", p.reenlistment_low);
    p.reenlistment_high = cfg.get_double("studies.reenlistment_high", p.reenlistment_high);

    if (!(p.zeta < 1.0))
        throw ConfigError("calibration zeta must be below 1");
    if (p.zeta_hi < p.zeta_lo)
        throw ConfigError("calibration zeta_hi below zeta_lo");
    for (double f : {p.recruiting_wedge_low, p.recruiting_wedge_high, p.payroll_tax_factor, p.recency_discount_undo})
        if (!(f >= 1.0))
            throw ConfigError("MPL adjustment factors must be >= 1");
    return p;
}

ZetaBounds zeta_bounds(const CalibrationProfile& p, double offset)
{
    // The field-experiment earnings carry the recency discount; the
    // reenlistment earnings do not.
    const double field_lo_factor = mpl_factor({p.recruiting_wedge_low, p.payroll_tax_factor, p.recency_discount_undo});
    const double field_hi_factor = mpl_factor({p.recruiting_wedge_high, p.payroll_tax_factor, p.recency_discount_undo});
    const double reen_lo_factor = mpl_factor({p.recruiting_wedge_low, p.payroll_tax_factor, 1.0});
    const double reen_hi_factor = mpl_factor({p.recruiting_wedge_high, p.payroll_tax_factor, 1.0});

    ZetaBounds b;
    b.field_low = zeta_from_study(p.field_experiment_value, field_hi_factor, 0.0);
    b.field_high = zeta_from_study(p.field_experiment_value, field_lo_factor, 0.0);
    b.reenlist_low = zeta_from_study(p.reenlistment_low, reen_hi_factor, offset);
    b.reenlist_high = zeta_from_study(p.reenlistment_high, reen_lo_factor, offset);
    return b;
}

} // namespace bgap
