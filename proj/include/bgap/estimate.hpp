#ifndef BGAP_ESTIMATE_HPP
#define BGAP_ESTIMATE_HPP

#include <string>

namespace bgap {

/// Log-log OLS fit of a Beveridge curve branch: ln v = log_v0 - epsilon * ln u.
struct ElasticityEstimate {
    std::string regime;
    double epsilon = 0.0;
    double log_v0 = 0.0;
    double se_epsilon = 0.0;
    double r_squared = 0.0;
    int n_obs = 0;
};

} // namespace bgap

#endif
