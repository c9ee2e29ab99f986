#ifndef BGAP_SCALAR_SEARCH_HPP
#define BGAP_SCALAR_SEARCH_HPP

#include <cmath>
#include <functional>

namespace bgap {

struct MaximumResult {
    double x = 0.0;
    double fx = 0.0;
    bool at_boundary = false; // coarse scan peaked at an end of the interval
    int evaluations = 0;
};

/// Derivative-free maximization of a unimodal function on [lo, hi], lo > 0.
///
/// A log-spaced scan brackets the peak, golden-section search narrows the
/// bracket to `xtol`, and a few Newton steps on central-difference slopes
/// polish the result below the sqrt(machine epsilon) floor that plain value
/// comparisons hit.
MaximumResult maximize_scalar(const std::function<double(double)>& f, double lo, double hi, double xtol = 1e-12,
                              int scan_points = 64);

/// Bisection root of a continuous f with a sign change on [lo, hi].
/// Throws DomainError when f(lo) and f(hi) have the same sign.
double find_root(const std::function<double(double)>& f, double lo, double hi, double xtol = 1e-12);

} // namespace bgap

#endif
