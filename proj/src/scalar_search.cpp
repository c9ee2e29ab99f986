#include "bgap/scalar_search.hpp"

#include "bgap/error.hpp"

#include <algorithm>
#include <vector>

namespace bgap {

namespace {

constexpr double inv_phi = 0.6180339887498949; // (sqrt(5) - 1) / 2

} // namespace

MaximumResult maximize_scalar(const std::function<double(double)>& f, double lo, double hi, double xtol,
                              int scan_points)
{
    if (!(lo > 0.0) || !(hi > lo))
        throw DomainError("maximize_scalar needs 0 < lo < hi");
    scan_points = std::max(scan_points, 3);

    MaximumResult res;
    std::vector<double> xs(static_cast<std::size_t>(scan_points));
    std::vector<double> fs(xs.size());
    const double step = std::log(hi / lo) / (scan_points - 1);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        xs[i] = i + 1 == xs.size() ? hi : lo * std::exp(step * static_cast<double>(i));
        fs[i] = f(xs[i]);
    }
    res.evaluations = scan_points;
    const auto best = static_cast<std::size_t>(std::ranges::max_element(fs) - fs.begin());
    res.at_boundary = best == 0 || best + 1 == xs.size();

    double a = xs[best == 0 ? 0 : best - 1];
    double b = xs[best + 1 == xs.size() ? best : best + 1];

    // Golden section on [a, b].
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    res.evaluations += 2;
    for (int iter = 0; iter < 200 && (b - a) > xtol; ++iter) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        ++res.evaluations;
    }
    double x = fc >= fd ? c : d;
    double fx = std::max(fc, fd);

    // Newton polish on difference quotients; skipped at the interval ends.
    if (!res.at_boundary) {
        const double left = xs[best - 1], right = xs[best + 1];
        for (int iter = 0; iter < 4; ++iter) {
            const double h = 1e-5 * x;
            const double fp = f(x + h), fm = f(x - h), f0 = f(x);
            res.evaluations += 3;
            const double slope = (fp - fm) / (2.0 * h);
            const double curv = (fp - 2.0 * f0 + fm) / (h * h);
            if (!(curv < 0.0))
                break;
            const double next = x - slope / curv;
            if (!(next > left && next < right))
                break;
            const double fnext = f(next);
            ++res.evaluations;
            if (fnext < fx - 1e-15 * std::abs(fx))
                break;
            const bool converged = std::abs(next - x) < 1e-14 * x;
            x = next;
            fx = std::max(fx, fnext);
            if (converged)
                break;
        }
    }
    res.x = x;
    res.fx = f(x);
    ++res.evaluations;
    return res;
}

double find_root(const std::function<double(double)>& f, double lo, double hi, double xtol)
{
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw DomainError("find_root: no sign change on the interval");
    for (int iter = 0; iter < 400 && (hi - lo) > xtol; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        const double fm = f(mid);
        if (fm == 0.0)
            return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace bgap
