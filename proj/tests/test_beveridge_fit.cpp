#include "bgap/beveridge_fit.hpp"
#include "bgap/error.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace bgap;

namespace {

LaborMarketPanel panel_from(std::span<const double> u, std::span<const double> v, Quarter first = {1990, 1})
{
    std::vector<Quarter> q;
    for (std::size_t i = 0; i < u.size(); ++i, first = first.next())
        q.push_back(first);
    return LaborMarketPanel::from_rates(q, u, v);
}

LaborMarketPanel on_curve(double v0, double eps, int n, double u_lo = 0.03, double u_hi = 0.10)
{
    std::vector<double> u, v;
    for (int i = 0; i < n; ++i) {
        const double x = u_lo + (u_hi - u_lo) * i / (n - 1);
        u.push_back(x);
        v.push_back(v0 * std::pow(x, -eps));
    }
    return panel_from(u, v);
}

double noisy_fit_error(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(std::log(0.03), std::log(0.10));
    std::normal_distribution<double> noise(0.0, 0.05);
    std::vector<double> u, v;
    for (int i = 0; i < n; ++i) {
        const double x = std::exp(unif(rng));
        u.push_back(x);
        v.push_back(0.0016 / x * std::exp(noise(rng)));
    }
    const auto p = panel_from(u, v, {1000, 1});
    return std::abs(fit_elasticity(p.rows()).epsilon - 1.0);
}

} // namespace

TEST_CASE("exact isoelastic data")
{
    const auto p = on_curve(0.09, 1.2, 12);
    const auto e = fit_elasticity(p.rows(), "exact");
    CHECK(e.epsilon == doctest::Approx(1.2).epsilon(1e-12));
    CHECK(std::exp(e.log_v0) == doctest::Approx(0.09).epsilon(1e-10));
    CHECK(e.r_squared == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e.se_epsilon < 1e-7);
    CHECK(e.n_obs == 12);
    CHECK(e.regime == "exact");

    for (const auto& r : p.rows())
        CHECK(std::abs(predicted_vacancy(e.log_v0, e.epsilon, r.u) / r.v - 1.0) < 1e-12);
}

TEST_CASE("exact data across parameters")
{
    for (double v0 : {1e-4, 2e-3, 0.09})
        for (double eps : {0.5, 1.0, 1.7}) {
            const auto e = fit_elasticity(on_curve(v0, eps, 8).rows());
            CHECK(std::abs(e.epsilon / eps - 1.0) < 1e-10);
            CHECK(std::abs(std::exp(e.log_v0) / v0 - 1.0) < 1e-10);
            CHECK(e.r_squared == doctest::Approx(1.0).epsilon(1e-10));
        }
}

TEST_CASE("fixed noisy sample against an independent OLS")
{
    // Reference values from a statsmodels OLS on the same ten points.
    const std::vector<double> u{0.040, 0.045, 0.050, 0.055, 0.060, 0.065, 0.070, 0.075, 0.080, 0.090};
    const std::vector<double> noise{0.02, -0.01, 0.015, -0.03, 0.0, 0.025, -0.02, 0.01, -0.005, 0.012};
    std::vector<double> v;
    for (std::size_t i = 0; i < u.size(); ++i)
        v.push_back(0.0016 / u[i] * std::exp(noise[i]));
    const auto e = fit_elasticity(panel_from(u, v).rows());
    CHECK(e.epsilon == doctest::Approx(1.0017985143021733).epsilon(1e-10));
    CHECK(e.log_v0 == doctest::Approx(-6.441077796359197).epsilon(1e-10));
    CHECK(e.se_epsilon == doctest::Approx(0.02429635819011481).epsilon(1e-9));
    CHECK(e.r_squared == doctest::Approx(0.9953164757129677).epsilon(1e-10));
    CHECK(std::abs(e.epsilon - 1.0) < 2.0 * e.se_epsilon);
}

TEST_CASE("scale invariance")
{
    const std::vector<double> u{0.04, 0.05, 0.06, 0.07, 0.09};
    const std::vector<double> v{0.031, 0.027, 0.020, 0.019, 0.014};
    std::vector<double> v2;
    for (double x : v)
        v2.push_back(3.5 * x);
    const auto a = fit_elasticity(panel_from(u, v).rows());
    const auto b = fit_elasticity(panel_from(u, v2).rows());
    CHECK(std::abs(a.epsilon - b.epsilon) < 1e-10);
    CHECK(std::abs(a.se_epsilon - b.se_epsilon) < 1e-10);
    CHECK(std::abs(a.r_squared - b.r_squared) < 1e-10);
    CHECK(std::abs(b.log_v0 - a.log_v0 - std::log(3.5)) < 1e-10);
}

TEST_CASE("estimator consistency")
{
    CHECK(noisy_fit_error(2000, 7) < noisy_fit_error(20, 7));
}

TEST_CASE("fit errors")
{
    const auto p = on_curve(0.0016, 1.0, 10);
    CHECK_THROWS_AS(fit_elasticity(p.rows().first(2)), SampleSizeError);
    const std::vector<double> flat_u{0.05, 0.05, 0.05};
    const std::vector<double> some_v{0.03, 0.02, 0.01};
    CHECK_THROWS_AS(fit_elasticity(panel_from(flat_u, some_v).rows()), DegenerateRegressorError);
    const std::vector<double> up_v{0.01, 0.02, 0.03};
    const std::vector<double> rising_u{0.04, 0.05, 0.06};
    CHECK_THROWS_AS(fit_elasticity(panel_from(rising_u, up_v).rows()), DomainError);
}

TEST_CASE("fit_all attaches regime labels")
{
    const auto p = on_curve(0.0016, 1.0, 12); // 1990Q1..1992Q4
    const auto one = RegimeTable::parse("only,1990Q1,1992Q4\n");
    const auto est = fit_all(p, one);
    REQUIRE(est.size() == 1);
    CHECK(est[0].regime == "only");

    const auto thin = RegimeTable::parse("a,1990Q1,1991Q4\nthin,1992Q1,1992Q2\n");
    try {
        fit_all(p, thin);
        FAIL("expected an error");
    } catch (const SampleSizeError& e) {
        CHECK(std::string(e.what()).find("thin") != std::string::npos);
    }
}

TEST_CASE("predicted_vacancy")
{
    CHECK(predicted_vacancy(std::log(0.09), 1.2, 0.05) == doctest::Approx(3.2770155654469435).epsilon(1e-12));
    CHECK(predicted_vacancy(std::log(0.02), 0.7, 1.0) == doctest::Approx(0.02).epsilon(1e-15));
    CHECK_THROWS_AS(predicted_vacancy(0.0, 1.0, 0.0), DomainError);
}

TEST_CASE("dmp_elasticity")
{
    CHECK(dmp_elasticity(0.5, 0.058) == doctest::Approx(1.1231422505307855).epsilon(1e-12));
    CHECK(dmp_elasticity(0.5, 1e-12) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(dmp_elasticity(0.6, 0.05) == doctest::Approx(1.631578947368421).epsilon(1e-12));
    CHECK_THROWS_AS(dmp_elasticity(1.0, 0.05), DomainError);
    CHECK_THROWS_AS(dmp_elasticity(0.5, 1.0), DomainError);
    double prev = 0.0;
    for (double u = 0.01; u < 0.5; u += 0.01) {
        CHECK(dmp_elasticity(0.5, u) > prev);
        prev = dmp_elasticity(0.5, u);
    }
    CHECK(dmp_elasticity(0.6, 0.05) > dmp_elasticity(0.5, 0.05));
}
