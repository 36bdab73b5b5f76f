#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "uncertts/stats.hpp"

using namespace uncertts;

TEST_CASE("normal cdf against reference values") {
    // scipy.stats.norm.cdf
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(normal_cdf(-3.0) == doctest::Approx(0.001349898031630).epsilon(1e-12));
    CHECK(normal_cdf(-1.0) == doctest::Approx(0.158655253931457).epsilon(1e-12));
    CHECK(normal_cdf(0.5) == doctest::Approx(0.691462461274013).epsilon(1e-12));
    CHECK(normal_cdf(2.33) == doctest::Approx(0.990096924440836).epsilon(1e-12));
    for (double x : {0.1, 1.3, 4.0})
        CHECK(normal_cdf(-x) + normal_cdf(x) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("normal quantile against reference values") {
    // scipy.stats.norm.ppf
    CHECK(std::fabs(inverse_normal_cdf(0.5)) < 1e-9);
    CHECK(inverse_normal_cdf(0.025) == doctest::Approx(-1.959963984540).epsilon(1e-7));
    CHECK(inverse_normal_cdf(0.975) == doctest::Approx(1.959963984540).epsilon(1e-7));
    CHECK(inverse_normal_cdf(0.001) == doctest::Approx(-3.090232306168).epsilon(1e-7));
    CHECK(inverse_normal_cdf(0.999) == doctest::Approx(3.090232306168).epsilon(1e-7));
    CHECK(inverse_normal_cdf(1e-9) == doctest::Approx(-5.997807015008).epsilon(1e-7));
    CHECK_THROWS_AS(inverse_normal_cdf(0.0), std::invalid_argument);
    CHECK_THROWS_AS(inverse_normal_cdf(1.0), std::invalid_argument);
}

TEST_CASE("quantile and cdf invert each other") {
    for (double tau : {1e-8, 1e-4, 0.05, 0.3, 0.5, 0.77, 0.95, 0.9999}) {
        double x = inverse_normal_cdf(tau);
        CHECK(normal_cdf(x) == doctest::Approx(tau).epsilon(1e-9));
    }
}

TEST_CASE("regularized incomplete gamma against reference values") {
    // scipy.special.gammainc
    CHECK(regularized_gamma_p(0.5, 0.25) == doctest::Approx(0.520499877813047).epsilon(1e-10));
    CHECK(regularized_gamma_p(2.5, 1.0) == doctest::Approx(0.150854963915390).epsilon(1e-10));
    CHECK(regularized_gamma_p(10.0, 9.5) == doctest::Approx(0.478173977762792).epsilon(1e-10));
    for (double a : {0.5, 3.0, 40.0})
        for (double x : {0.1, 2.0, 35.0})
            CHECK(regularized_gamma_p(a, x) + regularized_gamma_q(a, x) ==
                  doctest::Approx(1.0).epsilon(1e-12));
    CHECK(regularized_gamma_p(1.0, 0.0) == 0.0);
}

TEST_CASE("chi-square critical values match the standard tables") {
    struct Row {
        double alpha;
        std::size_t dof;
        double crit;
    };
    // scipy.stats.chi2.ppf(1 - alpha, dof)
    const Row rows[] = {
        {0.10, 1, 2.7055434541},   {0.10, 10, 15.9871791721}, {0.10, 63, 77.7453848357},
        {0.05, 1, 3.8414588207},   {0.05, 2, 5.9914645471},   {0.05, 5, 11.0704976935},
        {0.05, 17, 27.5871116383}, {0.05, 120, 146.5673575808},
        {0.01, 1, 6.6348966010},   {0.01, 10, 23.2092511590}, {0.01, 31, 52.1913948332},
        {0.01, 63, 92.0100236141}, {0.001, 5, 20.5150056524}, {0.001, 120, 173.6174364562},
    };
    for (const Row& r : rows) {
        INFO("alpha ", r.alpha, " dof ", r.dof);
        double c = chi_square_critical(r.alpha, r.dof);
        CHECK(c == doctest::Approx(r.crit).epsilon(1e-7));
        // the defining residual: upper tail mass at the critical value is alpha
        CHECK(regularized_gamma_q(static_cast<double>(r.dof) / 2.0, c / 2.0) ==
              doctest::Approx(r.alpha).epsilon(1e-8));
    }
}

TEST_CASE("confidence interval uses the 1.96 normal half-width") {
    MeanCi ci = confidence_interval_95({1.0, 2.0, 3.0, 4.0});
    CHECK(ci.mean == doctest::Approx(2.5));
    // sample sd sqrt(5/3), half width 1.96 * sd / 2
    CHECK(ci.half_width == doctest::Approx(1.96 * std::sqrt(5.0 / 3.0) / 2.0).epsilon(1e-12));

    MeanCi tight = confidence_interval_95(std::vector<double>(10, 3.25));
    CHECK(tight.mean == doctest::Approx(3.25));
    CHECK(tight.half_width == doctest::Approx(0.0));

    CHECK_THROWS_AS(confidence_interval_95({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(confidence_interval_95({}), std::invalid_argument);
}
