#pragma once

#include <cstddef>
#include <vector>

namespace uncertts {

// Standard normal CDF.
double normal_cdf(double x);

// Standard normal quantile, absolute error well below 1e-6 on (0,1).
// Throws std::invalid_argument outside (0,1).
double inverse_normal_cdf(double tau);

// Regularized incomplete gamma P(a,x) and its complement Q(a,x) = 1 - P(a,x).
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

// Upper-tail chi-square critical value: x with Q(dof/2, x/2) = alpha.
double chi_square_critical(double alpha, std::size_t dof);

struct MeanCi {
    double mean = 0.0;
    double half_width = 0.0;
};

// mean +- 1.96 * s/sqrt(n), sample std with n-1 divisor. Needs >= 2 samples.
MeanCi confidence_interval_95(const std::vector<double>& samples);

}  // namespace uncertts
