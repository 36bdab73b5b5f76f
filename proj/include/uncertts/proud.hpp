#pragma once

#include "uncertts/series.hpp"

namespace uncertts {

// First two moments of the squared-distance statistic Sum_i D_i^2 under
// per-point normal errors.
struct ProudMoments {
    double mean = 0.0;
    double variance = 0.0;
};

struct ProudDecision {
    bool accept = false;
    double eps_norm = 0.0;  // normalized acceptance margin; +/-inf when variance is 0
    double score = 0.0;     // Phi(eps_norm): estimated Pr(dist <= eps)
};

ProudMoments proud_distance_moments(const ProbabilisticSeries& q, const ProbabilisticSeries& y);

// Accept iff the normalized threshold clears the tau-quantile of the standard
// normal. Zero total variance falls back to a deterministic comparison.
ProudDecision proud_accepts(const ProbabilisticSeries& q, const ProbabilisticSeries& y,
                            double eps, double tau);

// The normalized margin alone: acceptance at tau is margin >= Phi^-1(tau),
// so one scan's margins serve every tau in a sweep.
double proud_margin(const ProbabilisticSeries& q, const ProbabilisticSeries& y, double eps);

// Margin when PROUD is told a single constant per-point std instead of the
// true schedule (the mixed-error experiments).
double proud_margin_assumed(const std::vector<double>& q_obs, const std::vector<double>& y_obs,
                            double eps, double assumed_std);

}  // namespace uncertts
