#include "uncertts/proud.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "uncertts/stats.hpp"

namespace uncertts {

ProudMoments proud_distance_moments(const ProbabilisticSeries& q, const ProbabilisticSeries& y) {
    q.validate();
    y.validate();
    if (q.size() != y.size())
        throw std::invalid_argument("proud needs equal-length series");

    ProudMoments m;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const double mu = q.observations[i] - y.observations[i];
        const double s2 = q.stds[i] * q.stds[i] + y.stds[i] * y.stds[i];
        // D_i ~ N(mu, s2): E[D^2] = mu^2 + s2, Var[D^2] = 2 s2^2 + 4 mu^2 s2
        m.mean += mu * mu + s2;
        m.variance += 2.0 * s2 * s2 + 4.0 * mu * mu * s2;
    }
    return m;
}

namespace {

ProudDecision decide(const ProudMoments& m, double eps, double tau) {
    ProudDecision d;
    if (m.variance <= 0.0) {
        // certain data: the distance is just the Euclidean one
        d.accept = m.mean <= eps * eps;
        d.eps_norm = d.accept ? std::numeric_limits<double>::infinity()
                              : -std::numeric_limits<double>::infinity();
        d.score = d.accept ? 1.0 : 0.0;
        return d;
    }
    d.eps_norm = (eps * eps - m.mean) / std::sqrt(m.variance);
    d.accept = d.eps_norm >= inverse_normal_cdf(tau);
    d.score = normal_cdf(d.eps_norm);
    return d;
}

}  // namespace

ProudDecision proud_accepts(const ProbabilisticSeries& q, const ProbabilisticSeries& y,
                            double eps, double tau) {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("tau must lie in (0,1)");
    return decide(proud_distance_moments(q, y), eps, tau);
}

double proud_margin(const ProbabilisticSeries& q, const ProbabilisticSeries& y, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    return decide(proud_distance_moments(q, y), eps, 0.5).eps_norm;
}

double proud_margin_assumed(const std::vector<double>& q_obs, const std::vector<double>& y_obs,
                            double eps, double assumed_std) {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    if (!(assumed_std > 0.0)) throw std::invalid_argument("assumed std must be positive");
    if (q_obs.size() != y_obs.size())
        throw std::invalid_argument("proud needs equal-length series");
    const double s2 = 2.0 * assumed_std * assumed_std;
    ProudMoments m;
    for (std::size_t i = 0; i < q_obs.size(); ++i) {
        const double mu = q_obs[i] - y_obs[i];
        m.mean += mu * mu + s2;
        m.variance += 2.0 * s2 * s2 + 4.0 * mu * mu * s2;
    }
    return decide(m, eps, 0.5).eps_norm;
}

}  // namespace uncertts
