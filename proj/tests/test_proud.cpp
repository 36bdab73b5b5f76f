#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "uncertts/perturb.hpp"
#include "uncertts/proud.hpp"
#include "uncertts/rng.hpp"
#include "uncertts/stats.hpp"

using namespace uncertts;

namespace {

ProbabilisticSeries random_series(Rng& rng, std::size_t n, double spread, double max_std) {
    std::vector<double> obs(n);
    std::vector<ErrorModel> errs;
    for (double& v : obs) v = spread * (rng.uniform01() - 0.5);
    for (std::size_t i = 0; i < n; ++i)
        errs.emplace_back(ErrorKind::Normal, 0.05 + max_std * rng.uniform01());
    return ProbabilisticSeries::from_models(std::move(obs), errs);
}

}  // namespace

TEST_CASE("distance moments match Monte Carlo") {
    Rng rng(31);
    for (int trial = 0; trial < 4; ++trial) {
        auto q = random_series(rng, 12, 3.0, 0.8);
        auto y = random_series(rng, 12, 3.0, 0.8);
        ProudMoments m = proud_distance_moments(q, y);

        // simulate the squared-distance statistic directly
        Rng sim(1000 + trial);
        const int draws = 400000;
        double sum = 0.0, sq = 0.0;
        for (int d = 0; d < draws; ++d) {
            double stat = 0.0;
            for (std::size_t i = 0; i < q.size(); ++i) {
                double mu = q.observations[i] - y.observations[i];
                double s = std::sqrt(q.stds[i] * q.stds[i] + y.stds[i] * y.stds[i]);
                double di = mu + s * sim.normal();
                stat += di * di;
            }
            sum += stat;
            sq += (stat - m.mean) * (stat - m.mean);
        }
        double mc_mean = sum / draws;
        double mc_var = sq / draws - (mc_mean - m.mean) * (mc_mean - m.mean);
        CHECK(mc_mean == doctest::Approx(m.mean).epsilon(0.01));
        CHECK(mc_var == doctest::Approx(m.variance).epsilon(0.03));
    }
}

TEST_CASE("acceptance is the margin-quantile comparison") {
    Rng rng(32);
    auto q = random_series(rng, 20, 2.0, 0.5);
    auto y = random_series(rng, 20, 2.0, 0.5);
    for (double eps : {0.5, 2.0, 5.0, 9.0}) {
        double margin = proud_margin(q, y, eps);
        for (double tau : {0.05, 0.5, 0.9, 0.99}) {
            ProudDecision d = proud_accepts(q, y, eps, tau);
            CHECK(d.accept == (margin >= inverse_normal_cdf(tau)));
            CHECK(d.eps_norm == doctest::Approx(margin));
            CHECK(d.score == doctest::Approx(normal_cdf(margin)));
        }
    }
}

TEST_CASE("margin grows with eps and shrinks with separation") {
    Rng rng(33);
    auto q = random_series(rng, 16, 2.0, 0.5);
    auto y = random_series(rng, 16, 2.0, 0.5);
    double prev = proud_margin(q, y, 0.5);
    for (double eps : {1.0, 2.0, 4.0, 8.0}) {
        double cur = proud_margin(q, y, eps);
        CHECK(cur > prev);
        prev = cur;
    }

    // push y away from q: margins must fall
    auto far = y;
    prev = proud_margin(q, far, 3.0);
    for (int step = 0; step < 4; ++step) {
        for (double& v : far.observations) v += 1.5;
        double cur = proud_margin(q, far, 3.0);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("certain series fall back to the euclidean comparison") {
    TimeSeries a({1.0, 2.0, 3.0}), b({1.0, 2.5, 3.0});
    auto q = ProbabilisticSeries::certain(a);
    auto y = ProbabilisticSeries::certain(b);
    // distance is 0.5
    ProudDecision in = proud_accepts(q, y, 0.6, 0.99);
    CHECK(in.accept);
    CHECK(in.eps_norm == std::numeric_limits<double>::infinity());
    CHECK(in.score == 1.0);
    ProudDecision out = proud_accepts(q, y, 0.4, 0.01);
    CHECK(!out.accept);
    CHECK(out.eps_norm == -std::numeric_limits<double>::infinity());
    CHECK(out.score == 0.0);
}

TEST_CASE("assumed-std margin matches the schedule-aware one when they coincide") {
    Rng rng(34);
    std::vector<double> qo(10), yo(10);
    for (double& v : qo) v = rng.uniform(-2.0, 2.0);
    for (double& v : yo) v = rng.uniform(-2.0, 2.0);
    const double s = 0.7;
    std::vector<ErrorModel> errs(10, ErrorModel(ErrorKind::Normal, s));
    auto q = ProbabilisticSeries::from_models(std::vector<double>(qo), errs);
    auto y = ProbabilisticSeries::from_models(std::vector<double>(yo), errs);
    for (double eps : {1.0, 3.0}) {
        CHECK(proud_margin_assumed(qo, yo, eps, s) ==
              doctest::Approx(proud_margin(q, y, eps)).epsilon(1e-12));
    }
}

TEST_CASE("argument validation") {
    TimeSeries a({1.0, 2.0});
    auto q = ProbabilisticSeries::certain(a);
    CHECK_THROWS_AS(proud_accepts(q, q, 0.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(proud_accepts(q, q, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(proud_accepts(q, q, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(proud_margin_assumed({1.0}, {1.0}, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(proud_margin_assumed({1.0}, {1.0, 2.0}, 1.0, 0.5), std::invalid_argument);
    auto longer = ProbabilisticSeries::certain(TimeSeries({1.0, 2.0, 3.0}));
    CHECK_THROWS_AS(proud_distance_moments(q, longer), std::invalid_argument);
}

TEST_CASE("mixed-noise observations keep decisions calibrated") {
    // end to end: perturb a pair, then check the accept probability by
    // re-simulating the true distance distribution
    TimeSeries base(std::vector<double>(40, 0.0));
    TimeSeries other(std::vector<double>(40, 0.35));
    PerturbationSpec spec;
    spec.mixed = true;
    spec.fraction_high = 0.3;
    spec.std_high = 0.9;
    spec.std_low = 0.2;
    spec.seed = 12;
    auto q = perturb(base, spec);
    spec.seed = 13;
    auto y = perturb(other, spec);

    ProudMoments m = proud_distance_moments(q, y);
    double eps = std::sqrt(m.mean + 0.8 * std::sqrt(m.variance));
    double margin = proud_margin(q, y, eps);
    CHECK(margin == doctest::Approx(0.8).epsilon(1e-9));
    CHECK(proud_accepts(q, y, eps, 0.70).accept);       // Phi^-1(0.70) ~ 0.524
    CHECK(!proud_accepts(q, y, eps, 0.80).accept);      // Phi^-1(0.80) ~ 0.842
}
