#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "uncertts/series.hpp"

using namespace uncertts;

TEST_CASE("time series construction validates") {
    CHECK_THROWS_AS(TimeSeries(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(TimeSeries({1.0, std::nan(""), 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(TimeSeries({1.0, INFINITY}), std::invalid_argument);
    TimeSeries ts({3.0, -1.0, 4.0});
    CHECK(ts.size() == 3);
    CHECK(ts[1] == -1.0);
}

TEST_CASE("error kind names round-trip") {
    for (ErrorKind k : {ErrorKind::Uniform, ErrorKind::Normal, ErrorKind::Exponential})
        CHECK(error_kind_from_name(error_kind_name(k)) == k);
    CHECK_THROWS_AS(error_kind_from_name("laplace"), std::invalid_argument);
}

TEST_CASE("error model requires positive finite std") {
    CHECK_THROWS_AS(ErrorModel(ErrorKind::Normal, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ErrorModel(ErrorKind::Normal, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(ErrorModel(ErrorKind::Normal, INFINITY), std::invalid_argument);
    ErrorModel m(ErrorKind::Uniform, 0.5);
    CHECK(m.std == 0.5);
}

TEST_CASE("probabilistic series invariants") {
    std::vector<ErrorModel> errs{{ErrorKind::Normal, 1.0}, {ErrorKind::Uniform, 0.2}};
    auto ps = ProbabilisticSeries::from_models({1.0, 2.0}, errs);
    CHECK(ps.size() == 2);
    CHECK(ps.kinds[1] == ErrorKind::Uniform);
    CHECK(ps.stds[0] == 1.0);

    CHECK_THROWS_AS(ProbabilisticSeries::from_models({1.0}, errs), std::invalid_argument);

    ProbabilisticSeries bad = ps;
    bad.stds[0] = -0.5;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = ps;
    bad.kinds.pop_back();
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = ps;
    bad.observations[1] = std::nan("");
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("certain series carries zero stds") {
    TimeSeries ts({1.0, 2.0, 3.0});
    auto ps = ProbabilisticSeries::certain(ts);
    CHECK(ps.observations == ts.values);
    for (double s : ps.stds) CHECK(s == 0.0);
    ps.validate();  // std 0 allowed here
}

TEST_CASE("multi-observation series validates per-timestamp samples") {
    MultiObservationSeries m;
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);
    m.samples = {{1.0, 2.0}, {}};
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);
    m.samples = {{1.0, 2.0}, {3.0}};
    m.validate();  // ragged sample counts are fine
    CHECK(m.size() == 2);
}

TEST_CASE("dataset validation") {
    Dataset ds;
    ds.name = "d";
    ds.series = {TimeSeries({1.0, 2.0}), TimeSeries({3.0, 4.0})};
    ds.validate();
    CHECK(ds.length() == 2);

    ds.labels = {1.0};
    CHECK_THROWS_AS(ds.validate(), std::invalid_argument);
    ds.labels = {1.0, 2.0};
    ds.validate();

    ds.series.push_back(TimeSeries({1.0, 2.0, 3.0}));
    ds.labels.push_back(3.0);
    CHECK_THROWS_AS(ds.validate(), std::invalid_argument);
}

TEST_CASE("z-normalization yields zero mean and unit population variance") {
    TimeSeries ts({2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0});
    auto z = z_normalize(ts);
    double mean = 0.0, var = 0.0;
    for (double v : z.values) mean += v;
    mean /= static_cast<double>(z.size());
    for (double v : z.values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(z.size());
    CHECK(std::fabs(mean) < 1e-12);
    CHECK(std::fabs(var - 1.0) < 1e-12);
    // this example has integer mean 5 and population sd 2, so values are exact
    CHECK(z.values[0] == -1.5);
    CHECK(z.values[7] == 2.0);
}

TEST_CASE("z-normalization is affine invariant") {
    TimeSeries ts({0.3, -1.2, 2.5, 0.9, -0.4});
    auto z1 = z_normalize(ts);
    std::vector<double> scaled;
    for (double v : ts.values) scaled.push_back(3.7 * v - 11.0);
    auto z2 = z_normalize(TimeSeries(scaled));
    for (std::size_t i = 0; i < z1.size(); ++i)
        CHECK(z1[i] == doctest::Approx(z2[i]).epsilon(1e-12));
}

TEST_CASE("constant series normalize to zeros") {
    auto z = z_normalize(TimeSeries({4.2, 4.2, 4.2}));
    for (double v : z.values) CHECK(v == 0.0);
    CHECK_THROWS_AS(z_normalize(TimeSeries({1.0})), std::invalid_argument);
}

TEST_CASE("resample endpoints and identity") {
    TimeSeries ts({1.0, 5.0, 2.0, 8.0});
    auto same = resample(ts, 4);
    CHECK(same.values == ts.values);

    auto up = resample(ts, 7);
    CHECK(up[0] == 1.0);
    CHECK(up[6] == 8.0);

    auto two = resample(TimeSeries({10.0, 20.0}), 3);
    CHECK(two[0] == 10.0);
    CHECK(two[1] == doctest::Approx(15.0));
    CHECK(two[2] == 20.0);
}

TEST_CASE("resampling a linear ramp stays linear") {
    std::vector<double> ramp(11);
    for (std::size_t i = 0; i < ramp.size(); ++i) ramp[i] = 2.0 * static_cast<double>(i) - 3.0;
    for (std::size_t m : {5u, 23u, 101u}) {
        auto r = resample(TimeSeries(ramp), m);
        for (std::size_t k = 0; k < m; ++k) {
            double pos = static_cast<double>(k) * 10.0 / static_cast<double>(m - 1);
            CHECK(r[k] == doctest::Approx(2.0 * pos - 3.0).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(resample(TimeSeries({1.0, 2.0}), 1), std::invalid_argument);
}
