#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "uncertts/lp.hpp"
#include "uncertts/munich.hpp"
#include "uncertts/rng.hpp"

using namespace uncertts;

namespace {

// Independent oracle: odometer over all per-timestamp sample picks, summing
// |v-w|^p in timestamp order with the same repeated-multiplication power so
// the float result is associated identically to the library's enumerator.
double brute_force_probability(const MultiObservationSeries& X, const MultiObservationSeries& Y,
                               double eps, int p) {
    const std::size_t n = X.size();
    std::vector<std::size_t> xi(n, 0), yi(n, 0);
    const double eps_pow = [&] {
        double a = std::fabs(eps), r = 1.0;
        for (int k = 0; k < p; ++k) r *= a;
        return r;
    }();
    std::uint64_t total = 0, hits = 0;
    for (;;) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double d = std::fabs(X.samples[i][xi[i]] - Y.samples[i][yi[i]]);
            double term = 1.0;
            for (int k = 0; k < p; ++k) term *= d;
            sum += term;
        }
        ++total;
        if (sum <= eps_pow) ++hits;
        // advance the mixed-radix counter (y digit fastest)
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++yi[i] < Y.samples[i].size()) break;
            yi[i] = 0;
            if (++xi[i] < X.samples[i].size()) break;
            xi[i] = 0;
        }
        if (i == n) break;
    }
    return static_cast<double>(hits) / static_cast<double>(total);
}

MultiObservationSeries random_multi(Rng& rng, std::size_t n, std::size_t max_samples,
                                    double spread) {
    MultiObservationSeries m;
    m.samples.resize(n);
    for (auto& at : m.samples) {
        std::size_t s = 1 + rng.index(max_samples);
        at.resize(s);
        for (double& v : at) v = spread * (rng.uniform01() - 0.5);
    }
    return m;
}

}  // namespace

TEST_CASE("pow_term multiplies instead of calling pow") {
    CHECK(pow_term(-3.0, 2) == 9.0);
    CHECK(pow_term(2.0, 3) == 8.0);
    CHECK(pow_term(-2.0, 1) == 2.0);
    CHECK(pow_term(7.5, 0) == 1.0);
}

TEST_CASE("lp distances against hand values") {
    std::vector<double> a{1.0, 2.0, 3.0}, b{2.0, 0.0, 3.0};
    CHECK(lp_distance(a, b, 1) == 3.0);
    CHECK(lp_distance(a, b, 2) == doctest::Approx(std::sqrt(5.0)));
    CHECK(lp_distance(a, b, 3) == doctest::Approx(std::cbrt(9.0)));
    CHECK(euclidean(a, b) == lp_distance(a, b, 2));
    CHECK_THROWS_AS(lp_distance(a, {1.0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(lp_distance(a, b, 0), std::invalid_argument);
}

TEST_CASE("exact enumeration equals the independent brute force bit-for-bit") {
    Rng rng(404);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + rng.index(4);
        int p = 1 + static_cast<int>(rng.index(3));
        auto X = random_multi(rng, n, 3, 2.0);
        auto Y = random_multi(rng, n, 3, 2.0);
        double eps = 0.1 + 2.5 * rng.uniform01();
        double lib = munich_probability_exact(X, Y, eps, p);
        double ref = brute_force_probability(X, Y, eps, p);
        REQUIRE(lib == ref);  // same hits/total integers, so exact equality
    }
}

TEST_CASE("exact enumeration refuses oversized instances") {
    Rng rng(7);
    auto X = random_multi(rng, 8, 1, 1.0);
    auto Y = random_multi(rng, 8, 1, 1.0);
    for (auto& at : X.samples) at.resize(4, at[0]);
    for (auto& at : Y.samples) at.resize(4, at[0]);
    // 16^8 combinations >> the cap
    CHECK_THROWS_AS(munich_probability_exact(X, Y, 1.0, 2, 1e6), std::runtime_error);
}

TEST_CASE("single-sample series reduce to an lp indicator") {
    std::vector<double> a{0.2, -1.0, 0.5}, b{0.0, -0.4, 0.9};
    MultiObservationSeries X, Y;
    for (double v : a) X.samples.push_back({v});
    for (double v : b) Y.samples.push_back({v});
    double d = lp_distance(a, b, 2);
    CHECK(munich_probability_exact(X, Y, d + 0.01, 2) == 1.0);
    CHECK(munich_probability_exact(X, Y, d - 0.01, 2) == 0.0);
    MunichBounds bd = munich_bounds(X, Y, 2);
    CHECK(bd.lower == doctest::Approx(d).epsilon(1e-12));
    CHECK(bd.upper == doctest::Approx(d).epsilon(1e-12));
}

TEST_CASE("quantized convolution encloses the exact probability") {
    Rng rng(505);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t n = 1 + rng.index(4);
        int p = 1 + static_cast<int>(rng.index(2));
        auto X = random_multi(rng, n, 3, 2.0);
        auto Y = random_multi(rng, n, 3, 2.0);
        double eps = 0.2 + 2.0 * rng.uniform01();
        double exact = munich_probability_exact(X, Y, eps, p);
        for (std::size_t bins : {16u, 64u, 256u}) {
            MunichEnclosure e = munich_probability_dp(X, Y, eps, p, bins);
            REQUIRE(e.lower_p <= exact + 1e-12);
            REQUIRE(e.upper_p >= exact - 1e-12);
            REQUIRE(e.lower_p <= e.upper_p);
            REQUIRE(e.midpoint() >= 0.0);
            REQUIRE(e.midpoint() <= 1.0);
        }
    }
}

TEST_CASE("doubling the grid never loosens the enclosure") {
    Rng rng(606);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + rng.index(3);
        auto X = random_multi(rng, n, 3, 2.0);
        auto Y = random_multi(rng, n, 3, 2.0);
        double eps = 0.2 + 2.0 * rng.uniform01();
        MunichEnclosure prev = munich_probability_dp(X, Y, eps, 2, 16);
        for (std::size_t bins : {32u, 64u, 128u, 256u}) {
            MunichEnclosure cur = munich_probability_dp(X, Y, eps, 2, bins);
            REQUIRE(cur.lower_p >= prev.lower_p - 1e-12);
            REQUIRE(cur.upper_p <= prev.upper_p + 1e-12);
            prev = cur;
        }
    }
}

TEST_CASE("fine grids pin the probability tightly") {
    Rng rng(707);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        auto X = random_multi(rng, 3, 3, 2.0);
        auto Y = random_multi(rng, 3, 3, 2.0);
        double eps = 0.5 + 1.5 * rng.uniform01();
        MunichEnclosure e = munich_probability_dp(X, Y, eps, 2, 8192);
        worst = std::max(worst, e.upper_p - e.lower_p);
    }
    CHECK(worst < 0.05);
}

TEST_CASE("interval bounds bracket every materialization") {
    Rng rng(808);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng.index(3);
        auto X = random_multi(rng, n, 3, 3.0);
        auto Y = random_multi(rng, n, 3, 3.0);
        MunichBounds b = munich_bounds(X, Y, 2);
        REQUIRE(b.lower <= b.upper);
        // prob is 1 at eps = upper and 0 just below lower
        CHECK(munich_probability_exact(X, Y, b.upper + 1e-9, 2) == 1.0);
        if (b.lower > 1e-9)
            CHECK(munich_probability_exact(X, Y, b.lower * (1.0 - 1e-12), 2) == 0.0);
    }
}

TEST_CASE("argument validation") {
    MultiObservationSeries X, Y;
    X.samples = {{1.0}};
    Y.samples = {{2.0}};
    CHECK_THROWS_AS(munich_probability_exact(X, Y, 0.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(munich_probability_exact(X, Y, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(munich_probability_dp(X, Y, 1.0, 2, 8), std::invalid_argument);
    MultiObservationSeries longer;
    longer.samples = {{1.0}, {2.0}};
    CHECK_THROWS_AS(munich_probability_exact(X, longer, 1.0, 2), std::invalid_argument);
}
