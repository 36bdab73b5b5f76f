#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "uncertts/rng.hpp"
#include "uncertts/scan.hpp"

using namespace uncertts;

TEST_CASE("parallel and serial scans produce bitwise identical results") {
    Rng rng(77);
    std::vector<double> base(4000);
    for (double& v : base) v = rng.uniform(-5.0, 5.0);
    std::vector<std::size_t> ids(base.size());
    std::iota(ids.begin(), ids.end(), std::size_t{0});

    // a float-heavy score where evaluation order differences would show
    auto score = [&](std::size_t id) {
        double acc = 0.0;
        for (int k = 1; k <= 20; ++k)
            acc += std::sin(base[id] * k) / (std::sqrt(static_cast<double>(k)) + std::cos(acc));
        return acc;
    };

    auto serial = score_all(ids, score, false);
    auto parallel = score_all(ids, score, true);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) REQUIRE(serial[i] == parallel[i]);
}

TEST_CASE("scans preserve id mapping under shuffled id lists") {
    std::vector<std::size_t> ids{9, 3, 7, 1};
    auto out = score_all(ids, [](std::size_t id) { return static_cast<double>(id) * 2.0; });
    CHECK(out == std::vector<double>{18.0, 6.0, 14.0, 2.0});
    CHECK(score_all({}, [](std::size_t) { return 1.0; }).empty());
}

TEST_CASE("thread cap honours the environment override") {
    setenv("UNCERTTS_THREADS", "3", 1);
#ifdef _OPENMP
    CHECK(scan_thread_count() == 3);
#else
    CHECK(scan_thread_count() == 1);
#endif
    setenv("UNCERTTS_THREADS", "bogus", 1);
    CHECK(scan_thread_count() >= 1);  // falls back to the library default
    unsetenv("UNCERTTS_THREADS");
    CHECK(scan_thread_count() >= 1);
}
