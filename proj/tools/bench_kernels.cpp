// Compares the serial and OpenMP scan paths on representative kernels:
// checks bitwise agreement of the score vectors, then prints a timing table.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "uncertts/datagen.hpp"
#include "uncertts/dust.hpp"
#include "uncertts/evaluation.hpp"
#include "uncertts/filters.hpp"
#include "uncertts/lp.hpp"
#include "uncertts/munich.hpp"
#include "uncertts/perturb.hpp"
#include "uncertts/proud.hpp"
#include "uncertts/queries.hpp"
#include "uncertts/rng.hpp"
#include "uncertts/scan.hpp"
#include "uncertts/series.hpp"

using namespace uncertts;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <typename Fn>
int bench_one(const char* name, const std::vector<std::size_t>& ids, Fn&& score) {
    const auto t_serial = Clock::now();
    const std::vector<double> serial = score_all(ids, score, false);
    const double serial_ms = ms_since(t_serial);

    const auto t_par = Clock::now();
    const std::vector<double> parallel = score_all(ids, score, true);
    const double par_ms = ms_since(t_par);

    const bool same = serial.size() == parallel.size() &&
                      std::memcmp(serial.data(), parallel.data(),
                                  serial.size() * sizeof(double)) == 0;
    std::printf("%-10s %10.3f ms %10.3f ms %8.2fx   %s\n", name, serial_ms, par_ms,
                par_ms > 0.0 ? serial_ms / par_ms : 0.0, same ? "bitwise-equal" : "MISMATCH");
    return same ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t count = 400, length = 256, samples = 4;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        auto next = [&](std::size_t& slot) {
            if (i + 1 >= argc) {
                std::fprintf(stderr, "missing value for %s\n", arg.c_str());
                std::exit(1);
            }
            slot = static_cast<std::size_t>(std::strtoull(argv[++i], nullptr, 10));
        };
        if (arg == "--count") next(count);
        else if (arg == "--length") next(length);
        else if (arg == "--samples") next(samples);
        else {
            std::fprintf(stderr, "usage: %s [--count N] [--length L] [--samples S]\n", argv[0]);
            return 1;
        }
    }

    const Dataset raw = generate_dataset("cbf", count, length, 11);
    const double sigma = 0.6;

    std::vector<ProbabilisticSeries> prob;
    std::vector<MultiObservationSeries> multi;
    for (std::size_t i = 0; i < raw.series.size(); ++i) {
        const TimeSeries ts = z_normalize(raw.series[i]);
        PerturbationSpec spec;
        spec.kind = ErrorKind::Normal;
        spec.std = sigma;
        spec.seed = derive_seed(11, {hash_str(raw.name), 0, i, 1});
        prob.push_back(perturb(ts, spec));
        spec.seed = derive_seed(11, {hash_str(raw.name), 0, i, 2});
        multi.push_back(perturb_multi(ts, spec, samples));
    }

    std::vector<std::size_t> ids;
    for (std::size_t i = 1; i < prob.size(); ++i) ids.push_back(i);

    DustTableSet tables(0.0, 0.0);
    tables.ensure(ErrorModel{ErrorKind::Normal, sigma}, ErrorModel{ErrorKind::Normal, sigma});

    QuerySpec mspec;
    mspec.technique = Technique::Munich;
    mspec.eps = euclidean(prob[0].observations, prob[1].observations);
    mspec.tau = 0.5;
    mspec.bins = 128;
    mspec.exact_cap = 4096;  // keep the DP path hot instead of enumeration

    std::printf("series=%zu length=%zu samples=%zu threads=%d\n", prob.size(), length, samples,
                scan_thread_count());
    std::printf("%-10s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    int rc = 0;
    rc |= bench_one("euclid", ids, [&](std::size_t id) {
        return euclidean(prob[0].observations, prob[id].observations);
    });
    rc |= bench_one("proud", ids, [&](std::size_t id) {
        return proud_margin(prob[0], prob[id], mspec.eps);
    });
    rc |= bench_one("dust", ids,
                    [&](std::size_t id) { return dust(prob[0], prob[id], tables); });
    rc |= bench_one("uma", ids, [&](std::size_t id) {
        return euclidean(uma_filter(prob[0], 2, false), uma_filter(prob[id], 2, false));
    });
    rc |= bench_one("uema", ids, [&](std::size_t id) {
        return euclidean(uema_filter(prob[0], 2, 1.0, false),
                         uema_filter(prob[id], 2, 1.0, false));
    });
    rc |= bench_one("munich", ids, [&](std::size_t id) {
        return munich_probability(multi[0], multi[id], mspec);
    });
    return rc;
}
