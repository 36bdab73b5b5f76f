#pragma once

#include <cstdint>
#include <vector>

#include "uncertts/rng.hpp"
#include "uncertts/series.hpp"

namespace uncertts {

// Recipe for turning an exact series into an uncertain one. Either every
// timestamp shares one std (set `std` and leave fraction_high at 0), or a
// mixed schedule assigns std_high to round(fraction_high*n) seeded-random
// positions and std_low elsewhere. mix_kinds, when non-empty, additionally
// randomizes the error kind per timestamp over the listed kinds.
struct PerturbationSpec {
    ErrorKind kind = ErrorKind::Normal;
    double std = 1.0;

    bool mixed = false;
    double fraction_high = 0.0;
    double std_high = 1.0;
    double std_low = 1.0;

    std::vector<ErrorKind> mix_kinds;
    std::uint64_t seed = 0;

    void validate() const;
};

// One zero-mean error draw. Uniform lives on [-std*sqrt(3), +std*sqrt(3)],
// Exponential is scale-std shifted left by std; each has mean 0, stddev std.
double draw_error(const ErrorModel& model, Rng& rng);

// Per-timestamp kinds and stds the spec resolves to for a length-n series.
// Deterministic in spec.seed; shared by perturb and perturb_multi.
void resolve_schedule(const PerturbationSpec& spec, std::size_t n,
                      std::vector<ErrorKind>& kinds, std::vector<double>& stds);

ProbabilisticSeries perturb(const TimeSeries& ts, const PerturbationSpec& spec);

// s independent draws per timestamp, same schedule as perturb(); with s=1 the
// draws are bit-identical to perturb() under the same seed.
MultiObservationSeries perturb_multi(const TimeSeries& ts, const PerturbationSpec& spec,
                                     std::size_t s);

}  // namespace uncertts
