#pragma once

#include <cstddef>
#include <cstdint>

#include "uncertts/series.hpp"

namespace uncertts {

// Lp-distance bounds over every materialization, from per-timestamp minimal
// bounding intervals of the samples.
struct MunichBounds {
    double lower = 0.0;
    double upper = 0.0;
};

struct MunichEnclosure {
    double lower_p = 0.0;   // certified lower bound on the probability
    double upper_p = 1.0;   // certified upper bound
    double midpoint() const { return 0.5 * (lower_p + upper_p); }
};

// Share of materializations within eps, by exhaustive enumeration over all
// per-timestamp sample combinations. Throws when the combination count
// exceeds max_combinations.
double munich_probability_exact(const MultiObservationSeries& X, const MultiObservationSeries& Y,
                                double eps, int p, double max_combinations = 1e8);

// Scalable path: per-timestamp |v-w|^p multisets quantized onto a shared grid
// of `bins` cells over [0, eps^p], convolved across timestamps. Floor and
// ceiling quantization yield a certified [lower_p, upper_p] enclosure of the
// exact materialization count ratio.
MunichEnclosure munich_probability_dp(const MultiObservationSeries& X,
                                      const MultiObservationSeries& Y, double eps, int p,
                                      std::size_t bins);

MunichBounds munich_bounds(const MultiObservationSeries& X, const MultiObservationSeries& Y,
                           int p);

}  // namespace uncertts
