#include "uncertts/munich.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "uncertts/lp.hpp"

namespace uncertts {

namespace {

void check_pair(const MultiObservationSeries& X, const MultiObservationSeries& Y, int p) {
    if (p <= 0) throw std::invalid_argument("p must be a positive integer");
    X.validate();
    Y.validate();
    if (X.size() != Y.size())
        throw std::invalid_argument("munich needs equal-length series");
    if (X.size() == 0) throw std::invalid_argument("munich needs non-empty series");
}

double root_of_sum(double s, int p) {
    if (p == 1) return s;
    if (p == 2) return std::sqrt(s);
    return std::pow(s, 1.0 / static_cast<double>(p));
}

// Leaf-counting DFS. Partial sums accumulate in timestamp order so the result
// is bit-identical to any enumerator using the same association.
void enumerate(const MultiObservationSeries& X, const MultiObservationSeries& Y, int p,
               std::size_t i, double partial, double eps_pow, std::uint64_t& total,
               std::uint64_t& hits) {
    if (i == X.size()) {
        ++total;
        if (partial <= eps_pow) ++hits;
        return;
    }
    for (double v : X.samples[i])
        for (double w : Y.samples[i])
            enumerate(X, Y, p, i + 1, partial + pow_term(v - w, p), eps_pow, total, hits);
}

}  // namespace

double munich_probability_exact(const MultiObservationSeries& X, const MultiObservationSeries& Y,
                                double eps, int p, double max_combinations) {
    check_pair(X, Y, p);
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");

    double combos = 1.0;
    for (std::size_t i = 0; i < X.size(); ++i) {
        combos *= static_cast<double>(X.samples[i].size()) *
                  static_cast<double>(Y.samples[i].size());
        if (combos > max_combinations)
            throw std::runtime_error("instance too large for exact enumeration");
    }

    std::uint64_t total = 0, hits = 0;
    enumerate(X, Y, p, 0, 0.0, pow_term(eps, p), total, hits);
    return static_cast<double>(hits) / static_cast<double>(total);
}

namespace {

// Largest m with m*h <= t under double arithmetic (monotone in t), capped at
// `cap`. The guess-then-adjust loop pins down the canonical index even when
// t/h misrounds.
std::size_t floor_index(double t, double h, std::size_t cap) {
    double g = t / h;
    std::size_t m = g >= static_cast<double>(cap) ? cap : (g <= 0.0 ? 0 : static_cast<std::size_t>(g));
    while (m > 0 && static_cast<double>(m) * h > t) --m;
    while (m < cap && static_cast<double>(m + 1) * h <= t) ++m;
    return m;
}

// Smallest c with c*h >= t, capped at `cap`.
std::size_t ceil_index(double t, double h, std::size_t cap) {
    double g = t / h;
    std::size_t c = g >= static_cast<double>(cap) ? cap : (g <= 0.0 ? 0 : static_cast<std::size_t>(g));
    while (c < cap && static_cast<double>(c) * h < t) ++c;
    while (c > 0 && static_cast<double>(c - 1) * h >= t) --c;
    return c;
}

}  // namespace

MunichEnclosure munich_probability_dp(const MultiObservationSeries& X,
                                      const MultiObservationSeries& Y, double eps, int p,
                                      std::size_t bins) {
    check_pair(X, Y, p);
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    if (bins < 16) throw std::invalid_argument("bins must be >= 16");

    const double eps_pow = pow_term(eps, p);
    const double h = eps_pow / static_cast<double>(bins);
    const std::size_t cap = bins + 1;  // sentinel: already past eps^p on its own
    const std::size_t n = X.size();

    // dist_*[s] = probability that the (quantized) index sum equals s, with
    // everything >= cap saturated into the cap cell.
    std::vector<double> dist_lo(cap + 1, 0.0), dist_hi(cap + 1, 0.0);
    dist_lo[0] = dist_hi[0] = 1.0;
    std::vector<double> w_floor(cap + 1), w_ceil(cap + 1);
    std::vector<double> next(cap + 1);

    for (std::size_t i = 0; i < n; ++i) {
        std::fill(w_floor.begin(), w_floor.end(), 0.0);
        std::fill(w_ceil.begin(), w_ceil.end(), 0.0);
        const double inv =
            1.0 / (static_cast<double>(X.samples[i].size()) * static_cast<double>(Y.samples[i].size()));
        for (double v : X.samples[i]) {
            for (double w : Y.samples[i]) {
                const double t = pow_term(v - w, p);
                w_floor[floor_index(t, h, cap)] += inv;
                w_ceil[ceil_index(t, h, cap)] += inv;
            }
        }

        auto convolve = [&](std::vector<double>& dist, const std::vector<double>& weight) {
            std::fill(next.begin(), next.end(), 0.0);
            for (std::size_t s = 0; s <= cap; ++s) {
                if (dist[s] == 0.0) continue;
                for (std::size_t m = 0; m <= cap; ++m) {
                    if (weight[m] == 0.0) continue;
                    next[std::min(s + m, cap)] += dist[s] * weight[m];
                }
            }
            dist.swap(next);
        };
        convolve(dist_hi, w_floor);  // floor quantization under-counts mass -> upper prob
        convolve(dist_lo, w_ceil);
    }

    MunichEnclosure out;
    double lo = 0.0, hi = 0.0;
    for (std::size_t s = 0; s <= bins; ++s) {
        lo += dist_lo[s];
        hi += dist_hi[s];
    }
    out.lower_p = std::clamp(lo, 0.0, 1.0);
    out.upper_p = std::clamp(hi, 0.0, 1.0);
    if (out.lower_p > out.upper_p) out.lower_p = out.upper_p;
    return out;
}

MunichBounds munich_bounds(const MultiObservationSeries& X, const MultiObservationSeries& Y,
                           int p) {
    check_pair(X, Y, p);
    double lo_sum = 0.0, hi_sum = 0.0;
    for (std::size_t i = 0; i < X.size(); ++i) {
        const auto [lx_it, ux_it] = std::minmax_element(X.samples[i].begin(), X.samples[i].end());
        const auto [ly_it, uy_it] = std::minmax_element(Y.samples[i].begin(), Y.samples[i].end());
        const double lx = *lx_it, ux = *ux_it, ly = *ly_it, uy = *uy_it;
        const double gap = std::max(lx - uy, ly - ux);          // interval separation
        const double lower_i = gap > 0.0 ? gap : 0.0;
        const double upper_i = std::max(ux - ly, uy - lx);      // farthest corner pair
        lo_sum += pow_term(lower_i, p);
        hi_sum += pow_term(upper_i, p);
    }
    return {root_of_sum(lo_sum, p), root_of_sum(hi_sum, p)};
}

}  // namespace uncertts
