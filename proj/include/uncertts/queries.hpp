#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "uncertts/dust.hpp"
#include "uncertts/series.hpp"

namespace uncertts {

enum class Technique { Euclid, Munich, Proud, Dust, Uma, Uema };

const char* technique_name(Technique t);
Technique technique_from_name(const std::string& name);

// The paper's similarity-search setup retrieves standard 10-NN ground truth.
inline constexpr std::size_t kGroundTruthK = 10;

struct QuerySpec {
    Technique technique = Technique::Euclid;
    double eps = 1.0;
    double tau = 0.5;          // MUNICH/PROUD only
    int p = 2;                 // MUNICH Lp exponent
    std::size_t bins = 256;    // MUNICH convolution grid
    double exact_cap = 65536;  // switch to the convolution above this many combinations
    std::size_t w = 2;         // filter window half-width
    double lambda = 1.0;       // filter decay
    bool normalized_filters = false;

    void validate() const;
};

// Candidate ids with dist(id) <= eps, in id order.
template <typename DistFn>
std::vector<std::size_t> range_ids(const std::vector<std::size_t>& ids, double eps,
                                   DistFn&& dist) {
    std::vector<std::size_t> out;
    for (std::size_t id : ids)
        if (dist(id) <= eps) out.push_back(id);
    return out;
}

// k candidate ids ascending by (distance, id); the id tiebreak keeps results
// bit-reproducible.
template <typename DistFn>
std::vector<std::size_t> knn_ids(const std::vector<std::size_t>& ids, std::size_t k,
                                 DistFn&& dist) {
    if (k > ids.size()) throw std::invalid_argument("k exceeds candidate count");
    std::vector<std::pair<double, std::size_t>> scored;
    scored.reserve(ids.size());
    for (std::size_t id : ids) scored.emplace_back(dist(id), id);
    std::sort(scored.begin(), scored.end());
    std::vector<std::size_t> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = scored[i].second;
    return out;
}

// 10 nearest ids to the exact query among the exact pool members listed in
// `ids`, Euclidean, ties by id.
std::vector<std::size_t> ground_truth(const TimeSeries& q, const std::vector<TimeSeries>& pool,
                                      const std::vector<std::size_t>& ids);

// Threshold equivalence: both epsilons describe the same 10th-nearest
// neighbor c of the query, each in its technique's native units.
struct Calibration {
    std::size_t c_index = 0;
    double eps_eucl = 0.0;
    double eps_dust = 0.0;
};

Calibration calibrate_thresholds(const ProbabilisticSeries& q,
                                 const std::vector<ProbabilisticSeries>& pool,
                                 const std::vector<std::size_t>& ids,
                                 const DustTableSet& tables);

// Per-candidate MUNICH probability Pr(dist <= eps): bounding-interval
// prefilter first, then exhaustive enumeration when the combination count
// allows it, quantized-convolution midpoint otherwise.
double munich_probability(const MultiObservationSeries& q, const MultiObservationSeries& y,
                          const QuerySpec& spec);

// Candidates with munich_probability >= tau, in id order.
std::vector<std::size_t> probabilistic_range_query(const MultiObservationSeries& q,
                                                   const std::vector<MultiObservationSeries>& pool,
                                                   const std::vector<std::size_t>& ids,
                                                   const QuerySpec& spec);

// Candidates accepted by PROUD at (eps, tau), in id order.
std::vector<std::size_t> probabilistic_range_query(const ProbabilisticSeries& q,
                                                   const std::vector<ProbabilisticSeries>& pool,
                                                   const std::vector<std::size_t>& ids,
                                                   const QuerySpec& spec);

}  // namespace uncertts
