#include "uncertts/queries.hpp"

#include <stdexcept>

#include "uncertts/lp.hpp"
#include "uncertts/munich.hpp"
#include "uncertts/proud.hpp"
#include "uncertts/stats.hpp"

namespace uncertts {

const char* technique_name(Technique t) {
    switch (t) {
        case Technique::Euclid: return "euclid";
        case Technique::Munich: return "munich";
        case Technique::Proud: return "proud";
        case Technique::Dust: return "dust";
        case Technique::Uma: return "uma";
        case Technique::Uema: return "uema";
    }
    throw std::logic_error("unreachable technique");
}

Technique technique_from_name(const std::string& name) {
    if (name == "euclid" || name == "euclidean") return Technique::Euclid;
    if (name == "munich") return Technique::Munich;
    if (name == "proud") return Technique::Proud;
    if (name == "dust") return Technique::Dust;
    if (name == "uma") return Technique::Uma;
    if (name == "uema") return Technique::Uema;
    throw std::invalid_argument("unknown technique: " + name);
}

void QuerySpec::validate() const {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    const bool probabilistic = technique == Technique::Munich || technique == Technique::Proud;
    if (probabilistic && !(tau > 0.0 && tau < 1.0))
        throw std::invalid_argument("tau must lie in (0,1) for MUNICH/PROUD");
    if (p <= 0) throw std::invalid_argument("p must be a positive integer");
    if (bins < 16) throw std::invalid_argument("bins must be >= 16");
    if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be >= 0");
}

std::vector<std::size_t> ground_truth(const TimeSeries& q, const std::vector<TimeSeries>& pool,
                                      const std::vector<std::size_t>& ids) {
    if (ids.size() < kGroundTruthK)
        throw std::invalid_argument("ground truth needs at least 10 candidates");
    return knn_ids(ids, kGroundTruthK,
                   [&](std::size_t id) { return euclidean(q.values, pool[id].values); });
}

Calibration calibrate_thresholds(const ProbabilisticSeries& q,
                                 const std::vector<ProbabilisticSeries>& pool,
                                 const std::vector<std::size_t>& ids,
                                 const DustTableSet& tables) {
    if (ids.size() < kGroundTruthK)
        throw std::invalid_argument("calibration needs at least 10 candidates");
    const auto nn = knn_ids(ids, kGroundTruthK, [&](std::size_t id) {
        return euclidean(q.observations, pool[id].observations);
    });
    Calibration cal;
    cal.c_index = nn.back();
    cal.eps_eucl = euclidean(q.observations, pool[cal.c_index].observations);
    cal.eps_dust = dust(q, pool[cal.c_index], tables);
    return cal;
}

double munich_probability(const MultiObservationSeries& q, const MultiObservationSeries& y,
                          const QuerySpec& spec) {
    const MunichBounds b = munich_bounds(q, y, spec.p);
    if (b.upper <= spec.eps) return 1.0;
    if (b.lower > spec.eps) return 0.0;

    double combos = 1.0;
    for (std::size_t i = 0; i < q.size(); ++i)
        combos *= static_cast<double>(q.samples[i].size()) * static_cast<double>(y.samples[i].size());
    if (combos <= spec.exact_cap)
        return munich_probability_exact(q, y, spec.eps, spec.p, spec.exact_cap);
    return munich_probability_dp(q, y, spec.eps, spec.p, spec.bins).midpoint();
}

std::vector<std::size_t> probabilistic_range_query(const MultiObservationSeries& q,
                                                   const std::vector<MultiObservationSeries>& pool,
                                                   const std::vector<std::size_t>& ids,
                                                   const QuerySpec& spec) {
    if (spec.technique != Technique::Munich)
        throw std::invalid_argument("spec technique must be munich for sampled series");
    spec.validate();
    std::vector<std::size_t> out;
    for (std::size_t id : ids)
        if (munich_probability(q, pool[id], spec) >= spec.tau) out.push_back(id);
    return out;
}

std::vector<std::size_t> probabilistic_range_query(const ProbabilisticSeries& q,
                                                   const std::vector<ProbabilisticSeries>& pool,
                                                   const std::vector<std::size_t>& ids,
                                                   const QuerySpec& spec) {
    if (spec.technique != Technique::Proud)
        throw std::invalid_argument("spec technique must be proud for probabilistic series");
    spec.validate();
    std::vector<std::size_t> out;
    for (std::size_t id : ids)
        if (proud_accepts(q, pool[id], spec.eps, spec.tau).accept) out.push_back(id);
    return out;
}

}  // namespace uncertts
