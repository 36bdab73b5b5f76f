#include "uncertts/perturb.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace uncertts {

void PerturbationSpec::validate() const {
    if (mixed) {
        if (!(fraction_high >= 0.0 && fraction_high <= 1.0))
            throw std::invalid_argument("fraction_high must lie in [0,1]");
        if (!(std_high > 0.0) || !(std_low > 0.0))
            throw std::invalid_argument("mixed stds must be positive");
    } else {
        if (!(std > 0.0))
            throw std::invalid_argument("perturbation std must be positive");
    }
}

double draw_error(const ErrorModel& model, Rng& rng) {
    switch (model.kind) {
        case ErrorKind::Uniform: {
            const double half = model.std * 1.7320508075688772935;  // sqrt(3)
            return rng.uniform(-half, half);
        }
        case ErrorKind::Normal:
            return model.std * rng.normal();
        case ErrorKind::Exponential:
            // scale-sigma exponential has mean sigma; shift to zero mean
            return model.std * (rng.exponential() - 1.0);
    }
    throw std::logic_error("unreachable error kind");
}

void resolve_schedule(const PerturbationSpec& spec, std::size_t n,
                      std::vector<ErrorKind>& kinds, std::vector<double>& stds) {
    spec.validate();
    kinds.assign(n, spec.kind);
    stds.assign(n, spec.mixed ? spec.std_low : spec.std);

    Rng rng(derive_seed(spec.seed, {hash_str("schedule")}));
    if (spec.mixed) {
        const std::size_t high =
            static_cast<std::size_t>(std::llround(spec.fraction_high * static_cast<double>(n)));
        // Fisher-Yates, then the first `high` slots carry std_high.
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        for (std::size_t i = n; i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(rng.index(i));
            std::swap(order[i - 1], order[j]);
        }
        for (std::size_t i = 0; i < high && i < n; ++i) stds[order[i]] = spec.std_high;
    }
    if (!spec.mix_kinds.empty()) {
        for (std::size_t i = 0; i < n; ++i)
            kinds[i] = spec.mix_kinds[static_cast<std::size_t>(rng.index(spec.mix_kinds.size()))];
    }
}

ProbabilisticSeries perturb(const TimeSeries& ts, const PerturbationSpec& spec) {
    const std::size_t n = ts.values.size();
    ProbabilisticSeries out;
    resolve_schedule(spec, n, out.kinds, out.stds);
    out.observations.resize(n);

    Rng rng(derive_seed(spec.seed, {hash_str("draws")}));
    for (std::size_t i = 0; i < n; ++i) {
        ErrorModel m{out.kinds[i], out.stds[i]};
        out.observations[i] = ts.values[i] + draw_error(m, rng);
    }
    out.validate();
    return out;
}

MultiObservationSeries perturb_multi(const TimeSeries& ts, const PerturbationSpec& spec,
                                     std::size_t s) {
    if (s == 0) throw std::invalid_argument("sample count must be >= 1");
    const std::size_t n = ts.values.size();
    std::vector<ErrorKind> kinds;
    std::vector<double> stds;
    resolve_schedule(spec, n, kinds, stds);

    MultiObservationSeries out;
    out.samples.resize(n);

    // Timestamp-major draw order keeps s=1 bit-identical to perturb().
    Rng rng(derive_seed(spec.seed, {hash_str("draws")}));
    for (std::size_t i = 0; i < n; ++i) {
        out.samples[i].resize(s);
        ErrorModel m{kinds[i], stds[i]};
        for (std::size_t j = 0; j < s; ++j)
            out.samples[i][j] = ts.values[i] + draw_error(m, rng);
    }
    out.validate();
    return out;
}

}  // namespace uncertts
