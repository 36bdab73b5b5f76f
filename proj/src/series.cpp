#include "uncertts/series.hpp"

#include <cmath>
#include <stdexcept>

namespace uncertts {

static void require_finite(const std::vector<double>& v, const char* what) {
    for (double x : v)
        if (!std::isfinite(x))
            throw std::invalid_argument(std::string(what) + " contains a non-finite value");
}

TimeSeries::TimeSeries(std::vector<double> v) : values(std::move(v)) {
    if (values.empty())
        throw std::invalid_argument("time series must have length >= 1");
    require_finite(values, "time series");
}

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Uniform: return "uniform";
        case ErrorKind::Normal: return "normal";
        case ErrorKind::Exponential: return "exponential";
    }
    return "?";
}

ErrorKind error_kind_from_name(const std::string& name) {
    if (name == "uniform") return ErrorKind::Uniform;
    if (name == "normal") return ErrorKind::Normal;
    if (name == "exponential") return ErrorKind::Exponential;
    throw std::invalid_argument("unknown error kind: " + name);
}

ErrorModel::ErrorModel(ErrorKind k, double s) : kind(k), std(s) {
    if (!(std > 0.0) || !std::isfinite(std))
        throw std::invalid_argument("error model std must be positive and finite");
}

ProbabilisticSeries ProbabilisticSeries::from_models(std::vector<double> obs,
                                                    const std::vector<ErrorModel>& errors) {
    if (obs.size() != errors.size())
        throw std::invalid_argument("observations and error models differ in length");
    ProbabilisticSeries ps;
    ps.observations = std::move(obs);
    ps.kinds.reserve(errors.size());
    ps.stds.reserve(errors.size());
    for (const ErrorModel& e : errors) {
        ps.kinds.push_back(e.kind);
        ps.stds.push_back(e.std);
    }
    ps.validate();
    return ps;
}

ProbabilisticSeries ProbabilisticSeries::certain(const TimeSeries& ts) {
    ProbabilisticSeries ps;
    ps.observations = ts.values;
    ps.kinds.assign(ts.size(), ErrorKind::Normal);
    ps.stds.assign(ts.size(), 0.0);
    return ps;
}

void ProbabilisticSeries::validate() const {
    if (observations.empty())
        throw std::invalid_argument("probabilistic series must have length >= 1");
    if (observations.size() != stds.size() || observations.size() != kinds.size())
        throw std::invalid_argument("probabilistic series fields differ in length");
    require_finite(observations, "observations");
    for (double s : stds)
        if (!(s >= 0.0) || !std::isfinite(s))
            throw std::invalid_argument("per-timestamp std must be finite and >= 0");
}

void MultiObservationSeries::validate() const {
    if (samples.empty())
        throw std::invalid_argument("multi-observation series must have length >= 1");
    for (const auto& at : samples) {
        if (at.empty())
            throw std::invalid_argument("every timestamp needs at least one sample");
        require_finite(at, "samples");
    }
}

void Dataset::validate() const {
    if (!labels.empty() && labels.size() != series.size())
        throw std::invalid_argument("label count does not match series count");
    for (const TimeSeries& s : series)
        if (s.size() != length())
            throw std::invalid_argument("dataset contains series of unequal length");
}

TimeSeries z_normalize(const TimeSeries& ts) {
    const std::size_t n = ts.size();
    if (n < 2)
        throw std::invalid_argument("series too short to normalize");
    double mean = 0.0;
    for (double v : ts.values) mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double v : ts.values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(n);
    double sd = std::sqrt(var);
    if (sd < 1e-12) sd = 1.0;  // constant series map to zeros
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = (ts.values[i] - mean) / sd;
    return TimeSeries(std::move(out));
}

TimeSeries resample(const TimeSeries& ts, std::size_t target_len) {
    const std::size_t n = ts.size();
    if (n < 2)
        throw std::invalid_argument("series too short to resample");
    if (target_len < 2)
        throw std::invalid_argument("resample target length must be >= 2");
    std::vector<double> out(target_len);
    const double scale = static_cast<double>(n - 1);
    const double denom = static_cast<double>(target_len - 1);
    for (std::size_t k = 0; k < target_len; ++k) {
        double pos = static_cast<double>(k) * scale / denom;
        std::size_t i = static_cast<std::size_t>(pos);
        if (i >= n - 1) {
            out[k] = ts.values[n - 1];
            continue;
        }
        double frac = pos - static_cast<double>(i);
        out[k] = (1.0 - frac) * ts.values[i] + frac * ts.values[i + 1];
    }
    return TimeSeries(std::move(out));
}

}  // namespace uncertts
