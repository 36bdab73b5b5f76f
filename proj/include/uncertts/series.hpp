#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace uncertts {

// An exact, equally spaced sequence of finite reals. Timestamps are implicit
// (1..n). Immutable by convention: operations return new series.
struct TimeSeries {
    std::vector<double> values;

    TimeSeries() = default;
    explicit TimeSeries(std::vector<double> v);

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
};

enum class ErrorKind { Uniform, Normal, Exponential };

const char* error_kind_name(ErrorKind k);
ErrorKind error_kind_from_name(const std::string& name);

// A zero-mean error distribution parameterized by its standard deviation.
// Uniform is supported on [-sigma*sqrt(3), sigma*sqrt(3)]; exponential is
// shifted left by sigma so its mean is zero.
struct ErrorModel {
    ErrorKind kind = ErrorKind::Normal;
    double std = 1.0;

    ErrorModel() = default;
    ErrorModel(ErrorKind k, double s);
};

// One observed value plus one error model per timestamp. Perturbation always
// produces strictly positive stds; certain() marks every point as noise-free
// (std 0), which only the degenerate distance paths accept.
struct ProbabilisticSeries {
    std::vector<double> observations;
    std::vector<ErrorKind> kinds;
    std::vector<double> stds;

    static ProbabilisticSeries from_models(std::vector<double> obs, const std::vector<ErrorModel>& errors);
    static ProbabilisticSeries certain(const TimeSeries& ts);

    std::size_t size() const { return observations.size(); }
    void validate() const;
};

// s_i >= 1 sampled observations per timestamp; sample counts may differ
// across timestamps.
struct MultiObservationSeries {
    std::vector<std::vector<double>> samples;

    std::size_t size() const { return samples.size(); }
    void validate() const;
};

// A named collection of equal-length series with optional numeric labels.
struct Dataset {
    std::string name;
    std::vector<TimeSeries> series;
    std::vector<double> labels;

    std::size_t size() const { return series.size(); }
    std::size_t length() const { return series.empty() ? 0 : series[0].size(); }
    void validate() const;
};

// Zero mean, unit population (1/n) variance. Constant series map to zeros.
TimeSeries z_normalize(const TimeSeries& ts);

// Linear interpolation over normalized index positions; endpoints exact.
TimeSeries resample(const TimeSeries& ts, std::size_t target_len);

}  // namespace uncertts
