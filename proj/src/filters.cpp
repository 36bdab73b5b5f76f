#include "uncertts/filters.hpp"

#include <cmath>
#include <stdexcept>

namespace uncertts {

namespace {

struct Window {
    std::size_t lo, hi;  // inclusive
};

Window clip(std::size_t i, std::size_t w, std::size_t n) {
    return {i >= w ? i - w : 0, std::min(i + w, n - 1)};
}

// exp(-lambda*d) for every offset a window can reach; one transcendental per
// offset instead of one per neighbour visit
std::vector<double> decay_weights(std::size_t w, std::size_t n, double lambda) {
    std::vector<double> weights(std::min(w, n - 1) + 1);
    for (std::size_t d = 0; d < weights.size(); ++d)
        weights[d] = std::exp(-lambda * static_cast<double>(d));
    return weights;
}

void require_positive_stds(const ProbabilisticSeries& X) {
    for (double s : X.stds)
        if (!(s > 0.0))
            throw std::invalid_argument("uncertain filters need strictly positive stds");
}

}  // namespace

std::vector<double> ma_filter(const std::vector<double>& v, std::size_t w) {
    const std::size_t n = v.size();
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Window win = clip(i, w, n);
        double sum = 0.0;
        for (std::size_t j = win.lo; j <= win.hi; ++j) sum += v[j];
        out[i] = sum / static_cast<double>(win.hi - win.lo + 1);
    }
    return out;
}

std::vector<double> ema_filter(const std::vector<double>& v, std::size_t w, double lambda) {
    if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be >= 0");
    const std::size_t n = v.size();
    const std::vector<double> weights = decay_weights(w, n, lambda);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Window win = clip(i, w, n);
        double num = 0.0, den = 0.0;
        for (std::size_t j = win.lo; j <= win.hi; ++j) {
            const double weight = weights[i > j ? i - j : j - i];
            num += v[j] * weight;
            den += weight;
        }
        out[i] = num / den;
    }
    return out;
}

std::vector<double> uma_filter(const ProbabilisticSeries& X, std::size_t w, bool normalized) {
    X.validate();
    require_positive_stds(X);
    const std::size_t n = X.size();
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Window win = clip(i, w, n);
        double num = 0.0, den = 0.0;
        for (std::size_t j = win.lo; j <= win.hi; ++j) {
            num += X.observations[j] / X.stds[j];
            den += 1.0 / X.stds[j];
        }
        out[i] = normalized ? num / den : num / static_cast<double>(win.hi - win.lo + 1);
    }
    return out;
}

std::vector<double> uema_filter(const ProbabilisticSeries& X, std::size_t w, double lambda,
                                bool normalized) {
    X.validate();
    require_positive_stds(X);
    if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be >= 0");
    const std::size_t n = X.size();
    const std::vector<double> weights = decay_weights(w, n, lambda);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Window win = clip(i, w, n);
        double num = 0.0, den = 0.0;
        for (std::size_t j = win.lo; j <= win.hi; ++j) {
            const double weight = weights[i > j ? i - j : j - i];
            num += X.observations[j] * weight / X.stds[j];
            den += normalized ? weight / X.stds[j] : weight;
        }
        out[i] = num / den;
    }
    return out;
}

}  // namespace uncertts
