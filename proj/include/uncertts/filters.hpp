#pragma once

#include <cstddef>
#include <vector>

#include "uncertts/series.hpp"

namespace uncertts {

// Window filters over [i-w, i+w], truncated at the sequence edges. The
// uncertain variants weight each observation by the inverse of its error std,
// keeping the published divisors (window count for UMA, plain exponential
// weight sum for UEMA); `normalized` switches to the weight-renormalized
// form where the divisor carries the same 1/s_j factors as the numerator.

std::vector<double> ma_filter(const std::vector<double>& v, std::size_t w);

std::vector<double> ema_filter(const std::vector<double>& v, std::size_t w, double lambda);

std::vector<double> uma_filter(const ProbabilisticSeries& X, std::size_t w,
                               bool normalized = false);

std::vector<double> uema_filter(const ProbabilisticSeries& X, std::size_t w, double lambda,
                                bool normalized = false);

}  // namespace uncertts
