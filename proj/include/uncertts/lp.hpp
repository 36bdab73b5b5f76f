#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace uncertts {

// |d|^p by repeated multiplication. Integer p keeps this exactly reproducible
// across libms; the whole MUNICH enumeration depends on that.
inline double pow_term(double d, int p) {
    double a = std::fabs(d);
    double r = 1.0;
    for (int i = 0; i < p; ++i) r *= a;
    return r;
}

// Sum of |a_i-b_i|^p accumulated in index order (fixed association).
inline double lp_sum(const std::vector<double>& a, const std::vector<double>& b, int p) {
    if (a.size() != b.size())
        throw std::invalid_argument("lp distance needs equal lengths");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += pow_term(a[i] - b[i], p);
    return s;
}

inline double lp_distance(const std::vector<double>& a, const std::vector<double>& b, int p) {
    if (p <= 0) throw std::invalid_argument("p must be a positive integer");
    double s = lp_sum(a, b, p);
    if (p == 1) return s;
    if (p == 2) return std::sqrt(s);
    return std::pow(s, 1.0 / static_cast<double>(p));
}

inline double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
    return lp_distance(a, b, 2);
}

}  // namespace uncertts
