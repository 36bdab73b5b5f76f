#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "uncertts/series.hpp"

namespace uncertts {

// Lookup table for one ordered error-model pair. phi[i] is the (normalized,
// symmetrized) density of the observed-value difference at lag i*grid_step,
// clamped below at phi_min; k = -log phi(0) makes dust(x,x) = 0.
struct DustTable {
    ErrorModel err_x;
    ErrorModel err_y;
    double grid_step = 0.0;
    double max_delta = 0.0;
    double phi_min = 1e-12;
    double k = 0.0;
    std::vector<double> phi;

    double node_dust(std::size_t i) const;
};

// phi computed by numerical integration of the cross-correlation of the two
// error densities; grid_step <= 0 or max_delta <= 0 pick the defaults
// sigma_max/100 and 12*sigma_max.
DustTable build_dust_table(const ErrorModel& ex, const ErrorModel& ey, double grid_step = 0.0,
                           double max_delta = 0.0, double phi_min = 1e-12);

// sqrt(max(0, -log phi(|x-y|) - k)), interpolated linearly between grid nodes
// in dust space; beyond max_delta the clamped phi_min applies.
double dust_point(double x, double y, const DustTable& table);

// Memoizing, thread-safe registry of tables keyed by the exact (kind, std)
// pairs. max_delta_override extends every table's reach (e.g. to the data's
// observed value range) without touching the per-pair grid resolution.
class DustTableSet {
  public:
    DustTableSet() = default;
    explicit DustTableSet(double grid_step_override, double max_delta_override)
        : grid_step_(grid_step_override), max_delta_(max_delta_override) {}

    const DustTable& ensure(const ErrorModel& ex, const ErrorModel& ey);
    const DustTable& lookup(const ErrorModel& ex, const ErrorModel& ey) const;

  private:
    using Key = std::tuple<int, double, int, double>;
    static Key key_of(const ErrorModel& ex, const ErrorModel& ey);

    mutable std::mutex mu_;
    std::map<Key, std::unique_ptr<DustTable>> tables_;
    double grid_step_ = 0.0;  // 0 = per-pair default
    double max_delta_ = 0.0;  // 0 = per-pair default; else max(this, 12*sigma_max)
};

// sqrt of the sum of squared per-timestamp dust values.
double dust(const ProbabilisticSeries& X, const ProbabilisticSeries& Y,
            const DustTableSet& tables);

}  // namespace uncertts
