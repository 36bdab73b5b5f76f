#include "uncertts/dust.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uncertts {

namespace {

// One error density with its effective support. Hard edges (uniform,
// exponential left end) bound the integrand exactly; soft ends truncate
// negligible tails.
struct Density {
    ErrorKind kind;
    double sigma;
    double lo, hi;

    explicit Density(const ErrorModel& m) : kind(m.kind), sigma(m.std) {
        switch (kind) {
            case ErrorKind::Uniform:
                lo = -sigma * 1.7320508075688772935;
                hi = -lo;
                break;
            case ErrorKind::Normal:
                lo = -10.0 * sigma;
                hi = 10.0 * sigma;
                break;
            case ErrorKind::Exponential:
                lo = -sigma;             // hard edge of the shifted exponential
                hi = 30.0 * sigma;       // tail mass ~ e^-31
                break;
        }
    }

    double operator()(double e) const {
        switch (kind) {
            case ErrorKind::Uniform:
                return 1.0 / (2.0 * sigma * 1.7320508075688772935);
            case ErrorKind::Normal: {
                double z = e / sigma;
                return std::exp(-0.5 * z * z) / (sigma * 2.5066282746310005024);
            }
            case ErrorKind::Exponential:
                return std::exp(-e / sigma - 1.0) / sigma;
        }
        return 0.0;
    }
};

// Integral of fx(u)*fy(u - delta) du over the support intersection. Inside
// the intersection both densities are smooth, so one composite Simpson pass
// suffices; the intersection endpoints carry all the edges.
double cross_correlation(const Density& fx, const Density& fy, double delta, double base_step) {
    const double lo = std::max(fx.lo, delta + fy.lo);
    const double hi = std::min(fx.hi, delta + fy.hi);
    if (!(hi > lo)) return 0.0;

    const std::size_t panels =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((hi - lo) / base_step)));
    const double w = (hi - lo) / static_cast<double>(panels);
    double acc = 0.0;
    auto f = [&](double u) { return fx(u) * fy(u - delta); };
    for (std::size_t i = 0; i < panels; ++i) {
        const double a = lo + w * static_cast<double>(i);
        const double b = a + w;
        acc += (w / 6.0) * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
    }
    return acc;
}

}  // namespace

double DustTable::node_dust(std::size_t i) const {
    const double v = -std::log(phi[i]) - k;
    return v > 0.0 ? std::sqrt(v) : 0.0;
}

DustTable build_dust_table(const ErrorModel& ex, const ErrorModel& ey, double grid_step,
                           double max_delta, double phi_min) {
    const double sigma_max = std::max(ex.std, ey.std);
    if (!(grid_step > 0.0)) grid_step = sigma_max / 100.0;
    if (!(max_delta > 0.0)) max_delta = 12.0 * sigma_max;
    if (!(phi_min > 0.0)) throw std::invalid_argument("phi_min must be positive");

    DustTable t;
    t.err_x = ex;
    t.err_y = ey;
    t.grid_step = grid_step;
    t.max_delta = max_delta;
    t.phi_min = phi_min;

    const Density fx(ex), fy(ey);
    const double base_step = std::min(ex.std, ey.std) / 64.0;
    const std::size_t nodes =
        static_cast<std::size_t>(std::ceil(max_delta / grid_step)) + 1;

    // Symmetrized lag density: invariant under swapping the two error models,
    // and identical to the plain cross-correlation when both are symmetric.
    std::vector<double> raw(nodes);
    for (std::size_t i = 0; i < nodes; ++i) {
        const double d = grid_step * static_cast<double>(i);
        raw[i] = 0.5 * (cross_correlation(fx, fy, d, base_step) +
                        cross_correlation(fx, fy, -d, base_step));
    }

    // Trapezoid mass over the symmetric extension; rescale to a unit integral.
    double z = raw[0] + raw[nodes - 1];
    for (std::size_t i = 1; i + 1 < nodes; ++i) z += 2.0 * raw[i];
    z *= grid_step;
    if (!(z > 0.0)) throw std::runtime_error("dust table degenerate: zero density mass");

    t.phi.resize(nodes);
    for (std::size_t i = 0; i < nodes; ++i) t.phi[i] = std::max(phi_min, raw[i] / z);
    t.k = -std::log(t.phi[0]);
    return t;
}

double dust_point(double x, double y, const DustTable& table) {
    const double delta = std::fabs(x - y);
    const std::size_t last = table.phi.size() - 1;
    const double g = delta / table.grid_step;
    if (g >= static_cast<double>(last)) {
        // beyond the grid: the clamped floor applies
        const double v = -std::log(table.phi_min) - table.k;
        return v > 0.0 ? std::sqrt(v) : 0.0;
    }
    const std::size_t i = static_cast<std::size_t>(g);
    const double frac = g - static_cast<double>(i);
    const double d0 = table.node_dust(i);
    const double d1 = table.node_dust(i + 1);
    return d0 + frac * (d1 - d0);
}

DustTableSet::Key DustTableSet::key_of(const ErrorModel& ex, const ErrorModel& ey) {
    return {static_cast<int>(ex.kind), ex.std, static_cast<int>(ey.kind), ey.std};
}

const DustTable& DustTableSet::ensure(const ErrorModel& ex, const ErrorModel& ey) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = tables_.find(key_of(ex, ey));
    if (it != tables_.end()) return *it->second;

    const double sigma_max = std::max(ex.std, ey.std);
    double max_delta = 12.0 * sigma_max;
    if (max_delta_ > 0.0) max_delta = std::max(max_delta, max_delta_);
    auto table = std::make_unique<DustTable>(
        build_dust_table(ex, ey, grid_step_ > 0.0 ? grid_step_ : 0.0, max_delta));
    auto [pos, _] = tables_.emplace(key_of(ex, ey), std::move(table));
    return *pos->second;
}

const DustTable& DustTableSet::lookup(const ErrorModel& ex, const ErrorModel& ey) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = tables_.find(key_of(ex, ey));
    if (it == tables_.end())
        throw std::runtime_error("no dust table for the requested error-model pair");
    return *it->second;
}

double dust(const ProbabilisticSeries& X, const ProbabilisticSeries& Y,
            const DustTableSet& tables) {
    X.validate();
    Y.validate();
    if (X.size() != Y.size()) throw std::invalid_argument("dust needs equal-length series");
    double acc = 0.0;
    const DustTable* t = nullptr;
    for (std::size_t i = 0; i < X.size(); ++i) {
        // constant error models dominate in practice; skip the registry then
        if (t == nullptr || t->err_x.kind != X.kinds[i] || t->err_x.std != X.stds[i] ||
            t->err_y.kind != Y.kinds[i] || t->err_y.std != Y.stds[i]) {
            t = &tables.lookup(ErrorModel{X.kinds[i], X.stds[i]},
                               ErrorModel{Y.kinds[i], Y.stds[i]});
        }
        const double d = dust_point(X.observations[i], Y.observations[i], *t);
        acc += d * d;
    }
    return std::sqrt(acc);
}

}  // namespace uncertts
