#include "uncertts/datagen.hpp"

#include <cmath>
#include <stdexcept>

#include "uncertts/rng.hpp"
#include "uncertts/ucr.hpp"

namespace uncertts {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Shape {
    std::size_t count;
    std::size_t length;
    std::size_t classes;
};

using RowFn = std::vector<double> (*)(std::size_t cls, std::size_t idx, std::size_t len,
                                      Rng& rng);

// Cylinder-bell-funnel after Saito: a plateau/ramp of random extent and
// amplitude. Intrinsic noise kept at 0.3 so nearest neighbors stay
// class-coherent at this pool size.
std::vector<double> row_cbf(std::size_t cls, std::size_t idx, std::size_t len, Rng& rng) {
    (void)idx;
    const double a = 16.0 + rng.uniform01() * 16.0;
    const double b = a + 32.0 + rng.uniform01() * 64.0;
    const double amp = 6.0 + rng.normal();
    std::vector<double> v(len);
    for (std::size_t t = 0; t < len; ++t) {
        const double x = static_cast<double>(t);
        double s = 0.0;
        if (x >= a && x <= b) {
            if (cls == 0) s = amp;                                // cylinder
            else if (cls == 1) s = amp * (x - a) / (b - a);       // bell
            else s = amp * (b - x) / (b - a);                     // funnel
        }
        v[t] = s + 0.3 * rng.normal();
    }
    return v;
}

// Six control-chart patterns after Alcock, with the usual iid level noise.
std::vector<double> row_control(std::size_t cls, std::size_t idx, std::size_t len, Rng& rng) {
    (void)idx;
    const double m = 30.0, s = 2.0;
    const double amp = 10.0 + rng.uniform01() * 5.0;
    const double period = 10.0 + rng.uniform01() * 5.0;
    const double grad = 0.2 + rng.uniform01() * 0.3;
    const double shift = 7.5 + rng.uniform01() * 12.5;
    const double t0 = len / 3.0 + rng.uniform01() * (len / 3.0);
    std::vector<double> v(len);
    for (std::size_t t = 0; t < len; ++t) {
        const double x = static_cast<double>(t);
        double y = m + s * rng.uniform(-2.0, 2.0);
        switch (cls) {
            case 0: break;                                        // in control
            case 1: y += amp * std::sin(2.0 * kPi * x / period); break;
            case 2: y += grad * x; break;
            case 3: y -= grad * x; break;
            case 4: y += x >= t0 ? shift : 0.0; break;
            default: y -= x >= t0 ? shift : 0.0; break;
        }
        v[t] = y;
    }
    return v;
}

// Two smooth motion profiles (linear-start quarter wave vs quadratic-start
// raised cosine), each opening with one of five fixed onset micro-patterns.
// The onset survives aggressive truncation: even the first handful of points
// keeps tight 12-member neighborhoods with wide margins between patterns.
std::vector<double> row_motion(std::size_t cls, std::size_t idx, std::size_t len, Rng& rng) {
    static const double onset[5][6] = {
        {1.2, -0.3, -1.5, -0.9, 0.4, 1.1},   // dip
        {-1.3, 0.2, 1.4, 1.0, -0.5, -1.2},   // peak
        {-1.5, -1.0, -0.4, 0.2, 0.9, 1.6},   // ramp up
        {1.6, 0.9, 0.2, -0.4, -1.0, -1.5},   // ramp down
        {-1.0, 1.2, -0.8, 1.0, -1.2, 0.9},   // zigzag
    };
    const double amp = 0.8 + rng.uniform01() * 0.4;
    const double rise = cls == 0 ? 10.0 + rng.uniform01() * 4.0 : 28.0 + rng.uniform01() * 8.0;
    const double wobble_amp = 0.03 * rng.uniform01();
    const double wobble_phase = rng.uniform01() * 2.0 * kPi;
    std::vector<double> v(len);
    for (std::size_t t = 0; t < len; ++t) {
        const double x = static_cast<double>(t);
        double s;
        if (cls == 0) {
            s = x < rise ? std::sin(0.5 * kPi * x / rise) : 1.0;
        } else {
            s = x < rise ? 0.5 * (1.0 - std::cos(kPi * x / rise)) : 1.0;
        }
        if (x >= rise) s *= std::exp(-(x - rise) / 200.0);        // slow settle
        v[t] = amp * s + wobble_amp * std::sin(2.0 * kPi * x / 40.0 + wobble_phase) +
               0.02 * rng.normal();
    }
    const double* pattern = onset[(idx / 2) % 5];
    for (std::size_t t = 0; t < len && t < 6; ++t)
        v[t] = 0.3 * pattern[t] + 0.04 * rng.normal();
    return v;
}

// Decaying pulses with class-specific onset and time constant; class 2
// carries a second pulse.
std::vector<double> row_transients(std::size_t cls, std::size_t idx, std::size_t len, Rng& rng) {
    (void)idx;
    double onset, decay;
    if (cls == 0) {
        onset = 20.0 + rng.uniform01() * 10.0;
        decay = 8.0 + rng.uniform01() * 2.0;
    } else if (cls == 1) {
        onset = 50.0 + rng.uniform01() * 10.0;
        decay = 15.0 + rng.uniform01() * 3.0;
    } else {
        onset = 25.0 + rng.uniform01() * 10.0;
        decay = 10.0 + rng.uniform01() * 2.0;
    }
    const double amp = 1.0 + rng.uniform(-0.2, 0.2);
    const double base_phase = rng.uniform01() * 2.0 * kPi;
    std::vector<double> v(len);
    auto pulse = [&](double x, double at) {
        if (x < at) return 0.0;
        return amp * std::exp(-(x - at) / decay) * (1.0 - std::exp(-(x - at) / 2.0));
    };
    for (std::size_t t = 0; t < len; ++t) {
        const double x = static_cast<double>(t);
        double y = pulse(x, onset);
        if (cls == 2) y += pulse(x, onset + 40.0);
        v[t] = y + 0.1 * std::sin(2.0 * kPi * x / static_cast<double>(len) + base_phase) +
               0.02 * rng.normal();
    }
    return v;
}

// Periodic spike trains; classes differ in rhythm period and the relative
// size of the secondary bump.
std::vector<double> row_heartbeats(std::size_t cls, std::size_t idx, std::size_t len, Rng& rng) {
    (void)idx;
    const double period = (cls == 0 ? 16.0 : cls == 1 ? 22.0 : 28.0) + rng.uniform(-1.0, 1.0);
    const double phase = rng.uniform(-2.0, 2.0);
    const double bump = cls == 2 ? 0.18 : 0.35;
    std::vector<double> v(len);
    auto spike = [](double d, double width) { return std::exp(-0.5 * d * d / (width * width)); };
    for (std::size_t t = 0; t < len; ++t) {
        const double x = static_cast<double>(t);
        double y = 0.05 * std::sin(2.0 * kPi * x / 60.0);
        for (double c = phase; c < static_cast<double>(len) + period; c += period) {
            y += spike(x - c, 1.5);
            y += bump * spike(x - c - period / 3.0, 2.5);
        }
        v[t] = y + 0.02 * rng.normal();
    }
    return v;
}

// Radial contour signatures: one dominant harmonic per class plus faint
// random low-order harmonics.
std::vector<double> row_contours(std::size_t cls, std::size_t idx, std::size_t len, Rng& rng) {
    (void)idx;
    const double main_phase = rng.uniform(-0.15, 0.15);
    double extra_amp[6], extra_phase[6];
    for (int h = 1; h <= 5; ++h) {
        extra_amp[h] = 0.04 * rng.uniform01();
        extra_phase[h] = rng.uniform01() * 2.0 * kPi;
    }
    const double dominant = static_cast<double>(cls + 2);
    std::vector<double> v(len);
    for (std::size_t t = 0; t < len; ++t) {
        const double theta = 2.0 * kPi * static_cast<double>(t) / static_cast<double>(len);
        double y = 1.0 + 0.45 * std::cos(dominant * theta + main_phase);
        for (int h = 1; h <= 5; ++h) {
            if (h == static_cast<int>(dominant)) continue;
            y += extra_amp[h] * std::cos(h * theta + extra_phase[h]);
        }
        v[t] = y + 0.01 * rng.normal();
    }
    return v;
}

struct Family {
    const char* name;
    Shape shape;
    RowFn row;
};

const Family kFamilies[] = {
    {"cbf", {150, 128, 3}, row_cbf},
    {"control_charts", {180, 60, 6}, row_control},
    {"motion_curves", {150, 150, 2}, row_motion},
    {"transients", {150, 128, 3}, row_transients},
    {"heartbeats", {150, 128, 3}, row_heartbeats},
    {"contours", {160, 128, 4}, row_contours},
};

}  // namespace

Dataset generate_dataset(const std::string& name, std::size_t count, std::size_t length,
                         std::uint64_t seed) {
    const Family* fam = nullptr;
    for (const Family& f : kFamilies)
        if (name == f.name) fam = &f;
    if (fam == nullptr) throw std::invalid_argument("unknown dataset family: " + name);

    if (count == 0) count = fam->shape.count;
    if (length == 0) length = fam->shape.length;

    Dataset ds;
    ds.name = name;
    ds.series.reserve(count);
    ds.labels.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t cls = i % fam->shape.classes;
        Rng rng(derive_seed(seed, {hash_str(name), i}));
        ds.series.emplace_back(fam->row(cls, i, length, rng));
        ds.labels.push_back(static_cast<double>(cls));
    }
    ds.validate();
    return ds;
}

const std::vector<std::string>& builtin_dataset_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const Family& f : kFamilies) out.emplace_back(f.name);
        return out;
    }();
    return names;
}

void write_dataset_splits(const Dataset& ds, const std::string& dir) {
    const std::size_t half = ds.series.size() / 2;
    Dataset train, test;
    train.name = ds.name;
    test.name = ds.name;
    for (std::size_t i = 0; i < ds.series.size(); ++i) {
        Dataset& dst = i < half ? train : test;
        dst.series.push_back(ds.series[i]);
        dst.labels.push_back(ds.labels[i]);
    }
    write_ucr_file(train, dir + "/" + ds.name + "_TRAIN.txt");
    write_ucr_file(test, dir + "/" + ds.name + "_TEST.txt");
}

}  // namespace uncertts
