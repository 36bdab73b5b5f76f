#include "uncertts/evaluation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <stdexcept>

#include "uncertts/dust.hpp"
#include "uncertts/filters.hpp"
#include "uncertts/lp.hpp"
#include "uncertts/munich.hpp"
#include "uncertts/perturb.hpp"
#include "uncertts/proud.hpp"
#include "uncertts/rng.hpp"
#include "uncertts/scan.hpp"
#include "uncertts/stats.hpp"
#include "uncertts/ucr.hpp"

namespace uncertts {

std::pair<double, double> precision_recall(const std::vector<std::size_t>& retrieved,
                                           const std::vector<std::size_t>& truth) {
    if (truth.empty()) throw std::invalid_argument("ground truth must not be empty");
    std::vector<std::size_t> sorted_truth = truth;
    std::sort(sorted_truth.begin(), sorted_truth.end());
    std::size_t inter = 0;
    for (std::size_t id : retrieved)
        if (std::binary_search(sorted_truth.begin(), sorted_truth.end(), id)) ++inter;
    const double p = retrieved.empty()
                         ? 0.0
                         : static_cast<double>(inter) / static_cast<double>(retrieved.size());
    const double r = static_cast<double>(inter) / static_cast<double>(truth.size());
    return {p, r};
}

double f1_score(double precision, double recall) {
    if (!(precision >= 0.0 && precision <= 1.0) || !(recall >= 0.0 && recall <= 1.0))
        throw std::invalid_argument("precision and recall must lie in [0,1]");
    const double s = precision + recall;
    return s == 0.0 ? 0.0 : 2.0 * precision * recall / s;
}

ChiSquareResult chi_square_uniformity(const Dataset& ds, double alpha) {
    std::vector<double> pool;
    for (const TimeSeries& ts : ds.series)
        pool.insert(pool.end(), ts.values.begin(), ts.values.end());
    const std::size_t n = pool.size();
    if (n < 50) throw std::invalid_argument("chi-square test needs at least 50 pooled values");

    ChiSquareResult res;
    res.bins = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    const auto [lo_it, hi_it] = std::minmax_element(pool.begin(), pool.end());
    const double lo = *lo_it, width = (*hi_it - *lo_it) / static_cast<double>(res.bins);

    std::vector<std::size_t> counts(res.bins, 0);
    for (double v : pool) {
        std::size_t idx = 0;
        if (width > 0.0) {
            idx = static_cast<std::size_t>((v - lo) / width);
            if (idx >= res.bins) idx = res.bins - 1;
        }
        ++counts[idx];
    }
    const double expected = static_cast<double>(n) / static_cast<double>(res.bins);
    for (std::size_t c : counts) {
        const double d = static_cast<double>(c) - expected;
        res.statistic += d * d / expected;
    }
    res.critical = chi_square_critical(alpha, res.bins - 1);
    res.reject = res.statistic > res.critical;
    return res;
}

std::vector<double> ExperimentConfig::sigma_grid() const {
    if (!sigmas.empty()) return sigmas;
    std::vector<double> grid;
    for (int i = 1; i <= 10; ++i) grid.push_back(0.2 * static_cast<double>(i));
    return grid;
}

void ExperimentConfig::validate() const {
    if (techniques.empty()) throw std::invalid_argument("config needs at least one technique");
    for (double s : sigmas)
        if (!(s > 0.0)) throw std::invalid_argument("sigma grid values must be positive");
    if (mixed) {
        if (!(fraction_high >= 0.0 && fraction_high <= 1.0))
            throw std::invalid_argument("fraction_high must lie in [0,1]");
        if (!(std_high > 0.0) || !(std_low > 0.0))
            throw std::invalid_argument("mixed stds must be positive");
    }
    if (!(time_limit_ms > 0.0)) throw std::invalid_argument("time limit must be positive");
    auto check_tau = [](double t, const char* what) {
        if (t != 0.0 && !(t > 0.0 && t < 1.0))
            throw std::invalid_argument(std::string(what) + " must be 0 (sweep) or in (0,1)");
    };
    check_tau(tech.munich_tau, "munich tau");
    check_tau(tech.proud_tau, "proud tau");
    if (tech.munich_samples == 0) throw std::invalid_argument("munich needs >= 1 sample");
    if (tech.bins < 16) throw std::invalid_argument("bins must be >= 16");
    if (tech.p <= 0) throw std::invalid_argument("p must be a positive integer");
}

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += parts[i];
    }
    return out;
}

}  // namespace

ExperimentConfig experiment_from_kv(const KeyValueFile& kv) {
    ExperimentConfig c;
    c.data_dir = kv.get_str("data_dir", c.data_dir);
    c.datasets = kv.get_list("datasets");
    for (const std::string& name : kv.get_list("techniques"))
        c.techniques.push_back(technique_from_name(name));
    if (c.techniques.empty())
        c.techniques = {Technique::Euclid, Technique::Munich, Technique::Proud,
                        Technique::Dust,   Technique::Uma,    Technique::Uema};
    c.error_kind = error_kind_from_name(kv.get_str("error_kind", "normal"));
    c.sigmas = kv.get_reals("sigmas");
    c.seed = kv.get_u64("seed", c.seed);
    c.query_count = kv.get_size("queries", c.query_count);
    c.subsample = kv.get_size("subsample", c.subsample);
    c.truncate_length = kv.get_size("truncate_length", c.truncate_length);
    c.resample_length = kv.get_size("resample_length", c.resample_length);
    c.time_limit_ms = kv.get_real("time_limit_ms", c.time_limit_ms);
    c.min_scan_ms = kv.get_real("min_scan_ms", c.min_scan_ms);
    c.out_path = kv.get_str("out", c.out_path);

    c.mixed = kv.get_bool("perturb.mixed", c.mixed);
    c.fraction_high = kv.get_real("perturb.fraction_high", c.fraction_high);
    c.std_high = kv.get_real("perturb.std_high", c.std_high);
    c.std_low = kv.get_real("perturb.std_low", c.std_low);
    for (const std::string& name : kv.get_list("perturb.mix_kinds"))
        c.mix_kinds.push_back(error_kind_from_name(name));

    c.tech.p = static_cast<int>(kv.get_u64("munich.p", static_cast<std::uint64_t>(c.tech.p)));
    c.tech.bins = kv.get_size("munich.bins", c.tech.bins);
    c.tech.exact_cap = kv.get_real("munich.exact_cap", c.tech.exact_cap);
    c.tech.munich_samples = kv.get_size("munich.samples", c.tech.munich_samples);
    c.tech.munich_tau = kv.get_real("munich.tau", c.tech.munich_tau);
    c.tech.proud_tau = kv.get_real("proud.tau", c.tech.proud_tau);
    c.tech.proud_assumed_std = kv.get_real("proud.assumed_std", c.tech.proud_assumed_std);
    c.tech.w = kv.get_size("filters.w", c.tech.w);
    c.tech.lambda = kv.get_real("filters.lambda", c.tech.lambda);
    c.tech.normalized_filters = kv.get_bool("filters.normalized", c.tech.normalized_filters);
    c.tech.dust_grid_step = kv.get_real("dust.grid_step", c.tech.dust_grid_step);
    c.tech.dust_max_delta = kv.get_real("dust.max_delta", c.tech.dust_max_delta);
    c.validate();
    return c;
}

KeyValueFile experiment_to_kv(const ExperimentConfig& c) {
    KeyValueFile kv;
    kv.set("data_dir", c.data_dir);
    if (!c.datasets.empty()) kv.set("datasets", join(c.datasets));
    std::vector<std::string> tech_names;
    for (Technique t : c.techniques) tech_names.emplace_back(technique_name(t));
    kv.set("techniques", join(tech_names));
    kv.set("error_kind", error_kind_name(c.error_kind));
    if (!c.sigmas.empty()) {
        std::vector<std::string> parts;
        for (double s : c.sigmas) parts.push_back(format_real(s));
        kv.set("sigmas", join(parts));
    }
    kv.set("seed", std::to_string(c.seed));
    kv.set("queries", std::to_string(c.query_count));
    kv.set("subsample", std::to_string(c.subsample));
    kv.set("truncate_length", std::to_string(c.truncate_length));
    kv.set("resample_length", std::to_string(c.resample_length));
    kv.set("time_limit_ms", format_real(c.time_limit_ms));
    kv.set("min_scan_ms", format_real(c.min_scan_ms));
    if (!c.out_path.empty()) kv.set("out", c.out_path);

    kv.set("perturb.mixed", c.mixed ? "true" : "false");
    kv.set("perturb.fraction_high", format_real(c.fraction_high));
    kv.set("perturb.std_high", format_real(c.std_high));
    kv.set("perturb.std_low", format_real(c.std_low));
    if (!c.mix_kinds.empty()) {
        std::vector<std::string> parts;
        for (ErrorKind k : c.mix_kinds) parts.emplace_back(error_kind_name(k));
        kv.set("perturb.mix_kinds", join(parts));
    }

    kv.set("munich.p", std::to_string(c.tech.p));
    kv.set("munich.bins", std::to_string(c.tech.bins));
    kv.set("munich.exact_cap", format_real(c.tech.exact_cap));
    kv.set("munich.samples", std::to_string(c.tech.munich_samples));
    kv.set("munich.tau", format_real(c.tech.munich_tau));
    kv.set("proud.tau", format_real(c.tech.proud_tau));
    kv.set("proud.assumed_std", format_real(c.tech.proud_assumed_std));
    kv.set("filters.w", std::to_string(c.tech.w));
    kv.set("filters.lambda", format_real(c.tech.lambda));
    kv.set("filters.normalized", c.tech.normalized_filters ? "true" : "false");
    kv.set("dust.grid_step", format_real(c.tech.dust_grid_step));
    kv.set("dust.max_delta", format_real(c.tech.dust_max_delta));
    return kv;
}

ExperimentConfig experiment_from_file(const std::string& path) {
    return experiment_from_kv(KeyValueFile::load(path));
}

std::vector<double> default_tau_grid() {
    std::vector<double> grid;
    for (int i = 1; i <= 19; ++i) grid.push_back(0.05 * static_cast<double>(i));
    return grid;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_between(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

struct Prepared {
    Dataset ds;                          // post subsample/truncate/resample, z-normalized
    std::vector<std::size_t> query_ids;  // ascending
};

Prepared prepare_dataset(const ExperimentConfig& config, const Dataset& raw) {
    Prepared prep;
    prep.ds.name = raw.name;
    const std::size_t keep =
        config.subsample > 0 ? std::min(config.subsample, raw.series.size()) : raw.series.size();
    for (std::size_t i = 0; i < keep; ++i) {
        TimeSeries ts = raw.series[i];
        if (config.truncate_length > 0 && config.truncate_length < ts.size())
            ts.values.resize(config.truncate_length);
        if (config.resample_length > 0) ts = resample(ts, config.resample_length);
        prep.ds.series.push_back(z_normalize(ts));
        if (i < raw.labels.size()) prep.ds.labels.push_back(raw.labels[i]);
    }
    prep.ds.validate();

    const std::size_t n = prep.ds.series.size();
    if (config.query_count == 0 || config.query_count >= n) {
        prep.query_ids.resize(n);
        std::iota(prep.query_ids.begin(), prep.query_ids.end(), std::size_t{0});
    } else {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        Rng rng(derive_seed(config.seed, {hash_str(prep.ds.name), hash_str("queries")}));
        for (std::size_t i = n; i > 1; --i)
            std::swap(order[i - 1], order[static_cast<std::size_t>(rng.index(i))]);
        prep.query_ids.assign(order.begin(),
                              order.begin() + static_cast<std::ptrdiff_t>(config.query_count));
        std::sort(prep.query_ids.begin(), prep.query_ids.end());
    }
    return prep;
}

struct NoisePoint {
    double label = 0.0;  // sigma column value
    std::size_t index = 0;
};

std::vector<NoisePoint> noise_points(const ExperimentConfig& config) {
    std::vector<NoisePoint> points;
    if (config.mixed) {
        const double mean_std = config.fraction_high * config.std_high +
                                (1.0 - config.fraction_high) * config.std_low;
        points.push_back({mean_std, 0});
    } else {
        const auto grid = config.sigma_grid();
        for (std::size_t i = 0; i < grid.size(); ++i) points.push_back({grid[i], i});
    }
    return points;
}

PerturbationSpec spec_for(const ExperimentConfig& config, const NoisePoint& point,
                          const std::string& ds_name, std::size_t series_idx,
                          std::uint64_t role) {
    PerturbationSpec spec;
    spec.kind = config.error_kind;
    if (config.mixed) {
        spec.mixed = true;
        spec.fraction_high = config.fraction_high;
        spec.std_high = config.std_high;
        spec.std_low = config.std_low;
    } else {
        spec.std = point.label;
    }
    spec.mix_kinds = config.mix_kinds;
    spec.seed = derive_seed(config.seed, {hash_str(ds_name), point.index, series_idx, role});
    return spec;
}

std::string report_error_kind(const ExperimentConfig& config) {
    if (!config.mix_kinds.empty()) return "mixed";
    return error_kind_name(config.error_kind);
}

struct PointData {
    std::vector<ProbabilisticSeries> prob;          // one observation per timestamp
    std::vector<MultiObservationSeries> multi;      // MUNICH samples (if needed)
    std::unique_ptr<DustTableSet> tables;           // if needed
    std::vector<std::vector<std::size_t>> truth;    // per query
    std::vector<double> eps_eucl, eps_dust, eps_uma, eps_uema;  // per query
    std::vector<std::vector<std::size_t>> cands;    // per query: all ids but the query
};

bool wants(const ExperimentConfig& config, Technique t) {
    return std::find(config.techniques.begin(), config.techniques.end(), t) !=
           config.techniques.end();
}

PointData build_point(const ExperimentConfig& config, const Prepared& prep,
                      const NoisePoint& point) {
    const std::size_t n = prep.ds.series.size();
    PointData pd;
    pd.prob.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        pd.prob.push_back(perturb(prep.ds.series[i], spec_for(config, point, prep.ds.name, i, 1)));

    if (wants(config, Technique::Munich)) {
        pd.multi.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            pd.multi.push_back(perturb_multi(prep.ds.series[i],
                                             spec_for(config, point, prep.ds.name, i, 2),
                                             config.tech.munich_samples));
    }

    const bool need_dust = wants(config, Technique::Dust);
    if (need_dust) {
        double lo = pd.prob[0].observations[0], hi = lo;
        for (const ProbabilisticSeries& ps : pd.prob)
            for (double v : ps.observations) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        const double reach =
            config.tech.dust_max_delta > 0.0 ? config.tech.dust_max_delta : hi - lo;
        pd.tables = std::make_unique<DustTableSet>(config.tech.dust_grid_step, reach);
        std::set<std::pair<int, double>> models;
        for (const ProbabilisticSeries& ps : pd.prob)
            for (std::size_t i = 0; i < ps.size(); ++i)
                models.insert({static_cast<int>(ps.kinds[i]), ps.stds[i]});
        for (const auto& a : models)
            for (const auto& b : models)
                pd.tables->ensure(ErrorModel{static_cast<ErrorKind>(a.first), a.second},
                                  ErrorModel{static_cast<ErrorKind>(b.first), b.second});
    }

    const bool need_uma = wants(config, Technique::Uma);
    const bool need_uema = wants(config, Technique::Uema);
    const std::size_t nq = prep.query_ids.size();
    pd.truth.resize(nq);
    pd.cands.resize(nq);
    pd.eps_eucl.resize(nq);
    pd.eps_dust.assign(nq, 0.0);
    pd.eps_uma.assign(nq, 0.0);
    pd.eps_uema.assign(nq, 0.0);

    for (std::size_t qi = 0; qi < nq; ++qi) {
        const std::size_t q = prep.query_ids[qi];
        auto& cand = pd.cands[qi];
        cand.reserve(n - 1);
        for (std::size_t i = 0; i < n; ++i)
            if (i != q) cand.push_back(i);

        pd.truth[qi] = ground_truth(prep.ds.series[q], prep.ds.series, cand);

        // threshold equivalence: the 10th Euclidean neighbor on observations
        const auto nn = knn_ids(cand, kGroundTruthK, [&](std::size_t id) {
            return euclidean(pd.prob[q].observations, pd.prob[id].observations);
        });
        const std::size_t c = nn.back();
        pd.eps_eucl[qi] = euclidean(pd.prob[q].observations, pd.prob[c].observations);
        if (need_dust) pd.eps_dust[qi] = dust(pd.prob[q], pd.prob[c], *pd.tables);
        if (need_uma) {
            const auto fq = uma_filter(pd.prob[q], config.tech.w, config.tech.normalized_filters);
            const auto fc = uma_filter(pd.prob[c], config.tech.w, config.tech.normalized_filters);
            pd.eps_uma[qi] = euclidean(fq, fc);
        }
        if (need_uema) {
            const auto fq = uema_filter(pd.prob[q], config.tech.w, config.tech.lambda,
                                        config.tech.normalized_filters);
            const auto fc = uema_filter(pd.prob[c], config.tech.w, config.tech.lambda,
                                        config.tech.normalized_filters);
            pd.eps_uema[qi] = euclidean(fq, fc);
        }
    }
    return pd;
}

struct QueryOutcome {
    double precision = 0.0, recall = 0.0, f1 = 0.0;
    double ms = 0.0;
    bool skipped = false;
};

// Everything per (dataset, noise point, technique): timed scans producing
// per-candidate scores, then threshold application (and tau selection).
void run_technique(const ExperimentConfig& config, const Prepared& prep, const PointData& pd,
                   const NoisePoint& point, Technique tech, EvalReport& report) {
    const std::size_t nq = prep.query_ids.size();
    std::vector<std::vector<double>> scores(nq);
    std::vector<QueryOutcome> outcomes(nq);

    QuerySpec mspec;
    mspec.technique = Technique::Munich;
    mspec.p = config.tech.p;
    mspec.bins = config.tech.bins;
    mspec.exact_cap = config.tech.exact_cap;
    mspec.tau = 0.5;

    for (std::size_t qi = 0; qi < nq; ++qi) {
        const std::size_t q = prep.query_ids[qi];
        const auto& cand = pd.cands[qi];

        const auto t0 = Clock::now();
        std::size_t reps = 0;
        double first_ms = 0.0;
        do {
            switch (tech) {
                case Technique::Euclid: {
                    const auto& qobs = pd.prob[q].observations;
                    scores[qi] = score_all(cand, [&](std::size_t id) {
                        return euclidean(qobs, pd.prob[id].observations);
                    });
                    break;
                }
                case Technique::Munich: {
                    mspec.eps = pd.eps_eucl[qi];
                    scores[qi] = score_all(cand, [&](std::size_t id) {
                        return munich_probability(pd.multi[q], pd.multi[id], mspec);
                    });
                    break;
                }
                case Technique::Proud: {
                    const double eps = pd.eps_eucl[qi];
                    // mixed schedules hide the per-point stds from PROUD; it
                    // falls back to a constant assumption (mean of the levels)
                    double assumed = config.tech.proud_assumed_std;
                    if (assumed == 0.0 && config.mixed)
                        assumed = 0.5 * (config.std_high + config.std_low);
                    scores[qi] = score_all(cand, [&](std::size_t id) {
                        return assumed > 0.0
                                   ? proud_margin_assumed(pd.prob[q].observations,
                                                          pd.prob[id].observations, eps, assumed)
                                   : proud_margin(pd.prob[q], pd.prob[id], eps);
                    });
                    break;
                }
                case Technique::Dust: {
                    scores[qi] = score_all(cand, [&](std::size_t id) {
                        return dust(pd.prob[q], pd.prob[id], *pd.tables);
                    });
                    break;
                }
                case Technique::Uma: {
                    const auto fq =
                        uma_filter(pd.prob[q], config.tech.w, config.tech.normalized_filters);
                    scores[qi] = score_all(cand, [&](std::size_t id) {
                        return euclidean(fq, uma_filter(pd.prob[id], config.tech.w,
                                                        config.tech.normalized_filters));
                    });
                    break;
                }
                case Technique::Uema: {
                    const auto fq = uema_filter(pd.prob[q], config.tech.w, config.tech.lambda,
                                                config.tech.normalized_filters);
                    scores[qi] = score_all(cand, [&](std::size_t id) {
                        return euclidean(fq, uema_filter(pd.prob[id], config.tech.w,
                                                         config.tech.lambda,
                                                         config.tech.normalized_filters));
                    });
                    break;
                }
            }
            ++reps;
            if (reps == 1) first_ms = ms_between(t0, Clock::now());
        } while (ms_between(t0, Clock::now()) < config.min_scan_ms);

        outcomes[qi].ms = ms_between(t0, Clock::now()) / static_cast<double>(reps);
        outcomes[qi].skipped = first_ms > config.time_limit_ms;
    }

    // membership thresholds; MUNICH keeps probabilities (>= tau), PROUD keeps
    // margins (>= Phi^-1(tau)), the rest keep native distances (<= eps)
    const bool probabilistic = tech == Technique::Munich || tech == Technique::Proud;
    auto retrieved_at = [&](std::size_t qi, double tau) {
        std::vector<std::size_t> out;
        const auto& cand = pd.cands[qi];
        double cut = 0.0;
        if (tech == Technique::Munich) cut = tau;
        else if (tech == Technique::Proud) cut = inverse_normal_cdf(tau);
        else if (tech == Technique::Euclid) cut = pd.eps_eucl[qi];
        else if (tech == Technique::Dust) cut = pd.eps_dust[qi];
        else if (tech == Technique::Uma) cut = pd.eps_uma[qi];
        else cut = pd.eps_uema[qi];
        for (std::size_t k = 0; k < cand.size(); ++k) {
            const bool in = probabilistic ? scores[qi][k] >= cut : scores[qi][k] <= cut;
            if (in) out.push_back(cand[k]);
        }
        return out;
    };

    auto eval_query = [&](std::size_t qi, double tau) {
        const auto ret = retrieved_at(qi, tau);
        const auto [p, r] = precision_recall(ret, pd.truth[qi]);
        return std::tuple<double, double, double>{p, r, f1_score(p, r)};
    };

    double chosen_tau = 0.0;
    if (probabilistic) {
        chosen_tau = tech == Technique::Munich ? config.tech.munich_tau : config.tech.proud_tau;
        if (chosen_tau == 0.0) {
            // The coarse grid alone cannot reach the operating points these
            // techniques need under heavy noise: PROUD's acceptance margins
            // scale like -sigma^2*sqrt(n), so the F1-optimal tau shrinks far
            // below 0.05. Extend the sweep with a deep tail (tau = Phi(cut)
            // for coarse normal cuts down to -24).
            std::vector<double> grid = default_tau_grid();
            for (double cut = -26.0; cut < -1.74; cut += 0.5) grid.push_back(normal_cdf(cut));
            std::sort(grid.begin(), grid.end());
            // sweep: maximize mean F1, ties to the smaller tau
            double best_f1 = -1.0;
            for (double tau : grid) {
                double sum = 0.0;
                std::size_t used = 0;
                for (std::size_t qi = 0; qi < nq; ++qi) {
                    if (outcomes[qi].skipped) continue;
                    sum += std::get<2>(eval_query(qi, tau));
                    ++used;
                }
                const double mean = used > 0 ? sum / static_cast<double>(used) : 0.0;
                if (mean > best_f1) {
                    best_f1 = mean;
                    chosen_tau = tau;
                }
            }
        }
    }

    std::vector<double> ps, rs, fs, times;
    for (std::size_t qi = 0; qi < nq; ++qi) {
        if (outcomes[qi].skipped) continue;
        const auto [p, r, f] = eval_query(qi, chosen_tau);
        outcomes[qi].precision = p;
        outcomes[qi].recall = r;
        outcomes[qi].f1 = f;
        ps.push_back(p);
        rs.push_back(r);
        fs.push_back(f);
        times.push_back(outcomes[qi].ms);
    }

    ReportCell cell;
    cell.dataset = prep.ds.name;
    cell.technique = technique_name(tech);
    cell.error_kind = report_error_kind(config);
    cell.sigma = point.label;
    if (probabilistic) cell.param = chosen_tau;
    else if (tech == Technique::Uma || tech == Technique::Uema)
        cell.param = static_cast<double>(config.tech.w);
    cell.queries = nq;
    cell.skipped = nq - ps.size();
    auto summarize = [](const std::vector<double>& xs, double& mean, double& ci) {
        if (xs.empty()) {
            mean = 0.0;
            ci = 0.0;
            return;
        }
        if (xs.size() == 1) {
            mean = xs[0];
            ci = 0.0;
            return;
        }
        const MeanCi m = confidence_interval_95(xs);
        mean = m.mean;
        ci = m.half_width;
    };
    summarize(ps, cell.precision, cell.precision_ci);
    summarize(rs, cell.recall, cell.recall_ci);
    summarize(fs, cell.f1, cell.f1_ci);
    if (!times.empty())
        cell.mean_query_ms =
            std::accumulate(times.begin(), times.end(), 0.0) / static_cast<double>(times.size());

    const std::size_t cell_index = report.cells.size();
    report.cells.push_back(cell);
    for (std::size_t qi = 0; qi < nq; ++qi) {
        if (outcomes[qi].skipped) continue;
        report.per_query.push_back({cell_index, prep.query_ids[qi], outcomes[qi].precision,
                                    outcomes[qi].recall, outcomes[qi].f1});
    }
}

}  // namespace

EvalReport run_experiment_on(const ExperimentConfig& config, const std::vector<Dataset>& data) {
    config.validate();
    EvalReport report;
    for (const Dataset& raw : data) {
        const Prepared prep = prepare_dataset(config, raw);
        if (prep.ds.series.size() < kGroundTruthK + 1)
            throw std::invalid_argument(prep.ds.name + ": needs at least 11 series");
        for (const NoisePoint& point : noise_points(config)) {
            const PointData pd = build_point(config, prep, point);
            for (Technique tech : config.techniques)
                run_technique(config, prep, pd, point, tech, report);
        }
    }
    return report;
}

namespace {

std::string find_split(const std::string& dir, const std::string& name, const char* part) {
    for (const char* ext : {".txt", ".tsv", ""}) {
        const std::string path = dir + "/" + name + "_" + part + ext;
        std::ifstream probe(path);
        if (probe) return path;
    }
    throw std::runtime_error("dataset files not found for " + name + " under " + dir);
}

std::vector<Dataset> load_all(const ExperimentConfig& config) {
    if (config.datasets.empty()) throw std::invalid_argument("config lists no datasets");
    std::vector<Dataset> data;
    for (const std::string& name : config.datasets)
        data.push_back(load_dataset_files(config.data_dir, name));
    return data;
}

}  // namespace

Dataset load_dataset_files(const std::string& dir, const std::string& name) {
    return load_ucr(find_split(dir, name, "TRAIN"), find_split(dir, name, "TEST"), name);
}

EvalReport run_experiment(const ExperimentConfig& config) {
    return run_experiment_on(config, load_all(config));
}

EvalReport sweep_parameter_on(const ExperimentConfig& config, const std::vector<Dataset>& data,
                              const std::string& parameter, const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("sweep needs at least one value");
    EvalReport report;
    for (double v : values) {
        ExperimentConfig c = config;
        if (parameter == "w") c.tech.w = static_cast<std::size_t>(v);
        else if (parameter == "lambda") c.tech.lambda = v;
        else if (parameter == "length") c.resample_length = static_cast<std::size_t>(v);
        else if (parameter == "tau") c.tech.munich_tau = c.tech.proud_tau = v;
        else throw std::invalid_argument("unknown sweep parameter: " + parameter);

        EvalReport sub = run_experiment_on(c, data);
        const std::size_t base = report.cells.size();
        for (ReportCell& cell : sub.cells) {
            cell.param = v;
            report.cells.push_back(std::move(cell));
        }
        for (PerQueryStat& s : sub.per_query) {
            s.cell += base;
            report.per_query.push_back(s);
        }
    }
    return report;
}

EvalReport sweep_parameter(const ExperimentConfig& config, const std::string& parameter,
                           const std::vector<double>& values) {
    return sweep_parameter_on(config, load_all(config), parameter, values);
}

std::vector<QueryCalibration> calibrate_dataset(const ExperimentConfig& config, const Dataset& ds,
                                                double sigma) {
    ExperimentConfig c = config;
    if (!c.mixed) c.sigmas = {sigma};
    const Prepared prep = prepare_dataset(c, ds);
    if (prep.ds.series.size() < kGroundTruthK + 1)
        throw std::invalid_argument(prep.ds.name + ": needs at least 11 series");
    // force dust thresholds on for the calibration listing
    if (!wants(c, Technique::Dust)) c.techniques.push_back(Technique::Dust);
    const auto points = noise_points(c);
    const PointData pd = build_point(c, prep, points.front());
    std::vector<QueryCalibration> out;
    for (std::size_t qi = 0; qi < prep.query_ids.size(); ++qi)
        out.push_back({prep.query_ids[qi], pd.eps_eucl[qi], pd.eps_dust[qi]});
    return out;
}

}  // namespace uncertts
