#include "uncertts/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uncertts/datagen.hpp"
#include "uncertts/dust.hpp"
#include "uncertts/evaluation.hpp"
#include "uncertts/filters.hpp"
#include "uncertts/lp.hpp"
#include "uncertts/munich.hpp"
#include "uncertts/perturb.hpp"
#include "uncertts/proud.hpp"
#include "uncertts/queries.hpp"
#include "uncertts/rng.hpp"
#include "uncertts/stats.hpp"
#include "uncertts/ucr.hpp"

namespace uncertts {

namespace {

// flag-value problems (unknown technique, missing required combination);
// everything else escaping a handler is a data error -> exit 2
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string config_path, out, technique;
    double sigma = 0.0, tau = 0.0;
    std::uint64_t seed = 0;
    CLI::Option *o_config = nullptr, *o_seed = nullptr, *o_out = nullptr;
    CLI::Option *o_technique = nullptr, *o_sigma = nullptr, *o_tau = nullptr;

    void add_to(CLI::App* cmd) {
        o_config = cmd->add_option("--config", config_path, "experiment config file");
        o_seed = cmd->add_option("--seed", seed, "master RNG seed");
        o_out = cmd->add_option("--out", out, "output path");
        o_technique =
            cmd->add_option("--technique", technique, "euclid|munich|proud|dust|uma|uema");
        o_sigma = cmd->add_option("--sigma", sigma, "perturbation standard deviation");
        o_tau = cmd->add_option("--tau", tau, "probability threshold in (0,1)");
    }

    ExperimentConfig config() const {
        ExperimentConfig c;
        if (o_config->count()) c = experiment_from_file(config_path);
        if (o_seed->count()) c.seed = seed;
        if (o_out->count()) c.out_path = out;
        if (o_technique->count()) c.techniques = {parse_technique(technique)};
        if (o_sigma->count()) c.sigmas = {sigma};
        if (o_tau->count()) c.tech.munich_tau = c.tech.proud_tau = tau;
        return c;
    }

    static Technique parse_technique(const std::string& name) {
        try {
            return technique_from_name(name);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
};

void emit_report(const EvalReport& report, const std::string& out_path) {
    if (out_path.empty()) {
        const std::string csv = report_csv(report);
        std::fputs(csv.c_str(), stdout);
    } else {
        write_report(report, out_path);
        std::fprintf(stderr, "wrote %zu rows to %s\n", report.cells.size(), out_path.c_str());
    }
}

// subsample / truncate / resample / z-normalize, mirroring the runner's prep
Dataset prep_dataset(const ExperimentConfig& c, const Dataset& raw) {
    Dataset out;
    out.name = raw.name;
    const std::size_t keep =
        c.subsample > 0 ? std::min(c.subsample, raw.series.size()) : raw.series.size();
    for (std::size_t i = 0; i < keep; ++i) {
        TimeSeries ts = raw.series[i];
        if (c.truncate_length > 0 && c.truncate_length < ts.size())
            ts.values.resize(c.truncate_length);
        if (c.resample_length > 0) ts = resample(ts, c.resample_length);
        out.series.push_back(z_normalize(ts));
        if (i < raw.labels.size()) out.labels.push_back(raw.labels[i]);
    }
    out.validate();
    return out;
}

PerturbationSpec perturb_spec(const ExperimentConfig& c, double sigma,
                              const std::string& ds_name, std::size_t series_idx,
                              std::uint64_t role) {
    PerturbationSpec spec;
    spec.kind = c.error_kind;
    if (c.mixed) {
        spec.mixed = true;
        spec.fraction_high = c.fraction_high;
        spec.std_high = c.std_high;
        spec.std_low = c.std_low;
    } else {
        spec.std = sigma;
    }
    spec.mix_kinds = c.mix_kinds;
    spec.seed = derive_seed(c.seed, {hash_str(ds_name), 0, series_idx, role});
    return spec;
}

std::string pick_dataset(const ExperimentConfig& c, const CLI::Option* o_dataset,
                         const std::string& dataset_flag) {
    if (o_dataset->count()) return dataset_flag;
    if (!c.datasets.empty()) return c.datasets.front();
    throw UsageError("no dataset: pass --dataset or list datasets in the config");
}

int run_query(const Common& common, const std::string& dataset, std::size_t query_idx) {
    ExperimentConfig c = common.config();
    const Dataset ds = prep_dataset(c, load_dataset_files(c.data_dir, dataset));
    const std::size_t n = ds.series.size();
    if (query_idx >= n)
        throw UsageError("query index " + std::to_string(query_idx) + " out of range (" +
                         std::to_string(n) + " series)");
    if (n < kGroundTruthK + 2) throw std::invalid_argument(ds.name + ": needs at least 12 series");

    const Technique tech = common.o_technique->count()
                               ? Common::parse_technique(common.technique)
                               : (c.techniques.size() == 1 ? c.techniques[0] : Technique::Euclid);
    const double sigma =
        common.o_sigma->count() ? common.sigma : (c.sigmas.empty() ? 0.0 : c.sigmas[0]);
    if (sigma < 0.0) throw UsageError("--sigma must be >= 0");
    const double tau = common.o_tau->count() ? common.tau : 0.5;
    if (!(tau > 0.0 && tau < 1.0)) throw UsageError("--tau must lie in (0,1)");
    const bool noiseless = !c.mixed && sigma == 0.0;

    std::vector<ProbabilisticSeries> prob(n);
    for (std::size_t i = 0; i < n; ++i)
        prob[i] = noiseless ? ProbabilisticSeries::certain(ds.series[i])
                            : perturb(ds.series[i], perturb_spec(c, sigma, ds.name, i, 1));

    std::vector<std::size_t> cand;
    for (std::size_t i = 0; i < n; ++i)
        if (i != query_idx) cand.push_back(i);
    const auto truth = ground_truth(ds.series[query_idx], ds.series, cand);

    const auto nn = knn_ids(cand, kGroundTruthK, [&](std::size_t id) {
        return euclidean(prob[query_idx].observations, prob[id].observations);
    });
    const std::size_t cutoff = nn.back();
    const double eps_eucl = euclidean(prob[query_idx].observations, prob[cutoff].observations);

    std::vector<std::size_t> retrieved;
    switch (tech) {
        case Technique::Euclid: {
            for (std::size_t id : cand)
                if (euclidean(prob[query_idx].observations, prob[id].observations) <= eps_eucl)
                    retrieved.push_back(id);
            break;
        }
        case Technique::Munich: {
            std::vector<MultiObservationSeries> multi(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (noiseless) {
                    multi[i].samples.resize(ds.series[i].size());
                    for (std::size_t t = 0; t < ds.series[i].size(); ++t)
                        multi[i].samples[t] = {ds.series[i][t]};
                } else {
                    multi[i] = perturb_multi(ds.series[i], perturb_spec(c, sigma, ds.name, i, 2),
                                             c.tech.munich_samples);
                }
            }
            QuerySpec spec;
            spec.technique = Technique::Munich;
            spec.eps = eps_eucl;
            spec.tau = tau;
            spec.p = c.tech.p;
            spec.bins = c.tech.bins;
            spec.exact_cap = c.tech.exact_cap;
            retrieved = probabilistic_range_query(multi[query_idx], multi, cand, spec);
            break;
        }
        case Technique::Proud: {
            const double cut = inverse_normal_cdf(tau);
            double assumed = c.tech.proud_assumed_std;
            if (assumed == 0.0 && c.mixed) assumed = 0.5 * (c.std_high + c.std_low);
            for (std::size_t id : cand) {
                const double margin =
                    assumed > 0.0
                        ? proud_margin_assumed(prob[query_idx].observations,
                                               prob[id].observations, eps_eucl, assumed)
                        : proud_margin(prob[query_idx], prob[id], eps_eucl);
                if (margin >= cut) retrieved.push_back(id);
            }
            break;
        }
        case Technique::Dust: {
            if (noiseless) throw UsageError("dust needs --sigma > 0 or a mixed schedule");
            double lo = prob[0].observations[0], hi = lo;
            for (const auto& ps : prob)
                for (double v : ps.observations) {
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
            DustTableSet tables(c.tech.dust_grid_step,
                                c.tech.dust_max_delta > 0.0 ? c.tech.dust_max_delta : hi - lo);
            std::set<std::pair<int, double>> models;
            for (const auto& ps : prob)
                for (std::size_t t = 0; t < ps.size(); ++t)
                    models.insert({static_cast<int>(ps.kinds[t]), ps.stds[t]});
            for (const auto& a : models)
                for (const auto& b : models)
                    tables.ensure(ErrorModel{static_cast<ErrorKind>(a.first), a.second},
                                  ErrorModel{static_cast<ErrorKind>(b.first), b.second});
            const double eps_dust = dust(prob[query_idx], prob[cutoff], tables);
            for (std::size_t id : cand)
                if (dust(prob[query_idx], prob[id], tables) <= eps_dust) retrieved.push_back(id);
            break;
        }
        case Technique::Uma:
        case Technique::Uema: {
            auto filt = [&](const ProbabilisticSeries& ps) {
                return tech == Technique::Uma
                           ? uma_filter(ps, c.tech.w, c.tech.normalized_filters)
                           : uema_filter(ps, c.tech.w, c.tech.lambda, c.tech.normalized_filters);
            };
            const auto fq = filt(prob[query_idx]);
            const double eps_f = euclidean(fq, filt(prob[cutoff]));
            for (std::size_t id : cand)
                if (euclidean(fq, filt(prob[id])) <= eps_f) retrieved.push_back(id);
            break;
        }
    }

    auto [p, r] = precision_recall(retrieved, truth);
    std::printf("dataset=%s technique=%s sigma=%s query=%zu eps=%.6f retrieved=%zu\n",
                ds.name.c_str(), technique_name(tech), format_real(sigma).c_str(), query_idx,
                eps_eucl, retrieved.size());
    std::printf("ids:");
    for (std::size_t id : retrieved) std::printf(" %zu", id);
    std::printf("\n");
    std::printf("precision=%.6f recall=%.6f f1=%.6f\n", p, r, f1_score(p, r));
    return 0;
}

int run_calibrate(const Common& common, const std::string& dataset) {
    ExperimentConfig c = common.config();
    const Dataset raw = load_dataset_files(c.data_dir, dataset);
    const double sigma = common.o_sigma->count()
                             ? common.sigma
                             : (c.sigmas.empty() ? c.sigma_grid().front() : c.sigmas[0]);
    if (!c.mixed && !(sigma > 0.0)) throw UsageError("--sigma must be > 0");
    const auto rows = calibrate_dataset(c, raw, sigma);
    std::string text;
    char line[128];
    for (const auto& row : rows) {
        std::snprintf(line, sizeof line, "query=%zu eps_eucl=%.6f eps_dust=%.6f\n", row.query,
                      row.eps_eucl, row.eps_dust);
        text += line;
    }
    if (c.out_path.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::FILE* f = std::fopen(c.out_path.c_str(), "w");
        if (!f) throw std::runtime_error("cannot write " + c.out_path);
        std::fputs(text.c_str(), f);
        std::fclose(f);
    }
    return 0;
}

int run_chisq(const Common& common, const std::string& dataset, double alpha) {
    ExperimentConfig c = common.config();
    std::vector<std::string> names;
    if (!dataset.empty()) names.push_back(dataset);
    else names = c.datasets;
    if (names.empty()) throw UsageError("no dataset: pass --dataset or list datasets in the config");
    for (const std::string& name : names) {
        const Dataset ds = load_dataset_files(c.data_dir, name);
        const ChiSquareResult res = chi_square_uniformity(ds, alpha);
        std::printf("dataset=%s bins=%zu statistic=%.6f critical=%.6f reject=%s\n", name.c_str(),
                    res.bins, res.statistic, res.critical, res.reject ? "true" : "false");
    }
    return 0;
}

int run_perturb(const Common& common, const std::string& dataset, std::size_t samples) {
    ExperimentConfig c = common.config();
    if (c.out_path.empty()) throw UsageError("perturb needs --out");
    const double sigma = common.o_sigma->count()
                             ? common.sigma
                             : (c.sigmas.empty() ? c.sigma_grid().front() : c.sigmas[0]);
    if (!c.mixed && !(sigma > 0.0)) throw UsageError("--sigma must be > 0");
    const Dataset ds = prep_dataset(c, load_dataset_files(c.data_dir, dataset));

    Dataset out;
    out.name = ds.name;
    for (std::size_t i = 0; i < ds.series.size(); ++i) {
        const PerturbationSpec spec = perturb_spec(c, sigma, ds.name, i, samples > 1 ? 2 : 1);
        if (samples > 1) {
            // timestamp-major flattening: s rows per source series
            const MultiObservationSeries multi = perturb_multi(ds.series[i], spec, samples);
            for (std::size_t s = 0; s < samples; ++s) {
                TimeSeries row;
                for (const auto& cell : multi.samples) row.values.push_back(cell[s]);
                out.series.push_back(std::move(row));
                if (i < ds.labels.size()) out.labels.push_back(ds.labels[i]);
            }
        } else {
            out.series.push_back(TimeSeries(perturb(ds.series[i], spec).observations));
            if (i < ds.labels.size()) out.labels.push_back(ds.labels[i]);
        }
    }
    write_ucr_file(out, c.out_path);
    std::fprintf(stderr, "wrote %zu series to %s\n", out.series.size(), c.out_path.c_str());
    return 0;
}

int run_make_data(const Common& common, const std::string& dataset, const std::string& dir,
                  std::size_t count, std::size_t length) {
    const std::uint64_t seed = common.o_seed->count() ? common.seed : 7;
    std::vector<std::string> names;
    if (!dataset.empty() && dataset != "all") names.push_back(dataset);
    else names = builtin_dataset_names();
    for (const std::string& name : names) {
        const Dataset ds = generate_dataset(name, count, length, seed);
        write_dataset_splits(ds, dir);
        std::fprintf(stderr, "%s: %zu series of length %zu\n", name.c_str(), ds.series.size(),
                     ds.length());
    }
    return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"uncertain time-series similarity workbench"};
    app.require_subcommand(1);

    Common c_bench, c_query, c_cal, c_sweep, c_chisq, c_pert, c_make;

    CLI::App* bench = app.add_subcommand("bench", "run the experiment grid from a config file");
    c_bench.add_to(bench);

    CLI::App* query = app.add_subcommand("query", "run one query with one technique");
    c_query.add_to(query);
    std::string query_dataset;
    std::size_t query_idx = 0;
    CLI::Option* q_ds = query->add_option("--dataset", query_dataset, "dataset name");
    query->add_option("--query", query_idx, "query series index");

    CLI::App* cal = app.add_subcommand("calibrate", "print per-query distance thresholds");
    c_cal.add_to(cal);
    std::string cal_dataset;
    CLI::Option* cal_ds = cal->add_option("--dataset", cal_dataset, "dataset name");

    CLI::App* sweep = app.add_subcommand("sweep", "vary one parameter, emit a CSV per value");
    c_sweep.add_to(sweep);
    std::string sweep_param;
    std::vector<double> sweep_values;
    sweep->add_option("--param", sweep_param, "w|lambda|length|tau")->required();
    sweep->add_option("--values", sweep_values, "comma-separated values")->delimiter(',');

    CLI::App* chisq = app.add_subcommand("chisq", "chi-square uniformity diagnostic");
    c_chisq.add_to(chisq);
    std::string chisq_dataset;
    double alpha = 0.01;
    chisq->add_option("--dataset", chisq_dataset, "dataset name");
    chisq->add_option("--alpha", alpha, "significance level");

    CLI::App* pert = app.add_subcommand("perturb", "write a perturbed copy of a dataset");
    c_pert.add_to(pert);
    std::string pert_dataset;
    std::size_t pert_samples = 1;
    CLI::Option* pert_ds = pert->add_option("--dataset", pert_dataset, "dataset name");
    pert->add_option("--samples", pert_samples, "observations per timestamp");

    CLI::App* make = app.add_subcommand("make-data", "generate the built-in benchmark families");
    c_make.add_to(make);
    std::string make_dataset, make_dir = ".";
    std::size_t make_count = 0, make_length = 0;
    make->add_option("--dataset", make_dataset, "family name, or 'all'");
    make->add_option("--dir", make_dir, "output directory");
    make->add_option("--count", make_count, "series count (0 = family default)");
    make->add_option("--length", make_length, "series length (0 = family default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (bench->parsed()) {
            const ExperimentConfig c = c_bench.config();
            emit_report(run_experiment(c), c.out_path);
            return 0;
        }
        if (query->parsed())
            return run_query(c_query, pick_dataset(c_query.config(), q_ds, query_dataset),
                             query_idx);
        if (cal->parsed())
            return run_calibrate(c_cal, pick_dataset(c_cal.config(), cal_ds, cal_dataset));
        if (sweep->parsed()) {
            const ExperimentConfig c = c_sweep.config();
            std::vector<double> values = sweep_values;
            if (values.empty()) {
                if (sweep_param == "w")
                    for (int w = 0; w <= 20; ++w) values.push_back(w);
                else if (sweep_param == "lambda")
                    for (int i = 0; i <= 8; ++i) values.push_back(0.25 * i);
                else if (sweep_param == "length")
                    values = {50, 100, 200, 400, 600, 800, 1000};
                else if (sweep_param == "tau")
                    values = default_tau_grid();
                else
                    throw UsageError("unknown sweep parameter: " + sweep_param);
            }
            try {
                emit_report(sweep_parameter(c, sweep_param, values), c.out_path);
            } catch (const std::invalid_argument& e) {
                if (std::string(e.what()).find("unknown sweep parameter") == 0)
                    throw UsageError(e.what());
                throw;
            }
            return 0;
        }
        if (chisq->parsed()) return run_chisq(c_chisq, chisq_dataset, alpha);
        if (pert->parsed())
            return run_perturb(c_pert, pick_dataset(c_pert.config(), pert_ds, pert_dataset),
                               pert_samples);
        if (make->parsed()) return run_make_data(c_make, make_dataset, make_dir, make_count,
                                                 make_length);
        return 1;
    } catch (const UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}

}  // namespace uncertts
