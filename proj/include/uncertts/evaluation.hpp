#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uncertts/config.hpp"
#include "uncertts/queries.hpp"
#include "uncertts/report.hpp"
#include "uncertts/series.hpp"

namespace uncertts {

std::pair<double, double> precision_recall(const std::vector<std::size_t>& retrieved,
                                           const std::vector<std::size_t>& truth);

double f1_score(double precision, double recall);

struct ChiSquareResult {
    double statistic = 0.0;
    double critical = 0.0;
    std::size_t bins = 0;
    bool reject = false;
};

// Equal-width binning into ceil(sqrt(N)) cells over the pooled value range;
// rejects uniformity when the statistic clears the chi-square critical value.
ChiSquareResult chi_square_uniformity(const Dataset& ds, double alpha);

struct TechniqueSettings {
    int p = 2;
    std::size_t bins = 256;
    double exact_cap = 65536;
    std::size_t munich_samples = 5;
    double munich_tau = 0.0;       // 0 = pick by tau sweep
    double proud_tau = 0.0;        // 0 = pick by tau sweep
    double proud_assumed_std = 0.0;  // >0 replaces per-point stds (mixed-error runs)
    std::size_t w = 2;
    double lambda = 1.0;
    bool normalized_filters = false;
    double dust_grid_step = 0.0;   // 0 = sigma_max/100
    double dust_max_delta = 0.0;   // 0 = cover the observed value range

    friend bool operator==(const TechniqueSettings&, const TechniqueSettings&) = default;
};

struct ExperimentConfig {
    std::string data_dir = ".";
    std::vector<std::string> datasets;
    std::vector<Technique> techniques;
    ErrorKind error_kind = ErrorKind::Normal;
    std::vector<double> sigmas;     // empty = 0.2..2.0 step 0.2
    bool mixed = false;             // per-timestamp high/low std schedule
    double fraction_high = 0.2;
    double std_high = 1.0;
    double std_low = 0.4;
    std::vector<ErrorKind> mix_kinds;
    std::uint64_t seed = 1;
    std::size_t query_count = 0;    // 0 = every series queries once
    std::size_t subsample = 0;      // keep the first N series
    std::size_t truncate_length = 0;
    std::size_t resample_length = 0;
    double time_limit_ms = 10000.0; // per query per technique
    double min_scan_ms = 0.0;       // repeat scans until this much time accrues
    std::string out_path;
    TechniqueSettings tech;

    std::vector<double> sigma_grid() const;
    void validate() const;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

ExperimentConfig experiment_from_kv(const KeyValueFile& kv);
KeyValueFile experiment_to_kv(const ExperimentConfig& config);
ExperimentConfig experiment_from_file(const std::string& path);

// Full methodology on preloaded data: z-normalize, perturb, ground truth,
// per-query calibration, technique scans (timed), tau selection, aggregation.
EvalReport run_experiment_on(const ExperimentConfig& config, const std::vector<Dataset>& data);

// Joined train+test splits from <dir>/<name>_TRAIN.txt|.tsv and _TEST.
Dataset load_dataset_files(const std::string& dir, const std::string& name);

// Loads <data_dir>/<name>_TRAIN.txt|.tsv + _TEST first.
EvalReport run_experiment(const ExperimentConfig& config);

// Re-runs the experiment once per value with the named parameter overridden
// (w, lambda, length, or tau); cells carry the swept value in `param`.
EvalReport sweep_parameter_on(const ExperimentConfig& config, const std::vector<Dataset>& data,
                              const std::string& parameter, const std::vector<double>& values);
EvalReport sweep_parameter(const ExperimentConfig& config, const std::string& parameter,
                           const std::vector<double>& values);

std::vector<double> default_tau_grid();  // 0.05..0.95 step 0.05

// The per-query thresholds the runner derives (exposed for the CLI).
struct QueryCalibration {
    std::size_t query = 0;
    double eps_eucl = 0.0;
    double eps_dust = 0.0;
};
std::vector<QueryCalibration> calibrate_dataset(const ExperimentConfig& config,
                                                const Dataset& ds, double sigma);

}  // namespace uncertts
