#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace uncertts {

// One aggregate row of the experiment CSV. `param` is context-dependent:
// the chosen tau for MUNICH/PROUD, the window half-width for UMA/UEMA, or
// the swept value in parameter sweeps.
struct ReportCell {
    std::string dataset;
    std::string technique;
    std::string error_kind;
    double sigma = 0.0;
    double param = 0.0;
    double precision = 0.0, precision_ci = 0.0;
    double recall = 0.0, recall_ci = 0.0;
    double f1 = 0.0, f1_ci = 0.0;
    double mean_query_ms = 0.0;
    std::size_t queries = 0;
    std::size_t skipped = 0;
};

// Per-query retrieval scores kept alongside the aggregates so invariants
// (macro-F1 identity, CI recomputation) stay checkable after a run.
struct PerQueryStat {
    std::size_t cell = 0;  // index into EvalReport::cells
    std::size_t query = 0; // collection index of the query series
    double precision = 0.0, recall = 0.0, f1 = 0.0;
};

struct EvalReport {
    std::vector<ReportCell> cells;
    std::vector<PerQueryStat> per_query;
};

// CSV with the fixed header, 6-decimal reals, rows sorted by
// (dataset, technique, sigma, param).
std::string report_csv(const EvalReport& report);

void write_report(const EvalReport& report, const std::string& path);

}  // namespace uncertts
