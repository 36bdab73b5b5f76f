#include "uncertts/report.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <tuple>

namespace uncertts {

std::string report_csv(const EvalReport& report) {
    std::vector<const ReportCell*> rows;
    rows.reserve(report.cells.size());
    for (const ReportCell& c : report.cells) rows.push_back(&c);
    std::sort(rows.begin(), rows.end(), [](const ReportCell* a, const ReportCell* b) {
        return std::tie(a->dataset, a->technique, a->sigma, a->param) <
               std::tie(b->dataset, b->technique, b->sigma, b->param);
    });

    std::string out =
        "dataset,technique,error_kind,sigma,param,precision,precision_ci,recall,recall_ci,"
        "f1,f1_ci,mean_query_ms,queries,skipped\n";
    char buf[512];
    for (const ReportCell* c : rows) {
        std::snprintf(buf, sizeof(buf),
                      "%s,%s,%s,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%zu,%zu\n",
                      c->dataset.c_str(), c->technique.c_str(), c->error_kind.c_str(), c->sigma,
                      c->param, c->precision, c->precision_ci, c->recall, c->recall_ci, c->f1,
                      c->f1_ci, c->mean_query_ms, c->queries, c->skipped);
        out += buf;
    }
    return out;
}

void write_report(const EvalReport& report, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot write report: " + path);
    const std::string csv = report_csv(report);
    std::fwrite(csv.data(), 1, csv.size(), f);
    std::fclose(f);
}

}  // namespace uncertts
