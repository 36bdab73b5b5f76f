#include "uncertts/ucr.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace uncertts {

namespace {

std::vector<std::string> split_row(const std::string& line, bool comma) {
    std::vector<std::string> tokens;
    if (comma) {
        std::string tok;
        std::stringstream ss(line);
        while (std::getline(ss, tok, ',')) {
            // tolerate spaces around the commas
            std::size_t b = tok.find_first_not_of(" \t");
            std::size_t e = tok.find_last_not_of(" \t");
            tokens.push_back(b == std::string::npos ? std::string() : tok.substr(b, e - b + 1));
        }
    } else {
        std::stringstream ss(line);
        std::string tok;
        while (ss >> tok) tokens.push_back(tok);
    }
    return tokens;
}

double parse_cell(const std::string& tok, const std::string& path, std::size_t row,
                  std::size_t col) {
    double v = 0.0;
    const char* b = tok.data();
    const char* e = b + tok.size();
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e) {
        throw std::runtime_error(path + ": row " + std::to_string(row) + ", column " +
                                 std::to_string(col) + ": not a number: '" + tok + "'");
    }
    return v;
}

}  // namespace

Dataset load_ucr_file(const std::string& path, const std::string& name) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path);

    Dataset ds;
    ds.name = name;
    std::string line;
    std::size_t row = 0;
    std::size_t expected = 0;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;

        const bool comma = line.find(',') != std::string::npos;
        const auto tokens = split_row(line, comma);
        if (tokens.size() < 2)
            throw std::runtime_error(path + ": row " + std::to_string(row) +
                                     " has no values after the label");
        if (expected == 0) expected = tokens.size();
        if (tokens.size() != expected)
            throw std::runtime_error(path + ": row " + std::to_string(row) + " has " +
                                     std::to_string(tokens.size() - 1) + " values, expected " +
                                     std::to_string(expected - 1));

        ds.labels.push_back(parse_cell(tokens[0], path, row, 1));
        std::vector<double> values;
        values.reserve(tokens.size() - 1);
        for (std::size_t c = 1; c < tokens.size(); ++c)
            values.push_back(parse_cell(tokens[c], path, row, c + 1));
        ds.series.emplace_back(std::move(values));
    }
    if (ds.series.empty()) throw std::runtime_error(path + ": no data rows");
    ds.validate();
    return ds;
}

Dataset load_ucr(const std::string& train_path, const std::string& test_path,
                 const std::string& name) {
    Dataset ds = load_ucr_file(train_path, name);
    const Dataset test = load_ucr_file(test_path, name);
    if (test.length() != ds.length())
        throw std::runtime_error(name + ": train and test series lengths differ");
    ds.series.insert(ds.series.end(), test.series.begin(), test.series.end());
    ds.labels.insert(ds.labels.end(), test.labels.begin(), test.labels.end());
    ds.validate();
    return ds;
}

void write_ucr_file(const Dataset& ds, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot write dataset file: " + path);
    for (std::size_t i = 0; i < ds.series.size(); ++i) {
        std::fprintf(f, "%.17g", ds.labels.empty() ? 0.0 : ds.labels[i]);
        for (double v : ds.series[i].values) std::fprintf(f, " %.17g", v);
        std::fputc('\n', f);
    }
    std::fclose(f);
}

}  // namespace uncertts
