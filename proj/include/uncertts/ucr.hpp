#pragma once

#include <string>

#include "uncertts/series.hpp"

namespace uncertts {

// One file in the UCR archive layout: every row is "label v1 v2 ... vn",
// comma- or whitespace-delimited (auto-detected per file).
Dataset load_ucr_file(const std::string& path, const std::string& name);

// Train and test halves joined, as the experiments use them.
Dataset load_ucr(const std::string& train_path, const std::string& test_path,
                 const std::string& name);

// Writes rows in the same layout (space-delimited, full precision).
void write_ucr_file(const Dataset& ds, const std::string& path);

}  // namespace uncertts
