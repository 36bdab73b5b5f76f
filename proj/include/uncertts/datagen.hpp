#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uncertts/series.hpp"

namespace uncertts {

// Seeded generators for six labeled benchmark families in the classic UCR
// shape (cylinder-bell-funnel, control charts, and four structured signal
// families). Classes are interleaved (series i gets class i mod k) so any
// prefix subsample stays balanced. count/length 0 pick family defaults.
Dataset generate_dataset(const std::string& name, std::size_t count, std::size_t length,
                         std::uint64_t seed);

const std::vector<std::string>& builtin_dataset_names();

// NAME_TRAIN.txt / NAME_TEST.txt under dir, first half / second half.
void write_dataset_splits(const Dataset& ds, const std::string& dir);

}  // namespace uncertts
