#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "idim/generators.hpp"
#include "idim/pivot_index.hpp"

namespace idim {

struct SweepConfig {
    Family family = Family::UniformCube;
    std::vector<std::size_t> dimensions{2, 8, 32, 128, 512};
    std::size_t n = 10000;
    std::size_t k = 32;
    std::size_t target_result_size = 10;
    std::size_t queries = 100;
    std::uint64_t seed = 42;
    bool farthest_first = false;
    // Also run a sequential scan per query and count result mismatches.
    bool verify = false;
};

struct SweepRow {
    Family family;
    std::size_t dimension;
    std::size_t n;
    std::size_t k;
    double mean_discarded_fraction;
    double mean_distance_computations;
    std::size_t scan_cost;
    double mean_result_size;
    double mean_radius;
    std::size_t mismatches;  // only meaningful with verify
};

// Per dimension: generate data and a separate query set from the family,
// build a pivot table, calibrate each query's radius so its true result size
// reaches the target (uncounted calibration scan), then average the pivot
// query statistics. Streams: data substream(seed, d), queries
// substream(seed, 2^32 + d), pivots substream(seed, 2^33 + d).
std::vector<SweepRow> degradation_sweep(const SweepConfig& config);

}  // namespace idim
