#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "idim/metric.hpp"

namespace idim {

// Added to pruning thresholds so floating-point rounding can only keep a
// candidate, never discard a true result.
inline constexpr double kPruningSlack = 1e-12;

struct QueryStats {
    std::uint64_t distance_computations = 0;
    std::size_t candidates_after_pruning = 0;
    double discarded_fraction = 0.0;  // (n - candidates) / n
    std::size_t result_size = 0;
};

struct RangeResult {
    std::vector<std::size_t> indices;  // ascending
    QueryStats stats;
};

// {i : d(q, point i) < eps}, n counted distances.
std::vector<std::size_t> sequential_scan(const Dataset& ds, const Point& q, double eps,
                                         CountingOracle& oracle);

// Smallest eps (to bisection precision) with |{i : d_i < eps}| >= target,
// found by 20 bisection steps on [0, max d_i * (1 + 1e-9) + tiny] against the
// scan distances. Throws InvalidInput when target is 0 or exceeds the count.
double calibrate_radius(std::span<const double> scan_distances, std::size_t target);

inline constexpr int kCalibrationIterations = 20;

}  // namespace idim
