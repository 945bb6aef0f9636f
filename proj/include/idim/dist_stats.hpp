#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "idim/error.hpp"
#include "idim/metric.hpp"

namespace idim {

struct AllPairs {};

// Unordered pairs i < j drawn uniformly, with replacement, from a private
// stream seeded by `seed`.
struct SampledPairs {
    std::size_t count;
    std::uint64_t seed;
};

using PairMode = std::variant<AllPairs, SampledPairs>;

inline constexpr std::size_t kAllPairsLimit = 5'000'000;
inline constexpr std::size_t kDefaultSampledPairs = 5'000'000;

// AllPairs while n(n-1)/2 <= kAllPairsLimit, else SampledPairs(5e6, seed).
PairMode auto_pair_mode(std::size_t n, std::uint64_t seed);

struct DistanceSample {
    std::vector<double> values;
    PairMode mode;
    std::size_t source_size;
};

// AllPairs emits pairs in (i, j) lexicographic order, i < j.
DistanceSample pairwise_distances(const Dataset& ds, const PairMode& mode);

// Linear interpolation between order statistics (Hyndman-Fan type 7).
// `sorted` must be ascending and nonempty; p in [0, 1].
double quantile_type7(std::span<const double> sorted, double p);

struct BoxplotSummary {
    double median;
    double q1;
    double q3;
    double lower_fence;   // q1 - 1.5 IQR
    double upper_fence;   // q3 + 1.5 IQR
    double whisker_low;   // smallest value >= lower_fence
    double whisker_high;  // largest value <= upper_fence
    std::vector<double> outliers;  // ascending, strictly outside the fences

    double iqr() const { return q3 - q1; }
};

// Tukey boxplot with type-7 quartiles. Needs at least 5 values.
BoxplotSummary boxplot_summary(std::span<const double> values);
inline BoxplotSummary boxplot_summary(const DistanceSample& s) { return boxplot_summary(s.values); }

struct MomentSummary {
    double mean;
    double variance;  // unbiased, divides by count - 1
    std::size_t count;
};

MomentSummary moments(std::span<const double> values);
inline MomentSummary moments(const DistanceSample& s) { return moments(s.values); }

// mean^2 / (2 variance); degenerate when variance is 0.
Estimate cnbym_dimension(const MomentSummary& m);

struct NnOptions {
    // Skip one data point identical to the query when searching its
    // nearest neighbour (use when queries are drawn from the dataset).
    bool leave_one_out = false;
    // Seed for SampledPairs when the characteristic size is estimated.
    std::uint64_t pair_seed = 42;
};

struct NnStatistics {
    double mean_nn_distance;     // average over queries of min distance to ds
    double characteristic_size;  // mean pairwise distance of ds
    Estimate ratio;              // mean_nn_distance / characteristic_size
    PairMode pair_mode;
};

// Nearest-neighbour distances go through the oracle; the characteristic size
// uses auto_pair_mode on ds and is not counted.
NnStatistics nn_statistics(const Dataset& ds, const Dataset& queries, CountingOracle& oracle,
                           const NnOptions& options = {});

}  // namespace idim
