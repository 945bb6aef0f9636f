#include "idim/dist_stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "idim/random.hpp"

namespace idim {

PairMode auto_pair_mode(std::size_t n, std::uint64_t seed) {
    const std::uint64_t pairs =
        n < 2 ? 0 : static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
    if (pairs <= kAllPairsLimit) return AllPairs{};
    return SampledPairs{kDefaultSampledPairs, seed};
}

DistanceSample pairwise_distances(const Dataset& ds, const PairMode& mode) {
    const std::size_t n = ds.size();
    if (n < 2) throw InvalidInput("pairwise distances need at least two points");

    DistanceSample out{{}, mode, n};
    if (std::holds_alternative<AllPairs>(mode)) {
        out.values.reserve(n * (n - 1) / 2);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) out.values.push_back(ds.distance(i, j));
        }
        return out;
    }

    const auto& sampled = std::get<SampledPairs>(mode);
    if (sampled.count == 0) throw InvalidInput("sampled pair count must be positive");
    Rng rng(sampled.seed);
    out.values.reserve(sampled.count);
    for (std::size_t s = 0; s < sampled.count; ++s) {
        std::size_t i, j;
        do {
            i = static_cast<std::size_t>(rng.below(n));
            j = static_cast<std::size_t>(rng.below(n));
        } while (i == j);
        if (i > j) std::swap(i, j);
        out.values.push_back(ds.distance(i, j));
    }
    return out;
}

double quantile_type7(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw InvalidInput("quantile of an empty sample");
    const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

BoxplotSummary boxplot_summary(std::span<const double> values) {
    if (values.size() < 5) throw InvalidInput("boxplot summary needs at least 5 values");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());

    BoxplotSummary b{};
    b.q1 = quantile_type7(sorted, 0.25);
    b.median = quantile_type7(sorted, 0.5);
    b.q3 = quantile_type7(sorted, 0.75);
    const double iqr = b.q3 - b.q1;
    b.lower_fence = b.q1 - 1.5 * iqr;
    b.upper_fence = b.q3 + 1.5 * iqr;

    // The quartiles lie inside the fences, so both whiskers exist.
    auto first_in = std::lower_bound(sorted.begin(), sorted.end(), b.lower_fence);
    auto last_in = std::upper_bound(sorted.begin(), sorted.end(), b.upper_fence);
    b.whisker_low = *first_in;
    b.whisker_high = *(last_in - 1);
    b.outliers.assign(sorted.begin(), first_in);
    b.outliers.insert(b.outliers.end(), last_in, sorted.end());
    return b;
}

MomentSummary moments(std::span<const double> values) {
    if (values.size() < 2) throw InvalidInput("moments need at least two values");
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) {
        const double t = v - mean;
        ss += t * t;
    }
    return {mean, ss / static_cast<double>(values.size() - 1), values.size()};
}

Estimate cnbym_dimension(const MomentSummary& m) {
    if (m.variance < 0.0 || m.count < 2) throw InvalidInput("invalid moment summary");
    if (m.variance == 0.0) return Estimate::degenerate();
    return Estimate::of(m.mean * m.mean / (2.0 * m.variance));
}

NnStatistics nn_statistics(const Dataset& ds, const Dataset& queries, CountingOracle& oracle,
                           const NnOptions& options) {
    check_oracle(oracle, ds);
    const std::size_t n = ds.size();
    double total = 0.0;
    for (const Point& q : queries.points()) {
        ds.check_compatible(q);
        bool skipped = false;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            if (options.leave_one_out && !skipped && ds[i] == q) {
                skipped = true;
                continue;
            }
            best = std::min(best, oracle.distance(q, ds[i]));
        }
        if (!std::isfinite(best)) {
            throw InvalidInput("leave-one-out leaves no data point for a query");
        }
        total += best;
    }

    NnStatistics out{total / static_cast<double>(queries.size()), 0.0, Estimate::degenerate(), AllPairs{}};
    if (n >= 2) {
        out.pair_mode = auto_pair_mode(n, options.pair_seed);
        const DistanceSample pairs = pairwise_distances(ds, out.pair_mode);
        double sum = 0.0;
        for (double v : pairs.values) sum += v;
        out.characteristic_size = sum / static_cast<double>(pairs.values.size());
    }
    if (out.characteristic_size > 0.0) {
        out.ratio = Estimate::of(out.mean_nn_distance / out.characteristic_size);
    }
    return out;
}

}  // namespace idim
