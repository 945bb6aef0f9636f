#include "idim/degradation.hpp"

#include "idim/error.hpp"
#include "idim/random.hpp"

namespace idim {

std::vector<SweepRow> degradation_sweep(const SweepConfig& config) {
    if (config.target_result_size == 0) throw InvalidInput("target result size must be >= 1");
    if (config.queries == 0) throw InvalidInput("query count must be >= 1");
    if (config.dimensions.empty()) throw InvalidInput("dimension list is empty");

    std::vector<SweepRow> rows;
    for (std::size_t d : config.dimensions) {
        const Dataset data = generate({config.family, d, config.n, substream_seed(config.seed, d)});
        const Dataset queries = generate(
            {config.family, d, config.queries, substream_seed(config.seed, (std::uint64_t{1} << 32) + d)});
        const std::uint64_t pivot_seed = substream_seed(config.seed, (std::uint64_t{1} << 33) + d);
        const PivotPolicy policy = config.farthest_first ? PivotPolicy{FarthestFirst{pivot_seed, {}}}
                                                         : PivotPolicy{RandomPivots{pivot_seed}};

        CountingOracle build_oracle(data.metric());
        const PivotIndex ix = build_pivot_index(data, config.k, policy, build_oracle);

        CountingOracle query_oracle(data.metric());
        std::vector<double> scan(data.size());
        SweepRow row{config.family, d, data.size(), config.k, 0.0, 0.0, data.size(), 0.0, 0.0, 0};
        // Integer totals so equal discard counts give identical means.
        std::uint64_t discarded = 0;
        for (const Point& q : queries.points()) {
            for (std::size_t i = 0; i < data.size(); ++i) scan[i] = distance(data.metric(), q, data[i]);
            const double eps = calibrate_radius(scan, config.target_result_size);
            const RangeResult r = range_query(ix, data, q, eps, query_oracle);
            discarded += data.size() - r.stats.candidates_after_pruning;
            row.mean_distance_computations += static_cast<double>(r.stats.distance_computations);
            row.mean_result_size += static_cast<double>(r.stats.result_size);
            row.mean_radius += eps;
            if (config.verify) {
                CountingOracle scan_oracle(data.metric());
                if (sequential_scan(data, q, eps, scan_oracle) != r.indices) ++row.mismatches;
            }
        }
        const double m = static_cast<double>(queries.size());
        row.mean_discarded_fraction = static_cast<double>(discarded) / (m * static_cast<double>(data.size()));
        row.mean_distance_computations /= m;
        row.mean_result_size /= m;
        row.mean_radius /= m;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace idim
