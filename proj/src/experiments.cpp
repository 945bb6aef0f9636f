#include "idim/experiments.hpp"

#include <algorithm>
#include <ostream>

#include <fmt/format.h>

#include "idim/doubling.hpp"
#include "idim/random.hpp"

namespace idim {

namespace {

std::string num(double v) { return fmt::format("{:.9g}", v); }

// Fixed stream tags so every runner derives the same streams for a seed.
constexpr std::uint64_t kQueryStream = std::uint64_t{1} << 32;
constexpr std::uint64_t kWitnessStream = std::uint64_t{1} << 33;
constexpr std::uint64_t kProbeStream = std::uint64_t{1} << 34;

std::uint64_t workload_stream(const Workload& w) {
    return (static_cast<std::uint64_t>(w.family) << 24) + w.dimension;
}

}  // namespace

std::vector<FigARow> run_fig_a(const std::vector<std::size_t>& dims, std::size_t n,
                               const std::vector<std::uint64_t>& seeds) {
    if (dims.empty()) throw InvalidInput("dimension list is empty");
    if (n < 5) throw InvalidInput("fig-a needs n >= 5");
    std::vector<FigARow> rows;
    for (std::uint64_t seed : seeds) {
        for (std::size_t d : dims) {
            const Dataset ds = generate({Family::UniformCube, d, n, substream_seed(seed, d)});
            DistanceSample s = pairwise_distances(ds, AllPairs{});
            const double diameter = diameter_upper_bound(ds).value;
            if (diameter > 0.0) {
                for (double& v : s.values) v /= diameter;
            }
            BoxplotSummary box = boxplot_summary(s);
            const double rel = box.median > 0.0 ? box.iqr() / box.median : 0.0;
            rows.push_back({seed, d, n, std::move(box), rel});
        }
    }
    return rows;
}

std::vector<FigBRow> run_fig_b(const std::vector<std::size_t>& dims, std::size_t n,
                               const std::vector<std::uint64_t>& seeds) {
    if (dims.empty()) throw InvalidInput("dimension list is empty");
    std::vector<FigBRow> rows;
    for (std::uint64_t seed : seeds) {
        for (std::size_t d : dims) {
            const Dataset ds = generate({Family::Gaussian, d, n, substream_seed(seed, d)});
            const DistanceSample s = pairwise_distances(ds, auto_pair_mode(n, substream_seed(seed, kQueryStream + d)));
            rows.push_back({seed, d, n, cnbym_dimension(moments(s))});
        }
    }
    return rows;
}

std::vector<FigCRow> run_fig_c(const std::vector<std::size_t>& dims, std::size_t n, std::size_t k,
                               std::size_t grid, std::uint64_t seed) {
    if (dims.empty()) throw InvalidInput("dimension list is empty");
    std::vector<FigCRow> rows;
    for (std::size_t d : dims) {
        const Dataset ds = generate({Family::HammingUniform, d, n, substream_seed(seed, d)});
        ConcentrationCurve empirical =
            empirical_concentration(ds, k, grid, substream_seed(seed, kWitnessStream + d));
        const Estimate dim = concentration_dimension(empirical);
        rows.push_back({d, n, k, std::move(empirical), chernoff_curve(d, grid), dim,
                        union_bound_slack(grid, k, n)});
    }
    return rows;
}

Workload parse_workload(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw InvalidInput(fmt::format("workload '{}' is not family:d", text));
    Workload w{parse_family(text.substr(0, colon)), 0};
    try {
        std::size_t used = 0;
        const std::string d = text.substr(colon + 1);
        w.dimension = std::stoul(d, &used);
        if (used != d.size()) throw InvalidInput("trailing characters");
    } catch (const std::exception&) {
        throw InvalidInput(fmt::format("workload '{}' has an invalid dimension", text));
    }
    if (w.dimension == 0) throw InvalidInput("workload dimension must be >= 1");
    return w;
}

std::string to_string(const Workload& w) { return fmt::format("{}:{}", to_string(w.family), w.dimension); }

std::vector<NetTreeRow> run_nettree_stats(const std::vector<Workload>& workloads, std::size_t n,
                                          std::size_t probes, std::size_t queries, std::size_t target,
                                          std::uint64_t seed, bool verify) {
    if (workloads.empty()) throw InvalidInput("workload list is empty");
    if (queries == 0) throw InvalidInput("query count must be >= 1");
    std::vector<NetTreeRow> rows;
    for (const Workload& w : workloads) {
        const std::uint64_t stream = workload_stream(w);
        const Dataset ds = generate({w.family, w.dimension, n, substream_seed(seed, stream)});
        const Dataset qs = generate({w.family, w.dimension, queries, substream_seed(seed, kQueryStream + stream)});
        const DoublingEstimate rho = doubling_estimate(ds, probes, substream_seed(seed, kProbeStream + stream));
        const BuiltNetTree built = build_net_tree(ds);

        NetTreeRow row{w, n, rho.rho_hat, built.stats, 0.0, n, 0, 0};
        CountingOracle oracle(ds.metric());
        std::vector<double> scan(n);
        for (const Point& q : qs.points()) {
            for (std::size_t i = 0; i < n; ++i) scan[i] = distance(ds.metric(), q, ds[i]);
            const double eps = calibrate_radius(scan, std::min(target, n));
            const RangeResult r = net_range_query(built.tree, ds, q, eps, oracle);
            row.mean_distance_computations += static_cast<double>(r.stats.distance_computations);
            if (verify) {
                CountingOracle scan_oracle(ds.metric());
                if (sequential_scan(ds, q, eps, scan_oracle) != r.indices) ++row.mismatches;
            }
        }
        row.mean_distance_computations /= static_cast<double>(qs.size());
        if (verify) row.invariant_violations = verify_net_tree(built.tree, ds).size();
        rows.push_back(row);
    }
    return rows;
}

EstimateReport run_estimate(const Dataset& ds, const EstimateOptions& options) {
    // Three points give the two pairwise distances a variance needs.
    if (ds.size() < 3) throw InvalidInput("estimate needs at least three points");
    EstimateReport r{};
    r.n = ds.size();
    r.dimension = ds.dimension();
    r.metric = std::string(to_string(ds.metric().kind()));

    CountingOracle oracle(ds.metric());
    NnOptions nn;
    nn.leave_one_out = true;
    nn.pair_seed = substream_seed(options.seed, 1);
    const NnStatistics stats = nn_statistics(ds, ds, oracle, nn);
    r.characteristic_size = stats.characteristic_size;
    r.mean_nn_distance = stats.mean_nn_distance;
    r.nn_ratio = stats.ratio;
    if (const auto* sampled = std::get_if<SampledPairs>(&stats.pair_mode)) {
        r.pair_mode = fmt::format("sampled-pairs:{}", sampled->count);
    } else {
        r.pair_mode = "all-pairs";
    }
    r.dim_cnbym = cnbym_dimension(moments(pairwise_distances(ds, stats.pair_mode)));

    const DiameterBound bound = diameter_upper_bound(ds);
    r.diameter_bound = bound.value;
    r.diameter_method = std::string(to_string(bound.method));
    r.witnesses = std::min(options.witnesses, ds.size());
    if (bound.value > 0.0) {
        const Dataset normalized = ds.rescaled(bound.value);
        r.dim_alpha = concentration_dimension(
            empirical_concentration(normalized, r.witnesses, options.grid, substream_seed(options.seed, 2)));
    } else {
        r.dim_alpha = Estimate::degenerate();
    }
    r.rho_hat = doubling_estimate(ds, options.probes, substream_seed(options.seed, 3)).rho_hat;
    return r;
}

void write_fig_a_csv(std::ostream& out, const std::vector<FigARow>& rows) {
    out << "seed,d,n,median,q1,q3,whisker_low,whisker_high,outlier_count,relative_iqr\n";
    for (const auto& r : rows) {
        out << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", r.seed, r.dimension, r.n, num(r.box.median),
                           num(r.box.q1), num(r.box.q3), num(r.box.whisker_low), num(r.box.whisker_high),
                           r.box.outliers.size(), num(r.relative_iqr));
    }
}

void write_fig_b_csv(std::ostream& out, const std::vector<FigBRow>& rows) {
    out << "seed,d,n,dim_cnbym\n";
    for (const auto& r : rows) {
        out << fmt::format("{},{},{},{}\n", r.seed, r.dimension, r.n, r.dim_cnbym.to_string());
    }
}

void write_fig_c_csv(std::ostream& out, const std::vector<FigCRow>& rows) {
    out << "d,n,k,eps,alpha_hat,chernoff_bound,slack,dim_alpha\n";
    for (const auto& r : rows) {
        const auto& grid = r.empirical.grid();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            out << fmt::format("{},{},{},{},{},{},{},{}\n", r.dimension, r.n, r.k, num(grid[i]),
                               num(r.empirical.alpha()[i]), num(r.bound.alpha()[i]), num(r.slack),
                               r.dim_alpha.to_string());
        }
    }
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, std::size_t target) {
    out << "family,d,n,k,target,discarded_fraction,distance_computations,scan_cost,result_size,radius\n";
    for (const auto& r : rows) {
        out << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", to_string(r.family), r.dimension, r.n, r.k,
                           target, num(r.mean_discarded_fraction), num(r.mean_distance_computations),
                           r.scan_cost, num(r.mean_result_size), num(r.mean_radius));
    }
}

void write_nettree_csv(std::ostream& out, const std::vector<NetTreeRow>& rows) {
    out << "workload,n,rho_hat,max_degree,depth,node_count,distance_computations,scan_cost\n";
    for (const auto& r : rows) {
        out << fmt::format("{},{},{},{},{},{},{},{}\n", to_string(r.workload), r.n, num(r.rho_hat),
                           r.stats.max_degree, r.stats.depth, r.stats.node_count,
                           num(r.mean_distance_computations), r.scan_cost);
    }
}

void write_estimate_csv(std::ostream& out, const EstimateReport& r, const EstimateOptions& o) {
    out << "key,value\n";
    out << fmt::format("n,{}\n", r.n);
    out << fmt::format("dimension,{}\n", r.dimension);
    out << fmt::format("metric,{}\n", r.metric);
    out << fmt::format("pair_mode,{}\n", r.pair_mode);
    out << fmt::format("characteristic_size,{}\n", num(r.characteristic_size));
    out << fmt::format("mean_nn_distance,{}\n", num(r.mean_nn_distance));
    out << fmt::format("nn_ratio,{}\n", r.nn_ratio.to_string());
    out << fmt::format("dim_cnbym,{}\n", r.dim_cnbym.to_string());
    out << fmt::format("diameter_bound,{}\n", num(r.diameter_bound));
    out << fmt::format("diameter_method,{}\n", r.diameter_method);
    out << fmt::format("dim_alpha,{}\n", r.dim_alpha.to_string());
    out << fmt::format("witnesses,{}\n", r.witnesses);
    out << fmt::format("grid,{}\n", o.grid);
    out << fmt::format("rho_hat,{}\n", num(r.rho_hat));
    out << fmt::format("probes,{}\n", o.probes);
    out << fmt::format("rho_hat_method,greedy-radius-halving-probes\n");
}

}  // namespace idim
