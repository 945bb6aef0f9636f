#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "idim/concentration.hpp"
#include "idim/degradation.hpp"
#include "idim/dist_stats.hpp"
#include "idim/generators.hpp"
#include "idim/net_tree.hpp"

namespace idim {

// Convention tags echoed into every output header.
inline constexpr const char* kConventions =
    "quartile=type7 fences=tukey-1.5 variance=unbiased normalization=diameter-upper-bound "
    "rng=mt19937_64+splitmix64-substreams normal=box-muller pruning-slack=1e-12";
inline constexpr int kOutputFormatVersion = 1;

// Pairwise distance boxplots of the uniform cube, distances divided by the
// exact diameter of each sample.
struct FigARow {
    std::uint64_t seed;
    std::size_t dimension;
    std::size_t n;
    BoxplotSummary box;
    double relative_iqr;  // (q3 - q1) / median
};
std::vector<FigARow> run_fig_a(const std::vector<std::size_t>& dims, std::size_t n,
                               const std::vector<std::uint64_t>& seeds);

// CNBYM dimension of Gaussian samples.
struct FigBRow {
    std::uint64_t seed;
    std::size_t dimension;
    std::size_t n;
    Estimate dim_cnbym;
};
std::vector<FigBRow> run_fig_b(const std::vector<std::size_t>& dims, std::size_t n,
                               const std::vector<std::uint64_t>& seeds);

// Empirical concentration of Hamming cubes against the Chernoff bound.
struct FigCRow {
    std::size_t dimension;
    std::size_t n;
    std::size_t k;
    ConcentrationCurve empirical;
    ConcentrationCurve bound;
    Estimate dim_alpha;
    double slack;  // union_bound_slack(grid, k, n)
};
std::vector<FigCRow> run_fig_c(const std::vector<std::size_t>& dims, std::size_t n, std::size_t k,
                               std::size_t grid, std::uint64_t seed);

struct Workload {
    Family family;
    std::size_t dimension;
};
// "family:d", e.g. "uniform-cube:8".
Workload parse_workload(const std::string& text);
std::string to_string(const Workload& w);

struct NetTreeRow {
    Workload workload;
    std::size_t n;
    double rho_hat;
    TreeStats stats;
    double mean_distance_computations;
    std::size_t scan_cost;
    std::size_t mismatches;           // net query vs scan
    std::size_t invariant_violations; // filled only with verify
};
std::vector<NetTreeRow> run_nettree_stats(const std::vector<Workload>& workloads, std::size_t n,
                                          std::size_t probes, std::size_t queries, std::size_t target,
                                          std::uint64_t seed, bool verify);

struct EstimateOptions {
    std::uint64_t seed = 42;
    std::size_t witnesses = 32;
    std::size_t grid = kDefaultGridSize;
    std::size_t probes = 100;
};

struct EstimateReport {
    std::size_t n;
    std::size_t dimension;
    std::string metric;
    double characteristic_size;
    double mean_nn_distance;
    Estimate nn_ratio;
    Estimate dim_cnbym;
    double diameter_bound;
    std::string diameter_method;
    Estimate dim_alpha;
    double rho_hat;
    std::string pair_mode;
    std::size_t witnesses;
};
EstimateReport run_estimate(const Dataset& ds, const EstimateOptions& options);

// CSV writers; numbers use 9 significant digits.
void write_fig_a_csv(std::ostream& out, const std::vector<FigARow>& rows);
void write_fig_b_csv(std::ostream& out, const std::vector<FigBRow>& rows);
void write_fig_c_csv(std::ostream& out, const std::vector<FigCRow>& rows);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, std::size_t target);
void write_nettree_csv(std::ostream& out, const std::vector<NetTreeRow>& rows);
void write_estimate_csv(std::ostream& out, const EstimateReport& report, const EstimateOptions& options);

}  // namespace idim
