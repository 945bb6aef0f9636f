#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>

#include "cli.hpp"
#include "idim/error.hpp"
#include "idim/experiments.hpp"

namespace idim {
namespace {

struct CliRun {
    int status;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
    const auto p = std::filesystem::temp_directory_path() / ("idim_test_" + name);
    std::ofstream(p) << body;
    return p;
}

TEST(FigA, RelativeIqrShrinks) {
    const auto rows = run_fig_a({2, 2000}, 100, {42});
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_LT(rows[1].relative_iqr, rows[0].relative_iqr);
    for (const auto& r : rows) {
        EXPECT_EQ(r.n, 100u);
        EXPECT_LE(r.box.whisker_high, 1.0);
        EXPECT_DOUBLE_EQ(r.relative_iqr, (r.box.q3 - r.box.q1) / r.box.median);
    }
}

TEST(FigA, HeaderEchoesDefaultN) {
    const CliRun r = cli({"fig-a", "--d", "2", "20"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.out.rfind("# idim fig-a\n", 0), 0u);
    EXPECT_NE(r.out.find("# n=100\n"), std::string::npos);
    EXPECT_NE(r.out.find("# seeds=42\n"), std::string::npos);
    EXPECT_NE(r.out.find("quartile=type7"), std::string::npos);
}

TEST(FigB, IncreasingAndAnalyticAtOne) {
    const auto rows = run_fig_b({1, 2, 5, 10, 20, 50}, 3000, {42});
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_GT(rows[i].dim_cnbym.value(), rows[i - 1].dim_cnbym.value());
    }
    // |X - Y| for standard normals: E = 2 / sqrt(pi), var = 2 - 4 / pi.
    const double e = 2.0 / std::sqrt(std::numbers::pi);
    const double analytic = e * e / (2.0 * (2.0 - 4.0 / std::numbers::pi));
    EXPECT_NEAR(analytic, 0.87597, 1e-5);
    EXPECT_GE(rows[0].dim_cnbym.value(), 0.8);
    EXPECT_LE(rows[0].dim_cnbym.value(), 1.2);
}

double sample_variance(const std::vector<double>& v) {
    const double m = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / (v.size() - 1);
}

TEST(FigB, DoublingNHalvesSpread) {
    std::vector<std::uint64_t> seeds(20);
    std::iota(seeds.begin(), seeds.end(), 1);
    std::vector<double> small, large;
    for (const auto& r : run_fig_b({1}, 3000, seeds)) small.push_back(r.dim_cnbym.value());
    for (const auto& r : run_fig_b({1}, 6000, seeds)) large.push_back(r.dim_cnbym.value());
    const double ratio = sample_variance(large) / sample_variance(small);
    RecordProperty("variance_ratio", std::to_string(ratio));
    EXPECT_GE(ratio, 0.3);
    EXPECT_LE(ratio, 0.8);
}

TEST(FigC, BelowBoundAndOrdered) {
    const auto rows = run_fig_c({16, 64, 256}, 20000, 32, kDefaultGridSize, 42);
    ASSERT_EQ(rows.size(), 3u);
    for (const auto& r : rows) {
        for (std::size_t g = 0; g < r.empirical.size(); ++g) {
            const double eps = r.empirical.grid()[g];
            if (eps < 0.05 - 1e-12) continue;
            EXPECT_LE(r.empirical.alpha()[g], r.bound.alpha()[g] + r.slack);
        }
    }
    EXPECT_LT(rows[2].empirical.alpha_near(0.2), rows[0].empirical.alpha_near(0.2));
    EXPECT_LT(rows[0].dim_alpha.value(), rows[1].dim_alpha.value());
    EXPECT_LT(rows[1].dim_alpha.value(), rows[2].dim_alpha.value());
}

TEST(Workload, Parse) {
    const Workload w = parse_workload("hamming:64");
    EXPECT_EQ(w.family, Family::HammingUniform);
    EXPECT_EQ(w.dimension, 64u);
    EXPECT_EQ(parse_workload(to_string(w)).dimension, 64u);
    EXPECT_THROW(parse_workload("hamming"), InvalidInput);
    EXPECT_THROW(parse_workload("hamming:0"), InvalidInput);
    EXPECT_THROW(parse_workload("hamming:x"), InvalidInput);
    EXPECT_THROW(parse_workload("torus:3"), InvalidInput);
}

TEST(NetTreeStats, SmallRunVerifies) {
    const auto rows = run_nettree_stats({{Family::UniformCube, 2}, {Family::HammingUniform, 16}}, 300, 20, 20, 5,
                                        42, true);
    for (const auto& r : rows) {
        EXPECT_EQ(r.mismatches, 0u);
        EXPECT_EQ(r.invariant_violations, 0u);
        EXPECT_EQ(r.scan_cost, 300u);
    }
}

TEST(Estimate, CollinearFile) {
    const auto p = temp_file("collinear.txt", "0\n1\n3\n");
    const CliRun r = cli({"estimate", "--in", p.string(), "--metric", "euclidean"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_NE(r.out.find("characteristic_size,2\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("dim_cnbym,2\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("# seed=42\n"), std::string::npos);
}

TEST(Estimate, ReportFields) {
    const Dataset ds({Point::real({0}), Point::real({1}), Point::real({3})}, MetricDescriptor());
    const EstimateReport r = run_estimate(ds, {});
    EXPECT_DOUBLE_EQ(r.characteristic_size, 2.0);
    EXPECT_DOUBLE_EQ(r.dim_cnbym.value(), 2.0);
    // Leave-one-out nearest neighbours: 1, 1, 2.
    EXPECT_DOUBLE_EQ(r.mean_nn_distance, 4.0 / 3.0);
    EXPECT_EQ(r.diameter_bound, 3.0);
    EXPECT_GE(r.rho_hat, 0.0);
}

TEST(Cli, ExitStatus) {
    EXPECT_EQ(cli({}).status, cli::kExitInvalidInput);
    EXPECT_EQ(cli({"bogus"}).status, cli::kExitInvalidInput);
    EXPECT_EQ(cli({"fig-a", "--n", "abc"}).status, cli::kExitInvalidInput);
    EXPECT_EQ(cli({"generate", "--family", "sphere"}).status, cli::kExitInvalidInput);
    EXPECT_EQ(cli({"generate", "--d", "0"}).status, cli::kExitInvalidInput);
    EXPECT_EQ(cli({"pivot-sweep", "--policy", "best"}).status, cli::kExitInvalidInput);
    EXPECT_EQ(cli({"estimate", "--metric", "euclidean"}).status, cli::kExitInvalidInput);
    EXPECT_EQ(cli({"estimate", "--in", "/nonexistent/file", "--metric", "euclidean"}).status,
              cli::kExitInvalidInput);
    EXPECT_EQ(cli({"--help"}).status, cli::kExitOk);
    EXPECT_EQ(cli({"fig-b", "--help"}).status, cli::kExitOk);
}

TEST(Cli, EmptyFileIsParseError) {
    const auto p = temp_file("empty.txt", "");
    const CliRun r = cli({"estimate", "--in", p.string(), "--metric", "euclidean"});
    EXPECT_EQ(r.status, cli::kExitInvalidInput);
    EXPECT_NE(r.err.find("empty"), std::string::npos);
}

TEST(Cli, BadLineIsNamed) {
    const auto p = temp_file("badline.txt", "0 1\n2 3\n4 oops\n");
    const CliRun r = cli({"estimate", "--in", p.string(), "--metric", "euclidean"});
    EXPECT_EQ(r.status, cli::kExitInvalidInput);
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(Cli, MetricMismatch) {
    const auto p = temp_file("bits.txt", "0101\n1100\n0000\n");
    EXPECT_EQ(cli({"estimate", "--in", p.string(), "--metric", "hamming"}).status, cli::kExitOk);
    const auto q = temp_file("reals.txt", "0.5 1\n2 3\n");
    EXPECT_EQ(cli({"estimate", "--in", q.string(), "--metric", "hamming"}).status, cli::kExitInvalidInput);
    EXPECT_EQ(cli({"estimate", "--in", q.string(), "--metric", "cosine"}).status, cli::kExitInvalidInput);
    const auto two = temp_file("two.txt", "0\n1\n");
    EXPECT_EQ(cli({"estimate", "--in", two.string(), "--metric", "euclidean"}).status, cli::kExitInvalidInput);
}

TEST(Cli, GenerateRoundTripsThroughEstimate) {
    const auto p = std::filesystem::temp_directory_path() / "idim_test_gen.txt";
    ASSERT_EQ(cli({"generate", "--family", "gaussian", "--d", "3", "--n", "50", "--seed", "9", "--out", p.string()})
                  .status,
              0);
    const CliRun r = cli({"estimate", "--in", p.string(), "--metric", "euclidean", "--self-test"});
    EXPECT_EQ(r.status, 0) << r.err;
    EXPECT_NE(r.out.find("n,50\n"), std::string::npos) << r.out;
}

TEST(Cli, SelfTestPasses) {
    EXPECT_EQ(cli({"fig-a", "--d", "2", "50", "--self-test"}).status, 0);
    EXPECT_EQ(cli({"fig-b", "--d", "1", "3", "--n", "300", "--self-test"}).status, 0);
    EXPECT_EQ(cli({"fig-c", "--d", "16", "--n", "2000", "--k", "4", "--self-test"}).status, 0);
    EXPECT_EQ(cli({"pivot-sweep", "--d", "2", "16", "--n", "500", "--k", "8", "--queries", "10", "--self-test"})
                  .status,
              0);
    EXPECT_EQ(cli({"nettree-stats", "--n", "300", "--queries", "10", "--probes", "10", "--self-test"}).status, 0);
}

TEST(Cli, ByteIdenticalReruns) {
    const std::vector<std::vector<std::string>> commands{
        {"fig-a", "--d", "2", "20", "--seed", "1", "2"},
        {"fig-b", "--d", "1", "2", "--n", "400"},
        {"fig-c", "--d", "16", "--n", "1000", "--k", "4", "--grid", "21"},
        {"generate", "--family", "hamming", "--d", "70", "--n", "20"},
    };
    for (const auto& args : commands) {
        const CliRun a = cli(args);
        const CliRun b = cli(args);
        ASSERT_EQ(a.status, 0) << a.err;
        EXPECT_EQ(a.out, b.out) << args[0];
    }
}

}  // namespace
}  // namespace idim
