#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "idim/dataset_io.hpp"
#include "idim/doubling.hpp"
#include "idim/error.hpp"
#include "idim/experiments.hpp"
#include "idim/pivot_index.hpp"

namespace idim::cli {

namespace {

struct Options {
    std::string family;
    std::vector<std::size_t> dims;
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<std::uint64_t> seeds;
    std::size_t grid = kDefaultGridSize;
    std::string metric;
    std::string in;
    std::string out;
    bool self_test = false;
    std::size_t queries = 0;
    std::size_t target = 10;
    std::string policy = "random";
    std::size_t probes = 100;
    std::vector<std::string> workloads;
};

std::vector<std::size_t> range_list(std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> v(hi - lo + 1);
    std::iota(v.begin(), v.end(), lo);
    return v;
}

void check(bool ok, const std::string& what) {
    if (!ok) throw InvariantViolation(what);
}

class Header {
public:
    explicit Header(const std::string& command) { text_ = fmt::format("# idim {}\n", command); }
    template <typename T>
    Header& add(const std::string& key, const T& value) {
        text_ += fmt::format("# {}={}\n", key, value);
        return *this;
    }
    std::string str() const {
        return text_ + fmt::format("# conventions: {}\n# format={}\n", kConventions, kOutputFormatVersion);
    }

private:
    std::string text_;
};

template <typename Range>
std::string joined(const Range& values) {
    return fmt::format("{}", fmt::join(values, ","));
}

std::size_t or_default(std::size_t value, std::size_t fallback) { return value == 0 ? fallback : value; }

std::string run_fig_a_cmd(const Options& o) {
    const auto dims = o.dims.empty() ? std::vector<std::size_t>{2, 20, 200, 2000} : o.dims;
    const std::size_t n = or_default(o.n, 100);
    const auto rows = run_fig_a(dims, n, o.seeds);
    if (o.self_test) {
        for (const auto& r : rows) {
            const auto& b = r.box;
            check(b.q1 <= b.median && b.median <= b.q3, "fig-a: quartiles out of order");
            check(b.whisker_low >= b.lower_fence && b.whisker_high <= b.upper_fence, "fig-a: whisker outside fences");
            for (double v : b.outliers) check(v < b.lower_fence || v > b.upper_fence, "fig-a: outlier inside fences");
        }
    }
    std::ostringstream s;
    s << Header("fig-a").add("family", "uniform-cube").add("n", n).add("d", joined(dims))
             .add("seeds", joined(o.seeds)).add("distance_normalization", "divide-by-exact-diameter")
             .str();
    write_fig_a_csv(s, rows);
    return s.str();
}

std::string run_fig_b_cmd(const Options& o) {
    const auto dims = o.dims.empty() ? range_list(1, 50) : o.dims;
    const std::size_t n = or_default(o.n, 3000);
    const auto rows = run_fig_b(dims, n, o.seeds);
    if (o.self_test) {
        for (const auto& r : rows) {
            check(r.dim_cnbym.is_degenerate() || r.dim_cnbym.value() > 0.0, "fig-b: nonpositive dimension");
        }
    }
    std::ostringstream s;
    s << Header("fig-b").add("family", "gaussian").add("n", n).add("d", joined(dims))
             .add("seeds", joined(o.seeds)).str();
    write_fig_b_csv(s, rows);
    return s.str();
}

std::string run_fig_c_cmd(const Options& o) {
    const auto dims = o.dims.empty() ? std::vector<std::size_t>{16, 64, 128, 256} : o.dims;
    const std::size_t n = or_default(o.n, 20000);
    const std::size_t k = or_default(o.k, 32);
    const auto rows = run_fig_c(dims, n, k, o.grid, o.seeds.front());
    if (o.self_test) {
        for (const auto& r : rows) {
            const auto& a = r.empirical.alpha();
            for (std::size_t i = 1; i < a.size(); ++i) check(a[i] <= a[i - 1], "fig-c: curve increases");
        }
    }
    std::ostringstream s;
    s << Header("fig-c").add("family", "hamming").add("n", n).add("k", k).add("grid", o.grid)
             .add("d", joined(dims)).add("seed", o.seeds.front())
             .add("witnesses", "distance-functions-to-seeded-anchors").add("quadrature", "trapezoid").str();
    write_fig_c_csv(s, rows);
    return s.str();
}

std::string run_sweep_cmd(const Options& o, const std::string& command, const std::vector<Family>& families) {
    SweepConfig base;
    if (!o.dims.empty()) base.dimensions = o.dims;
    base.n = or_default(o.n, 10000);
    base.k = or_default(o.k, 32);
    base.target_result_size = o.target;
    base.queries = or_default(o.queries, 100);
    base.seed = o.seeds.front();
    if (o.policy == "farthest") {
        base.farthest_first = true;
    } else if (o.policy != "random") {
        throw InvalidInput(fmt::format("unknown pivot policy '{}'", o.policy));
    }
    base.verify = o.self_test;

    std::vector<SweepRow> rows;
    std::vector<std::string> family_names;
    for (Family f : families) {
        SweepConfig c = base;
        c.family = f;
        family_names.emplace_back(to_string(f));
        for (const auto& r : degradation_sweep(c)) rows.push_back(r);
    }
    if (o.self_test) {
        for (const auto& r : rows) {
            check(r.mismatches == 0, "pivot index disagrees with sequential scan");
            check(r.mean_distance_computations <= static_cast<double>(r.n + r.k), "pivot cost above n + k");
        }
    }
    std::ostringstream s;
    s << Header(command).add("families", joined(family_names)).add("n", base.n).add("k", base.k)
             .add("d", joined(base.dimensions)).add("target", base.target_result_size)
             .add("queries", base.queries).add("policy", o.policy).add("seed", base.seed)
             .add("calibration", fmt::format("bisection-{}", kCalibrationIterations)).str();
    write_sweep_csv(s, rows, base.target_result_size);
    return s.str();
}

std::string run_nettree_cmd(const Options& o) {
    std::vector<Workload> workloads;
    for (const auto& w : o.workloads) workloads.push_back(parse_workload(w));
    if (workloads.empty() && !o.family.empty()) {
        for (std::size_t d : o.dims) workloads.push_back({parse_family(o.family), d});
    }
    if (workloads.empty()) {
        workloads = {{Family::UniformCube, 1}, {Family::UniformCube, 8}, {Family::HammingUniform, 64}};
    }
    const std::size_t n = or_default(o.n, 2000);
    const std::size_t queries = or_default(o.queries, 100);
    const auto rows = run_nettree_stats(workloads, n, o.probes, queries, o.target, o.seeds.front(), o.self_test);
    if (o.self_test) {
        for (const auto& r : rows) {
            check(r.mismatches == 0, "net tree disagrees with sequential scan");
            check(r.invariant_violations == 0, "net tree invariants violated");
        }
    }
    std::vector<std::string> names;
    for (const auto& w : workloads) names.push_back(to_string(w));
    std::ostringstream s;
    s << Header("nettree-stats").add("workloads", joined(names)).add("n", n).add("probes", o.probes)
             .add("queries", queries).add("target", o.target).add("seed", o.seeds.front()).str();
    write_nettree_csv(s, rows);
    return s.str();
}

std::string run_estimate_cmd(const Options& o) {
    if (o.in.empty()) throw InvalidInput("estimate requires --in");
    if (o.metric.empty()) throw InvalidInput("estimate requires --metric");
    const Dataset ds = read_dataset_file(o.in, MetricDescriptor(parse_metric_kind(o.metric)));
    EstimateOptions eo;
    eo.seed = o.seeds.front();
    eo.witnesses = or_default(o.k, 32);
    eo.grid = o.grid;
    eo.probes = o.probes;
    const EstimateReport report = run_estimate(ds, eo);
    if (o.self_test) {
        check(report.rho_hat >= 0.0 && report.rho_hat <= std::log2(static_cast<double>(report.n)) + 1e-12,
              "estimate: rho_hat outside [0, log2 n]");
    }
    std::ostringstream s;
    s << Header("estimate").add("in", o.in).add("metric", o.metric).add("seed", eo.seed)
             .add("witnesses", eo.witnesses).add("grid", eo.grid).add("probes", eo.probes)
             .add("nn_queries", "dataset-leave-one-out").str();
    write_estimate_csv(s, report, eo);
    return s.str();
}

std::string run_generate_cmd(const Options& o) {
    GeneratorSpec spec;
    spec.family = o.family.empty() ? Family::UniformCube : parse_family(o.family);
    if (o.dims.size() > 1) throw InvalidInput("generate takes a single --d");
    spec.dimension = o.dims.empty() ? 2 : o.dims.front();
    spec.count = or_default(o.n, 100);
    spec.seed = o.seeds.front();
    const Dataset ds = generate(spec);
    if (o.self_test) check(generate(spec).points() == ds.points(), "generate: not deterministic");
    std::ostringstream s;
    s << Header("generate").add("family", to_string(spec.family)).add("d", spec.dimension)
             .add("n", spec.count).add("seed", spec.seed)
             .add("metric", to_string(ds.metric().kind())).str();
    write_dataset(s, ds);
    return s.str();
}

void add_common(CLI::App* app, Options& o) {
    app->add_option("--family", o.family, "Workload family: uniform-cube, gaussian, hamming");
    app->add_option("--d", o.dims, "Dimension(s), space separated or repeated");
    app->add_option("--n", o.n, "Dataset size (0 = command default)");
    app->add_option("--k", o.k, "Pivots (sweeps) or witnesses (fig-c, estimate)");
    app->add_option("--seed", o.seeds, "Seed(s); default 42");
    app->add_option("--grid", o.grid, "Concentration grid size")->capture_default_str();
    app->add_option("--metric", o.metric, "Metric for --in: euclidean, manhattan, chebyshev, hamming");
    app->add_option("--in", o.in, "Input dataset file");
    app->add_option("--out", o.out, "Output file (default stdout)");
    app->add_flag("--self-test", o.self_test, "Check invariants; exit 2 on violation");
    app->add_option("--queries", o.queries, "Query count for index experiments");
    app->add_option("--target", o.target, "Calibrated true result size per query")->capture_default_str();
    app->add_option("--policy", o.policy, "Pivot policy: random, farthest")->capture_default_str();
    app->add_option("--probes", o.probes, "Ball probes for the doubling estimate")->capture_default_str();
    app->add_option("--workload", o.workloads, "nettree-stats workload family:d (repeatable)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Intrinsic dimensionality estimators and instrumented metric indexes"};
    app.require_subcommand(1);
    Options o;

    struct Command {
        const char* name;
        const char* help;
    };
    const Command commands[] = {
        {"fig-a", "Pairwise distance boxplots of the uniform cube. CSV: seed,d,n,median,q1,q3,whisker_low,"
                  "whisker_high,outlier_count,relative_iqr"},
        {"fig-b", "CNBYM dimension of Gaussian samples. CSV: seed,d,n,dim_cnbym"},
        {"fig-c", "Empirical Hamming concentration vs Chernoff bound. CSV: d,n,k,eps,alpha_hat,"
                  "chernoff_bound,slack,dim_alpha"},
        {"fig-d", "Pivot degradation sweep over uniform-cube and hamming. CSV as pivot-sweep"},
        {"pivot-sweep", "Pivot degradation sweep for one family. CSV: family,d,n,k,target,"
                        "discarded_fraction,distance_computations,scan_cost,result_size,radius"},
        {"nettree-stats", "Net tree shape and query cost. CSV: workload,n,rho_hat,max_degree,depth,"
                          "node_count,distance_computations,scan_cost"},
        {"estimate", "All estimators on a dataset file. CSV: key,value"},
        {"generate", "Dump a synthetic dataset in the ingestion format"},
    };
    for (const auto& c : commands) add_common(app.add_subcommand(c.name, c.help), o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInvalidInput;
    }
    if (o.seeds.empty()) o.seeds.push_back(42);

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        std::string text;
        if (command == "fig-a") {
            text = run_fig_a_cmd(o);
        } else if (command == "fig-b") {
            text = run_fig_b_cmd(o);
        } else if (command == "fig-c") {
            text = run_fig_c_cmd(o);
        } else if (command == "fig-d") {
            text = run_sweep_cmd(o, command, {Family::UniformCube, Family::HammingUniform});
        } else if (command == "pivot-sweep") {
            text = run_sweep_cmd(o, command, {o.family.empty() ? Family::UniformCube : parse_family(o.family)});
        } else if (command == "nettree-stats") {
            text = run_nettree_cmd(o);
        } else if (command == "estimate") {
            text = run_estimate_cmd(o);
        } else {
            text = run_generate_cmd(o);
        }
        if (o.out.empty()) {
            out << text;
        } else {
            std::ofstream f(o.out, std::ios::binary);
            if (!f) throw InvalidInput(fmt::format("cannot write '{}'", o.out));
            f << text;
        }
        return kExitOk;
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
}

}  // namespace idim::cli
