#include "idim/concentration.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "idim/dist_stats.hpp"
#include "idim/random.hpp"

namespace idim {

ConcentrationCurve::ConcentrationCurve(std::vector<double> grid, std::vector<double> alpha,
                                       CurveProvenance provenance)
    : grid_(std::move(grid)), alpha_(std::move(alpha)), provenance_(provenance) {
    if (grid_.size() < 2 || grid_.size() != alpha_.size()) {
        throw InvalidInput("curve needs at least two aligned grid points");
    }
    if (grid_.front() != 0.0 || grid_.back() != 1.0) {
        throw InvalidInput("curve grid must start at 0 and end at 1");
    }
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        if (i > 0 && !(grid_[i] > grid_[i - 1])) throw InvalidInput("curve grid must be increasing");
        if (!(alpha_[i] >= 0.0 && alpha_[i] <= 1.0)) throw InvalidInput("alpha must lie in [0, 1]");
        if (i > 0 && alpha_[i] > alpha_[i - 1]) throw InvalidInput("alpha must be nonincreasing");
    }
}

double ConcentrationCurve::alpha_near(double eps) const {
    auto it = std::lower_bound(grid_.begin(), grid_.end(), eps);
    if (it == grid_.end()) return alpha_.back();
    std::size_t i = static_cast<std::size_t>(it - grid_.begin());
    if (i > 0 && eps - grid_[i - 1] < grid_[i] - eps) --i;
    return alpha_[i];
}

std::vector<double> uniform_grid(std::size_t grid_size) {
    if (grid_size < 2) throw InvalidInput("grid size must be >= 2");
    std::vector<double> g(grid_size);
    const double last = static_cast<double>(grid_size - 1);
    for (std::size_t i = 0; i < grid_size; ++i) g[i] = static_cast<double>(i) / last;
    return g;
}

WitnessFamily draw_witnesses(const Dataset& ds, std::size_t k, std::uint64_t seed) {
    if (k == 0 || k > ds.size()) {
        throw InvalidInput(fmt::format("witness count must be in [1, {}], got {}", ds.size(), k));
    }
    Rng rng(seed);
    return {sample_without_replacement(ds.size(), k, rng), seed};
}

ConcentrationCurve empirical_concentration(const Dataset& ds, const WitnessFamily& witnesses,
                                           std::size_t grid_size) {
    if (witnesses.anchors.empty()) throw InvalidInput("witness family is empty");
    const std::size_t n = ds.size();
    if (n >= 2) {
        const DiameterBound bound = diameter_upper_bound(ds);
        if (bound.value > 1.0 + 1e-9) {
            throw InvalidInput(fmt::format(
                "dataset is not normalized: diameter bound {:.6g} ({}) exceeds 1", bound.value,
                to_string(bound.method)));
        }
    }
    std::vector<double> grid = uniform_grid(grid_size);
    std::vector<double> alpha(grid_size, 0.0);

    std::vector<double> values(n);
    std::vector<double> deviation(n);
    for (std::size_t a : witnesses.anchors) {
        if (a >= n) throw InvalidInput("witness anchor outside the dataset");
        for (std::size_t i = 0; i < n; ++i) values[i] = ds.distance(a, i);
        std::vector<double> sorted = values;
        std::sort(sorted.begin(), sorted.end());
        const double median = quantile_type7(sorted, 0.5);
        for (std::size_t i = 0; i < n; ++i) deviation[i] = std::abs(values[i] - median);
        std::sort(deviation.begin(), deviation.end());
        for (std::size_t g = 0; g < grid_size; ++g) {
            // Points deviating by strictly more than eps.
            const auto above = deviation.end() - std::upper_bound(deviation.begin(), deviation.end(), grid[g]);
            alpha[g] = std::max(alpha[g], static_cast<double>(above) / static_cast<double>(n));
        }
    }
    return ConcentrationCurve(std::move(grid), std::move(alpha),
                              EmpiricalProvenance{witnesses.anchors.size(), witnesses.seed});
}

ConcentrationCurve empirical_concentration(const Dataset& ds, std::size_t k, std::size_t grid_size,
                                           std::uint64_t seed) {
    return empirical_concentration(ds, draw_witnesses(ds, k, seed), grid_size);
}

double chernoff_alpha(std::size_t d, double eps) {
    if (d == 0) throw InvalidInput("chernoff bound needs d >= 1");
    if (!(eps >= 0.0 && eps <= 1.0)) throw InvalidInput("eps must lie in [0, 1]");
    return std::min(1.0, std::exp(-2.0 * eps * eps * static_cast<double>(d)));
}

ConcentrationCurve chernoff_curve(std::size_t d, std::size_t grid_size) {
    std::vector<double> grid = uniform_grid(grid_size);
    std::vector<double> alpha(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) alpha[i] = chernoff_alpha(d, grid[i]);
    return ConcentrationCurve(std::move(grid), std::move(alpha), ChernoffProvenance{d});
}

double union_bound_slack(std::size_t grid_size, std::size_t k, std::size_t n) {
    const double events = 2.0 * static_cast<double>(grid_size) * static_cast<double>(k);
    return 3.0 * std::sqrt(std::log(events) / (2.0 * static_cast<double>(n)));
}

double trapezoid_integral(const ConcentrationCurve& c) {
    const auto& g = c.grid();
    const auto& a = c.alpha();
    double sum = 0.0;
    for (std::size_t i = 1; i < g.size(); ++i) sum += 0.5 * (a[i] + a[i - 1]) * (g[i] - g[i - 1]);
    return sum;
}

Estimate concentration_dimension(const ConcentrationCurve& c) {
    const double integral = trapezoid_integral(c);
    if (integral <= 0.0) return Estimate::degenerate();
    const double twice = 2.0 * integral;
    return Estimate::of(1.0 / (twice * twice));
}

}  // namespace idim
