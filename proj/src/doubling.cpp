#include "idim/doubling.hpp"

#include <algorithm>
#include <cmath>

#include "idim/error.hpp"
#include "idim/random.hpp"

namespace idim {

CoverResult greedy_cover(const Dataset& ds, std::span<const std::size_t> subset, double r) {
    if (subset.empty()) throw InvalidInput("cannot cover an empty subset");
    if (!(r > 0.0)) throw InvalidInput("cover radius must be positive");
    std::vector<std::size_t> order(subset.begin(), subset.end());
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    if (order.back() >= ds.size()) throw InvalidInput("subset index outside the dataset");

    CoverResult out{{}, r, order.size()};
    std::vector<char> covered(order.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (covered[i]) continue;
        const std::size_t center = order[i];
        out.centers.push_back(center);
        covered[i] = 1;
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            if (!covered[j] && ds.distance(center, order[j]) <= r) covered[j] = 1;
        }
    }
    return out;
}

std::vector<BallProbe> draw_probes(const Dataset& ds, std::size_t probes, std::uint64_t seed) {
    if (probes == 0) throw InvalidInput("probe count must be >= 1");
    const double diameter = ds.size() >= 2 ? diameter_upper_bound(ds).value : 0.0;
    Rng rng(seed);
    std::vector<BallProbe> out;
    out.reserve(probes);
    const double log_lo = std::log(0.01);
    for (std::size_t p = 0; p < probes; ++p) {
        const auto center = static_cast<std::size_t>(rng.below(ds.size()));
        const double radius = diameter * std::exp(rng.uniform(log_lo, 0.0));
        out.push_back({center, radius});
    }
    return out;
}

DoublingEstimate doubling_estimate(const Dataset& ds, std::span<const BallProbe> probes) {
    if (probes.empty()) throw InvalidInput("probe count must be >= 1");
    DoublingEstimate est{0.0, probes.size(), probes.front(), {}};
    est.outcomes.reserve(probes.size());
    std::vector<std::size_t> ball;
    for (const BallProbe& probe : probes) {
        if (probe.center >= ds.size()) throw InvalidInput("probe center outside the dataset");
        ball.clear();
        for (std::size_t i = 0; i < ds.size(); ++i) {
            if (ds.distance(probe.center, i) <= probe.radius) ball.push_back(i);
        }
        std::size_t cover = 1;
        if (probe.radius > 0.0) cover = greedy_cover(ds, ball, probe.radius / 2.0).centers.size();
        est.outcomes.push_back({probe, ball.size(), cover});
        const double rho = std::log2(static_cast<double>(cover));
        if (rho > est.rho_hat) {
            est.rho_hat = rho;
            est.worst_ball = probe;
        }
    }
    return est;
}

DoublingEstimate doubling_estimate(const Dataset& ds, std::size_t probes, std::uint64_t seed) {
    const std::vector<BallProbe> drawn = draw_probes(ds, probes, seed);
    return doubling_estimate(ds, drawn);
}

}  // namespace idim
