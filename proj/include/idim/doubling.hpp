#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "idim/metric.hpp"

namespace idim {

struct CoverResult {
    std::vector<std::size_t> centers;  // dataset indices, ascending
    double radius;
    std::size_t covered_count;
};

// Greedy cover: repeatedly take the lowest-index uncovered subset point as a
// center and mark every subset point with d <= r as covered.
CoverResult greedy_cover(const Dataset& ds, std::span<const std::size_t> subset, double r);

struct BallProbe {
    std::size_t center;
    double radius;
};

struct ProbeOutcome {
    BallProbe probe;
    std::size_t ball_size;
    std::size_t cover_size;  // greedy cover of the ball at radius / 2
};

struct DoublingEstimate {
    double rho_hat;  // max over probes of log2(cover_size)
    std::size_t balls_probed;
    BallProbe worst_ball;  // first probe attaining rho_hat
    std::vector<ProbeOutcome> outcomes;
};

// Centers uniform over points; radii log-uniform on
// [0.01 D, D], D = diameter_upper_bound(ds). D = 0 yields radius 0 probes.
std::vector<BallProbe> draw_probes(const Dataset& ds, std::size_t probes, std::uint64_t seed);

// Empirical doubling dimension: for each probe the ball B(c, r) (d <= r) is
// greedily covered at radius r / 2. Radius halving is used instead of
// diameter halving; the greedy count can overstate the optimum. This is an
// estimate, not the Assouad dimension itself.
DoublingEstimate doubling_estimate(const Dataset& ds, std::span<const BallProbe> probes);
DoublingEstimate doubling_estimate(const Dataset& ds, std::size_t probes, std::uint64_t seed);

}  // namespace idim
