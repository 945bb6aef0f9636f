#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "idim/error.hpp"
#include "idim/metric.hpp"

namespace idim {

struct EmpiricalProvenance {
    std::size_t witness_count;
    std::uint64_t seed;
};

struct ChernoffProvenance {
    std::size_t dimension;
};

using CurveProvenance = std::variant<EmpiricalProvenance, ChernoffProvenance>;

// Concentration function sampled on a grid over [0, 1].
// Invariants (checked on construction): grid strictly increasing from 0 to 1,
// alpha aligned with grid, every alpha in [0, 1], alpha nonincreasing.
class ConcentrationCurve {
public:
    ConcentrationCurve(std::vector<double> grid, std::vector<double> alpha, CurveProvenance provenance);

    const std::vector<double>& grid() const { return grid_; }
    const std::vector<double>& alpha() const { return alpha_; }
    const CurveProvenance& provenance() const { return provenance_; }
    std::size_t size() const { return grid_.size(); }
    // alpha at the grid point nearest to eps.
    double alpha_near(double eps) const;

private:
    std::vector<double> grid_;
    std::vector<double> alpha_;
    CurveProvenance provenance_;
};

inline constexpr std::size_t kDefaultGridSize = 201;

// grid_size points i / (grid_size - 1).
std::vector<double> uniform_grid(std::size_t grid_size);

// Anchor points whose distance functions d(a, .) serve as 1-Lipschitz
// witnesses. Anchors are distinct dataset indices.
struct WitnessFamily {
    std::vector<std::size_t> anchors;
    std::uint64_t seed = 0;
};

// k distinct anchors from a seeded partial shuffle; the family for k is a
// prefix of the family for any larger k under the same seed.
WitnessFamily draw_witnesses(const Dataset& ds, std::size_t k, std::uint64_t seed);

// alpha(eps) = max over anchors a of the fraction of points x with
// |d(a, x) - median_a| > eps, median by type-7 interpolation.
//
// This only sees distance witnesses and the empirical measure, so it is a
// lower estimate of the concentration function over all 1-Lipschitz maps
// (and the resulting dimension is correspondingly an upper estimate).
//
// Requires diameter_upper_bound(ds) <= 1 + 1e-9: normalize through the metric
// scale first (Dataset::rescaled).
ConcentrationCurve empirical_concentration(const Dataset& ds, const WitnessFamily& witnesses,
                                           std::size_t grid_size = kDefaultGridSize);
ConcentrationCurve empirical_concentration(const Dataset& ds, std::size_t k, std::size_t grid_size,
                                           std::uint64_t seed);

// min(1, exp(-2 eps^2 d)): the Hamming-cube bound.
double chernoff_alpha(std::size_t d, double eps);
ConcentrationCurve chernoff_curve(std::size_t d, std::size_t grid_size = kDefaultGridSize);

// Tolerance for comparing an empirical curve against a bound:
// 3 sqrt(ln(2 grid k) / (2 n)). Hoeffding per (anchor, grid point) plus a union
// bound over the grid_size * k events.
double union_bound_slack(std::size_t grid_size, std::size_t k, std::size_t n);

// 1 / (2 I)^2, I the trapezoidal integral of alpha over the curve's grid.
// Degenerate when I = 0.
double trapezoid_integral(const ConcentrationCurve& c);
Estimate concentration_dimension(const ConcentrationCurve& c);

}  // namespace idim
