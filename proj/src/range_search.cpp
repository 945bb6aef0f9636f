#include "idim/range_search.hpp"

#include <algorithm>
#include <cmath>

#include "idim/error.hpp"

namespace idim {

std::vector<std::size_t> sequential_scan(const Dataset& ds, const Point& q, double eps,
                                         CountingOracle& oracle) {
    if (!(eps > 0.0)) throw InvalidInput("range must be positive");
    check_oracle(oracle, ds);
    ds.check_compatible(q);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (oracle.distance(q, ds[i]) < eps) out.push_back(i);
    }
    return out;
}

double calibrate_radius(std::span<const double> scan_distances, std::size_t target) {
    if (scan_distances.empty()) throw InvalidInput("calibration needs a nonempty dataset");
    if (target == 0 || target > scan_distances.size()) {
        throw InvalidInput("calibration target must be in [1, n]");
    }
    std::vector<double> sorted(scan_distances.begin(), scan_distances.end());
    std::sort(sorted.begin(), sorted.end());
    auto count_below = [&](double eps) {
        return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), eps) - sorted.begin());
    };
    double lo = 0.0;
    double hi = sorted.back() * (1.0 + 1e-9) + 1e-300;
    for (int it = 0; it < kCalibrationIterations; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (count_below(mid) >= target) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace idim
