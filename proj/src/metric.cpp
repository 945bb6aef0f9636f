#include "idim/metric.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <fmt/format.h>

#include "idim/error.hpp"

namespace idim {

std::string Estimate::to_string() const {
    if (degenerate_) return "degenerate";
    return fmt::format("{:.9g}", value_);
}

BitVector::BitVector(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {
    if (length == 0) throw InvalidInput("bit vector must have length >= 1");
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            out.set(i, true);
        } else if (bits[i] != '0') {
            throw InvalidInput(fmt::format("invalid bit character '{}'", bits[i]));
        }
    }
    return out;
}

void BitVector::set(std::size_t i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value) {
        words_[i / 64] |= mask;
    } else {
        words_[i / 64] &= ~mask;
    }
}

void BitVector::clear_padding() {
    const std::size_t tail = length_ % 64;
    if (tail != 0) words_.back() &= (std::uint64_t{1} << tail) - 1;
}

std::size_t BitVector::popcount() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::string BitVector::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
        if (test(i)) s[i] = '1';
    }
    return s;
}

Point Point::real(RealVector coords) {
    if (coords.empty()) throw InvalidInput("real vector must have at least one coordinate");
    for (double c : coords) {
        if (!std::isfinite(c)) throw InvalidInput("coordinates must be finite");
    }
    return Point(std::move(coords));
}

Point Point::bits(BitVector bits) {
    bits.clear_padding();
    return Point(std::move(bits));
}

std::size_t Point::dimension() const {
    return std::visit([](const auto& r) { return r.size(); }, repr_);
}

std::string_view to_string(MetricKind kind) {
    switch (kind) {
        case MetricKind::Euclidean: return "euclidean";
        case MetricKind::Manhattan: return "manhattan";
        case MetricKind::Chebyshev: return "chebyshev";
        case MetricKind::HammingNormalized: return "hamming";
    }
    return "unknown";
}

MetricKind parse_metric_kind(std::string_view name) {
    if (name == "euclidean") return MetricKind::Euclidean;
    if (name == "manhattan") return MetricKind::Manhattan;
    if (name == "chebyshev") return MetricKind::Chebyshev;
    if (name == "hamming") return MetricKind::HammingNormalized;
    throw InvalidInput(fmt::format("unknown metric '{}'", name));
}

MetricDescriptor::MetricDescriptor(MetricKind kind, double scale) : kind_(kind), scale_(scale) {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw InvalidInput("metric scale must be a positive finite number");
    }
}

bool MetricDescriptor::accepts(const Point& p) const {
    return (kind_ == MetricKind::HammingNormalized) == p.is_bits();
}

namespace {

double real_distance(MetricKind kind, const RealVector& x, const RealVector& y) {
    const std::size_t d = x.size();
    switch (kind) {
        case MetricKind::Euclidean: {
            double s = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                const double t = x[i] - y[i];
                s += t * t;
            }
            return std::sqrt(s);
        }
        case MetricKind::Manhattan: {
            double s = 0.0;
            for (std::size_t i = 0; i < d; ++i) s += std::abs(x[i] - y[i]);
            return s;
        }
        case MetricKind::Chebyshev: {
            double m = 0.0;
            for (std::size_t i = 0; i < d; ++i) m = std::max(m, std::abs(x[i] - y[i]));
            return m;
        }
        case MetricKind::HammingNormalized: break;
    }
    throw InvalidInput("hamming metric requires bit vectors");
}

double hamming_distance(const BitVector& x, const BitVector& y) {
    const auto xw = x.words();
    const auto yw = y.words();
    std::size_t diff = 0;
    for (std::size_t w = 0; w < xw.size(); ++w) {
        diff += static_cast<std::size_t>(std::popcount(xw[w] ^ yw[w]));
    }
    return static_cast<double>(diff) / static_cast<double>(x.size());
}

}  // namespace

double distance(const MetricDescriptor& metric, const Point& x, const Point& y) {
    if (!metric.accepts(x) || !metric.accepts(y)) {
        throw InvalidInput(fmt::format("point representation does not match metric '{}'",
                                       to_string(metric.kind())));
    }
    if (x.dimension() != y.dimension()) {
        throw InvalidInput(fmt::format("dimension mismatch: {} vs {}", x.dimension(), y.dimension()));
    }
    const double raw = x.is_bits() ? hamming_distance(x.bit_vector(), y.bit_vector())
                                   : real_distance(metric.kind(), x.coords(), y.coords());
    return metric.scale() == 1.0 ? raw : raw / metric.scale();
}

Dataset::Dataset(std::vector<Point> points, MetricDescriptor metric,
                 std::optional<std::uint64_t> seed)
    : points_(std::move(points)), metric_(metric), seed_(seed) {
    if (points_.empty()) throw InvalidInput("dataset must contain at least one point");
    const Point& first = points_.front();
    if (!metric_.accepts(first)) {
        throw InvalidInput(fmt::format("metric '{}' is incompatible with the point representation",
                                       to_string(metric_.kind())));
    }
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (points_[i].is_bits() != first.is_bits() || points_[i].dimension() != first.dimension()) {
            throw InvalidInput(fmt::format("point {} differs in representation or length", i));
        }
    }
}

Dataset Dataset::rescaled(double factor) const {
    return Dataset(points_, MetricDescriptor(metric_.kind(), metric_.scale() * factor), seed_);
}

void Dataset::check_compatible(const Point& q) const {
    if (!metric_.accepts(q) || q.dimension() != dimension()) {
        throw InvalidInput("query point is incompatible with the dataset");
    }
}

void check_oracle(const CountingOracle& oracle, const Dataset& ds) {
    if (!(oracle.metric() == ds.metric())) {
        throw InvalidInput("oracle metric differs from the dataset metric");
    }
}

std::string_view to_string(DiameterMethod method) {
    switch (method) {
        case DiameterMethod::ExactScan: return "exact-scan";
        case DiameterMethod::TriangleBound: return "triangle-bound";
        case DiameterMethod::MetricBound: return "metric-bound";
    }
    return "unknown";
}

DiameterBound diameter_upper_bound(const Dataset& ds) {
    const std::size_t n = ds.size();
    if (n < 2) throw InvalidInput("diameter bound needs at least two points");

    if (n <= kExactDiameterMaxPoints) {
        double best = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) best = std::max(best, ds.distance(i, j));
        }
        return {best, DiameterMethod::ExactScan};
    }

    double radius = 0.0;
    for (std::size_t i = 1; i < n; ++i) radius = std::max(radius, ds.distance(0, i));
    DiameterBound bound{2.0 * radius, DiameterMethod::TriangleBound};
    if (ds.metric().kind() == MetricKind::HammingNormalized) {
        const double range = 1.0 / ds.metric().scale();
        if (range < bound.value) bound = {range, DiameterMethod::MetricBound};
    }
    return bound;
}

}  // namespace idim
