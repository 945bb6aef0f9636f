#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace idim {

// Fixed-length bit string packed into 64-bit words, low bit first.
class BitVector {
public:
    explicit BitVector(std::size_t length);
    static BitVector from_string(std::string_view bits);

    std::size_t size() const { return length_; }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i, bool value);
    std::span<const std::uint64_t> words() const { return words_; }
    std::uint64_t& word(std::size_t w) { return words_[w]; }
    void clear_padding();
    std::size_t popcount() const;
    std::string to_string() const;

    bool operator==(const BitVector&) const = default;

private:
    std::size_t length_;
    std::vector<std::uint64_t> words_;
};

using RealVector = std::vector<double>;

class Point {
public:
    // Throws InvalidInput on empty or non-finite coordinates.
    static Point real(RealVector coords);
    static Point bits(BitVector bits);

    bool is_real() const { return std::holds_alternative<RealVector>(repr_); }
    bool is_bits() const { return std::holds_alternative<BitVector>(repr_); }
    std::size_t dimension() const;

    const RealVector& coords() const { return std::get<RealVector>(repr_); }
    const BitVector& bit_vector() const { return std::get<BitVector>(repr_); }

    bool operator==(const Point&) const = default;

private:
    explicit Point(std::variant<RealVector, BitVector> repr) : repr_(std::move(repr)) {}
    std::variant<RealVector, BitVector> repr_;
};

enum class MetricKind { Euclidean, Manhattan, Chebyshev, HammingNormalized };

std::string_view to_string(MetricKind kind);
// Accepts "euclidean", "manhattan", "chebyshev", "hamming".
MetricKind parse_metric_kind(std::string_view name);

class MetricDescriptor {
public:
    explicit MetricDescriptor(MetricKind kind = MetricKind::Euclidean, double scale = 1.0);

    MetricKind kind() const { return kind_; }
    // Raw distances are divided by this.
    double scale() const { return scale_; }
    bool accepts(const Point& p) const;

    bool operator==(const MetricDescriptor&) const = default;

private:
    MetricKind kind_;
    double scale_;
};

// Symmetric, zero exactly on identical coordinates, satisfies the triangle
// inequality. HammingNormalized yields (#differing bits)/length.
double distance(const MetricDescriptor& metric, const Point& x, const Point& y);

class Dataset {
public:
    Dataset(std::vector<Point> points, MetricDescriptor metric,
            std::optional<std::uint64_t> seed = std::nullopt);

    std::size_t size() const { return points_.size(); }
    std::size_t dimension() const { return points_.front().dimension(); }
    bool is_bits() const { return points_.front().is_bits(); }
    const Point& point(std::size_t i) const { return points_[i]; }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Point>& points() const { return points_; }
    const MetricDescriptor& metric() const { return metric_; }
    std::optional<std::uint64_t> seed() const { return seed_; }

    double distance(std::size_t i, std::size_t j) const {
        return idim::distance(metric_, points_[i], points_[j]);
    }
    // Same points, distances divided by an extra factor.
    Dataset rescaled(double factor) const;
    // Throws InvalidInput when q cannot be measured against this dataset.
    void check_compatible(const Point& q) const;

private:
    std::vector<Point> points_;
    MetricDescriptor metric_;
    std::optional<std::uint64_t> seed_;
};

// Distance evaluator that counts every call. The counter is atomic so one
// oracle can be shared by concurrent query workers.
class CountingOracle {
public:
    explicit CountingOracle(MetricDescriptor metric) : metric_(metric) {}
    CountingOracle(const CountingOracle&) = delete;
    CountingOracle& operator=(const CountingOracle&) = delete;

    double distance(const Point& x, const Point& y) {
        double d = idim::distance(metric_, x, y);
        count_.fetch_add(1, std::memory_order_relaxed);
        return d;
    }
    const MetricDescriptor& metric() const { return metric_; }
    std::uint64_t count() const { return count_.load(std::memory_order_relaxed); }
    void reset() { count_.store(0, std::memory_order_relaxed); }

private:
    MetricDescriptor metric_;
    std::atomic<std::uint64_t> count_{0};
};

inline double counted_distance(CountingOracle& oracle, const Point& x, const Point& y) {
    return oracle.distance(x, y);
}

// Throws InvalidInput unless the oracle measures with the dataset's metric.
void check_oracle(const CountingOracle& oracle, const Dataset& ds);

enum class DiameterMethod {
    ExactScan,      // max over all pairs (n <= kExactDiameterMaxPoints)
    TriangleBound,  // 2 * max_i d(points[0], points[i])
    MetricBound,    // the metric's own range, e.g. normalized Hamming <= 1/scale
};

std::string_view to_string(DiameterMethod method);

struct DiameterBound {
    double value;
    DiameterMethod method;
};

inline constexpr std::size_t kExactDiameterMaxPoints = 2048;

// Upper bound on the largest pairwise distance; exact when n <= 2048.
// Above that the tighter of the triangle bound and the metric bound is used.
DiameterBound diameter_upper_bound(const Dataset& ds);

}  // namespace idim
