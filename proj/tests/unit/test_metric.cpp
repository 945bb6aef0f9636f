#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <thread>

#include "idim/error.hpp"
#include "idim/generators.hpp"
#include "idim/metric.hpp"
#include "idim/random.hpp"
#include "test_util.hpp"

namespace idim {
namespace {

using testing::line;

Point bits(const char* s) { return Point::bits(BitVector::from_string(s)); }

TEST(Distance, EuclideanPythagorean) {
    const MetricDescriptor m(MetricKind::Euclidean);
    EXPECT_DOUBLE_EQ(distance(m, Point::real({0, 0}), Point::real({3, 4})), 5.0);
}

TEST(Distance, ManhattanAndChebyshev) {
    const Point a = Point::real({0, 0});
    const Point b = Point::real({3, -4});
    EXPECT_DOUBLE_EQ(distance(MetricDescriptor(MetricKind::Manhattan), a, b), 7.0);
    EXPECT_DOUBLE_EQ(distance(MetricDescriptor(MetricKind::Chebyshev), a, b), 4.0);
}

TEST(Distance, HammingNormalized) {
    const MetricDescriptor m(MetricKind::HammingNormalized);
    EXPECT_DOUBLE_EQ(distance(m, bits("0101"), bits("0000")), 0.5);
    // Crosses a word boundary.
    std::string a(70, '0'), b(70, '0');
    b[3] = b[65] = b[69] = '1';
    EXPECT_DOUBLE_EQ(distance(m, bits(a.c_str()), bits(b.c_str())), 3.0 / 70.0);
}

TEST(Distance, IdentityIsZeroForEveryMetric) {
    const Point x = Point::real({0.25, -3.5, 7});
    for (auto kind : {MetricKind::Euclidean, MetricKind::Manhattan, MetricKind::Chebyshev}) {
        EXPECT_EQ(distance(MetricDescriptor(kind), x, x), 0.0);
    }
    EXPECT_EQ(distance(MetricDescriptor(MetricKind::HammingNormalized), bits("1101"), bits("1101")), 0.0);
}

TEST(Distance, ScaleDivides) {
    const MetricDescriptor m(MetricKind::Euclidean, 10.0);
    EXPECT_DOUBLE_EQ(distance(m, Point::real({0, 0}), Point::real({3, 4})), 0.5);
}

TEST(Distance, RepresentationMismatchIsInvalidInput) {
    EXPECT_THROW(distance(MetricDescriptor(MetricKind::Euclidean), bits("01"), bits("01")), InvalidInput);
    EXPECT_THROW(distance(MetricDescriptor(MetricKind::HammingNormalized), Point::real({1}), Point::real({1})),
                 InvalidInput);
    EXPECT_THROW(distance(MetricDescriptor(), Point::real({1, 2}), Point::real({1})), InvalidInput);
    EXPECT_THROW(distance(MetricDescriptor(MetricKind::HammingNormalized), bits("01"), bits("011")),
                 InvalidInput);
}

TEST(Point, RejectsNonFiniteAndEmpty) {
    EXPECT_THROW(Point::real({1.0, NAN}), InvalidInput);
    EXPECT_THROW(Point::real({INFINITY}), InvalidInput);
    EXPECT_THROW(Point::real({}), InvalidInput);
    EXPECT_THROW(BitVector(0), InvalidInput);
    EXPECT_THROW(BitVector::from_string("01x"), InvalidInput);
}

TEST(MetricDescriptor, ScaleMustBePositive) {
    EXPECT_THROW(MetricDescriptor(MetricKind::Euclidean, 0.0), InvalidInput);
    EXPECT_THROW(MetricDescriptor(MetricKind::Euclidean, -1.0), InvalidInput);
}

TEST(Dataset, RejectsEmptyMixedAndIncompatible) {
    EXPECT_THROW(Dataset({}, MetricDescriptor()), InvalidInput);
    EXPECT_THROW(Dataset({Point::real({1}), Point::real({1, 2})}, MetricDescriptor()), InvalidInput);
    EXPECT_THROW(Dataset({Point::real({1}), bits("1")}, MetricDescriptor()), InvalidInput);
    EXPECT_THROW(Dataset({bits("10")}, MetricDescriptor(MetricKind::Euclidean)), InvalidInput);
    EXPECT_THROW(Dataset({Point::real({1})}, MetricDescriptor(MetricKind::HammingNormalized)), InvalidInput);
}

TEST(CountingOracle, CountsEveryCall) {
    CountingOracle o(MetricDescriptor{});
    const Point a = Point::real({0});
    const Point b = Point::real({2});
    EXPECT_EQ(o.count(), 0u);
    counted_distance(o, a, b);
    EXPECT_EQ(o.count(), 1u);
    for (int i = 0; i < 9; ++i) o.distance(a, b);
    EXPECT_EQ(o.count(), 10u);
    o.reset();
    EXPECT_EQ(o.count(), 0u);
}

TEST(CountingOracle, MatchesUncountedDistance) {
    const Dataset ds = generate({Family::Gaussian, 5, 2000, 7});
    CountingOracle o(ds.metric());
    Rng rng(3);
    for (int s = 0; s < 1000; ++s) {
        const auto i = rng.below(ds.size());
        const auto j = rng.below(ds.size());
        EXPECT_EQ(o.distance(ds[i], ds[j]), distance(ds.metric(), ds[i], ds[j]));
    }
    EXPECT_EQ(o.count(), 1000u);
}

TEST(CountingOracle, ExactUnderConcurrentWorkers) {
    CountingOracle o(MetricDescriptor{});
    const Point a = Point::real({0});
    const Point b = Point::real({1});
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&] {
            for (int i = 0; i < 25000; ++i) o.distance(a, b);
        });
    }
    for (auto& w : workers) w.join();
    EXPECT_EQ(o.count(), 100000u);
}

TEST(DiameterBound, SmallExamples) {
    EXPECT_DOUBLE_EQ(diameter_upper_bound(line({0.0, 1.0})).value, 1.0);

    // Brute force over the three pairs: 5, 4, 3.
    const Dataset tri({Point::real({0, 0}), Point::real({3, 4}), Point::real({0, 4})}, MetricDescriptor());
    const DiameterBound b = diameter_upper_bound(tri);
    EXPECT_DOUBLE_EQ(b.value, 5.0);
    EXPECT_EQ(b.method, DiameterMethod::ExactScan);

    EXPECT_EQ(diameter_upper_bound(line({2.5, 2.5})).value, 0.0);
    EXPECT_THROW(diameter_upper_bound(line({1.0})), InvalidInput);
}

double brute_max(const Dataset& ds) {
    double m = 0.0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (std::size_t j = i + 1; j < ds.size(); ++j) m = std::max(m, ds.distance(i, j));
    }
    return m;
}

TEST(DiameterBound, ExactUpTo2048) {
    for (std::uint64_t seed : {1, 2, 3}) {
        const Dataset ds = generate({Family::Gaussian, 3, 2048, seed});
        const DiameterBound b = diameter_upper_bound(ds);
        EXPECT_EQ(b.method, DiameterMethod::ExactScan);
        EXPECT_EQ(b.value, brute_max(ds));
    }
}

TEST(DiameterBound, TriangleBranchAboveThreshold) {
    const Dataset ds = generate({Family::UniformCube, 4, 3000, 5});
    const DiameterBound b = diameter_upper_bound(ds);
    EXPECT_EQ(b.method, DiameterMethod::TriangleBound);
    EXPECT_GE(b.value, brute_max(ds));
}

TEST(DiameterBound, HammingMetricBoundAboveThreshold) {
    const Dataset ds = generate({Family::HammingUniform, 64, 3000, 5});
    const DiameterBound b = diameter_upper_bound(ds);
    EXPECT_EQ(b.method, DiameterMethod::MetricBound);
    EXPECT_EQ(b.value, 1.0);
    EXPECT_GE(b.value, brute_max(ds));
}

// Metric axioms and 1-Lipschitz distance functions on random triples.
class MetricAxioms : public ::testing::TestWithParam<std::pair<Family, MetricKind>> {};

TEST_P(MetricAxioms, HoldOnRandomTriples) {
    const auto [family, kind] = GetParam();
    const Dataset raw = generate({family, 6, 300, 11});
    const Dataset ds(raw.points(), MetricDescriptor(kind));
    Rng rng(19);
    for (int t = 0; t < 2000; ++t) {
        const auto x = rng.below(ds.size()), y = rng.below(ds.size()), z = rng.below(ds.size());
        const double dxy = ds.distance(x, y), dyz = ds.distance(y, z), dxz = ds.distance(x, z);
        EXPECT_EQ(dxy, ds.distance(y, x));
        EXPECT_GE(dxy, 0.0);
        EXPECT_EQ(dxy == 0.0, ds[x] == ds[y]);
        EXPECT_LE(dxz, dxy + dyz + 1e-9);
        // d_z is 1-Lipschitz: |d(z,x) - d(z,y)| <= d(x,y).
        EXPECT_LE(std::abs(dxz - dyz), dxy + 1e-9);
    }
}

INSTANTIATE_TEST_SUITE_P(AllKinds, MetricAxioms,
                         ::testing::Values(std::pair{Family::UniformCube, MetricKind::Euclidean},
                                           std::pair{Family::Gaussian, MetricKind::Manhattan},
                                           std::pair{Family::Gaussian, MetricKind::Chebyshev},
                                           std::pair{Family::HammingUniform, MetricKind::HammingNormalized}));

TEST(MetricAxioms, DuplicatesHaveZeroDistance) {
    const Dataset ds = line({1.5, 1.5, 2.0});
    EXPECT_EQ(ds.distance(0, 1), 0.0);
    EXPECT_GT(ds.distance(0, 2), 0.0);
}

}  // namespace
}  // namespace idim
