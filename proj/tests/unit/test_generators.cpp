#include <gtest/gtest.h>

#include "idim/error.hpp"
#include "idim/generators.hpp"

namespace idim {
namespace {

TEST(Generate, DeterministicPerSpec) {
    for (Family f : {Family::UniformCube, Family::Gaussian, Family::HammingUniform}) {
        const GeneratorSpec spec{f, 13, 200, 1234};
        EXPECT_EQ(generate(spec).points(), generate(spec).points());
    }
}

TEST(Generate, PointStreamsIndependentOfCount) {
    const Dataset small = generate({Family::Gaussian, 4, 10, 5});
    const Dataset large = generate({Family::Gaussian, 4, 30, 5});
    for (std::size_t i = 0; i < small.size(); ++i) EXPECT_EQ(small[i], large[i]);
}

TEST(Generate, DistinctSeedsDiffer) {
    for (Family f : {Family::UniformCube, Family::Gaussian, Family::HammingUniform}) {
        EXPECT_NE(generate({f, 32, 1, 1})[0], generate({f, 32, 1, 2})[0]);
    }
}

TEST(Generate, MetricMatchesFamily) {
    EXPECT_EQ(generate({Family::UniformCube, 2, 3, 1}).metric().kind(), MetricKind::Euclidean);
    EXPECT_EQ(generate({Family::Gaussian, 2, 3, 1}).metric().kind(), MetricKind::Euclidean);
    EXPECT_EQ(generate({Family::HammingUniform, 2, 3, 1}).metric().kind(), MetricKind::HammingNormalized);
    EXPECT_EQ(generate({Family::HammingUniform, 2, 3, 77}).seed(), 77u);
}

TEST(Generate, ZeroSizesRejected) {
    EXPECT_THROW(generate({Family::UniformCube, 0, 10, 1}), InvalidInput);
    EXPECT_THROW(generate({Family::UniformCube, 3, 0, 1}), InvalidInput);
}

TEST(Generate, UniformCubeCoordinateMeans) {
    const Dataset ds = generate({Family::UniformCube, 3, 100000, 42});
    for (std::size_t c = 0; c < 3; ++c) {
        double sum = 0.0;
        for (const auto& p : ds.points()) {
            ASSERT_GE(p.coords()[c], 0.0);
            ASSERT_LT(p.coords()[c], 1.0);
            sum += p.coords()[c];
        }
        const double mean = sum / 100000.0;
        EXPECT_GE(mean, 0.49);
        EXPECT_LE(mean, 0.51);
    }
}

TEST(Generate, HammingBitsAreFair) {
    const Dataset ds = generate({Family::HammingUniform, 64, 50000, 42});
    std::size_t ones = 0;
    for (const auto& p : ds.points()) ones += p.bit_vector().popcount();
    const double frac = static_cast<double>(ones) / (64.0 * 50000.0);
    EXPECT_GE(frac, 0.495);
    EXPECT_LE(frac, 0.505);
}

TEST(Generate, HammingPaddingBitsClear) {
    const Dataset ds = generate({Family::HammingUniform, 5, 100, 3});
    for (const auto& p : ds.points()) EXPECT_EQ(p.bit_vector().words()[0] >> 5, 0u);
}

TEST(Generate, GaussianUnitVariance) {
    const Dataset ds = generate({Family::Gaussian, 1, 100000, 42});
    double sum = 0.0, sq = 0.0;
    for (const auto& p : ds.points()) sum += p.coords()[0];
    const double mean = sum / 100000.0;
    for (const auto& p : ds.points()) sq += (p.coords()[0] - mean) * (p.coords()[0] - mean);
    const double var = sq / 99999.0;
    EXPECT_GE(var, 0.98);
    EXPECT_LE(var, 1.02);
    EXPECT_LT(std::abs(mean), 0.02);
}

TEST(Family, NamesRoundTrip) {
    for (Family f : {Family::UniformCube, Family::Gaussian, Family::HammingUniform}) {
        EXPECT_EQ(parse_family(to_string(f)), f);
    }
    EXPECT_THROW(parse_family("sphere"), InvalidInput);
}

}  // namespace
}  // namespace idim
