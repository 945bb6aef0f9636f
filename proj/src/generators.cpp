#include "idim/generators.hpp"

#include <fmt/format.h>

#include "idim/error.hpp"
#include "idim/random.hpp"

namespace idim {

std::string_view to_string(Family family) {
    switch (family) {
        case Family::UniformCube: return "uniform-cube";
        case Family::Gaussian: return "gaussian";
        case Family::HammingUniform: return "hamming";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    if (name == "uniform-cube" || name == "cube") return Family::UniformCube;
    if (name == "gaussian") return Family::Gaussian;
    if (name == "hamming") return Family::HammingUniform;
    throw InvalidInput(fmt::format("unknown family '{}'", name));
}

namespace {

Point draw_point(const GeneratorSpec& spec, std::size_t index) {
    Rng rng(substream_seed(spec.seed, index));
    switch (spec.family) {
        case Family::UniformCube: {
            RealVector c(spec.dimension);
            for (auto& x : c) x = rng.uniform01();
            return Point::real(std::move(c));
        }
        case Family::Gaussian: {
            RealVector c(spec.dimension);
            for (auto& x : c) x = rng.normal();
            return Point::real(std::move(c));
        }
        case Family::HammingUniform: {
            BitVector b(spec.dimension);
            for (std::size_t w = 0; w < b.words().size(); ++w) b.word(w) = rng.next();
            return Point::bits(std::move(b));
        }
    }
    throw InvalidInput("unknown family");
}

}  // namespace

Dataset generate(const GeneratorSpec& spec) {
    if (spec.dimension == 0) throw InvalidInput("dimension must be >= 1");
    if (spec.count == 0) throw InvalidInput("count must be >= 1");
    std::vector<Point> points;
    points.reserve(spec.count);
    for (std::size_t i = 0; i < spec.count; ++i) points.push_back(draw_point(spec, i));
    const MetricKind kind =
        spec.family == Family::HammingUniform ? MetricKind::HammingNormalized : MetricKind::Euclidean;
    return Dataset(std::move(points), MetricDescriptor(kind), spec.seed);
}

}  // namespace idim
