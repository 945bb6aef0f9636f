#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "idim/metric.hpp"

namespace idim {

enum class Family {
    UniformCube,     // coordinates i.i.d. uniform on [0,1], Euclidean
    Gaussian,        // coordinates i.i.d. standard normal, Euclidean
    HammingUniform,  // i.i.d. fair bits, normalized Hamming
};

std::string_view to_string(Family family);
// Accepts "uniform-cube", "gaussian", "hamming".
Family parse_family(std::string_view name);

struct GeneratorSpec {
    Family family = Family::UniformCube;
    std::size_t dimension = 1;
    std::size_t count = 1;
    std::uint64_t seed = 42;
};

// Pure function of the spec. Point i is drawn from
// Rng(substream_seed(seed, i)), see random.hpp.
Dataset generate(const GeneratorSpec& spec);

}  // namespace idim
