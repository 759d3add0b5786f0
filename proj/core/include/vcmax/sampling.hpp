#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vcmax/basis.hpp"

namespace vcmax {

enum class Distribution { UniformBox, Gaussian };

const char* to_string(Distribution d);

/// Seeded sampling plan.  Coordinates are emitted as exact dyadic rationals
/// m / 2^precision_bits so the downstream pipeline can stay exact.
///
/// The generator is fixed for reproducibility: a std::mt19937_64 engine
/// seeded with `seed` supplies 64-bit words.  Uniform coordinates take the
/// top precision_bits bits of one word and map them affinely into the
/// bounds.  Gaussian coordinates consume two words through the Box-Muller
/// cosine branch and round the result to the dyadic grid.
struct SamplingSpec {
    Distribution distribution = Distribution::UniformBox;
    std::size_t count = 0;      // N
    std::size_t dimension = 0;  // k
    std::uint64_t seed = 0;
    unsigned precision_bits = 53;

    // UniformBox bounds per coordinate; size 1 broadcasts to every coordinate.
    std::vector<Rational> low{Rational(0)};
    std::vector<Rational> high{Rational(1)};

    // Gaussian parameters per coordinate; size 1 broadcasts.
    std::vector<double> mean{0.0};
    std::vector<double> sigma{1.0};
};

std::vector<Point> sample_points(const SamplingSpec& spec);

/// One-line provenance string for reports ("seed=42 dist=uniform-box ...").
std::string describe(const SamplingSpec& spec);

}  // namespace vcmax
