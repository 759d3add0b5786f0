#include "vcmax/sampling.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "vcmax/errors.hpp"

namespace vcmax {

const char* to_string(Distribution d) {
    return d == Distribution::UniformBox ? "uniform-box" : "gaussian";
}

namespace {

template <typename T>
T per_coordinate(const std::vector<T>& values, std::size_t j, const char* what) {
    if (values.size() == 1) return values[0];
    if (j < values.size()) return values[j];
    throw InvalidInputError(std::string(what) + " must have 1 or k entries");
}

void validate(const SamplingSpec& spec) {
    if (spec.count == 0) throw InvalidInputError("sample count must be at least 1");
    if (spec.dimension == 0) throw InvalidInputError("sample dimension must be at least 1");
    if (spec.precision_bits == 0 || spec.precision_bits > 53) {
        throw InvalidInputError("precision bits must be in [1, 53]");
    }
    if (spec.distribution == Distribution::UniformBox) {
        for (std::size_t j = 0; j < spec.dimension; ++j) {
            if (!(per_coordinate(spec.low, j, "low") < per_coordinate(spec.high, j, "high"))) {
                throw InvalidInputError("uniform bounds must satisfy low < high");
            }
        }
    } else {
        for (std::size_t j = 0; j < spec.dimension; ++j) {
            if (!(per_coordinate(spec.sigma, j, "sigma") > 0)) {
                throw InvalidInputError("gaussian sigma must be positive");
            }
        }
    }
}

}  // namespace

std::vector<Point> sample_points(const SamplingSpec& spec) {
    validate(spec);
    std::mt19937_64 engine(spec.seed);
    const unsigned p = spec.precision_bits;
    const BigInt denom = BigInt(1) << p;

    std::vector<Point> points(spec.count);
    for (std::size_t i = 0; i < spec.count; ++i) {
        Point& pt = points[i];
        pt.resize(spec.dimension);
        for (std::size_t j = 0; j < spec.dimension; ++j) {
            if (spec.distribution == Distribution::UniformBox) {
                const std::uint64_t m = engine() >> (64 - p);
                const Rational low = per_coordinate(spec.low, j, "low");
                const Rational high = per_coordinate(spec.high, j, "high");
                const Rational frac(BigInt(m), denom);
                pt[j] = low + (high - low) * frac;
            } else {
                // Box-Muller, cosine branch; u1 in (0,1], u2 in [0,1).
                const std::uint64_t m1 = engine() >> 11;
                const std::uint64_t m2 = engine() >> 11;
                const double u1 = static_cast<double>(m1 + 1) * 0x1.0p-53;
                const double u2 = static_cast<double>(m2) * 0x1.0p-53;
                const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
                const double value =
                    per_coordinate(spec.mean, j, "mean") + per_coordinate(spec.sigma, j, "sigma") * z;
                const double scaled = std::nearbyint(std::ldexp(value, static_cast<int>(p)));
                pt[j] = Rational(BigInt(static_cast<long long>(scaled)), denom);
            }
        }
    }
    return points;
}

std::string describe(const SamplingSpec& spec) {
    std::ostringstream os;
    os << "seed=" << spec.seed << " dist=" << to_string(spec.distribution) << " n=" << spec.count
       << " k=" << spec.dimension << " precision-bits=" << spec.precision_bits;
    if (spec.distribution == Distribution::UniformBox) {
        os << " box=";
        for (std::size_t j = 0; j < spec.dimension; ++j) {
            if (j) os << "x";
            os << "[" << per_coordinate(spec.low, j, "low").str() << ","
               << per_coordinate(spec.high, j, "high").str() << "]";
        }
    } else {
        os << " mean=";
        for (std::size_t j = 0; j < spec.dimension; ++j) {
            if (j) os << ",";
            os << per_coordinate(spec.mean, j, "mean");
        }
        os << " sigma=";
        for (std::size_t j = 0; j < spec.dimension; ++j) {
            if (j) os << ",";
            os << per_coordinate(spec.sigma, j, "sigma");
        }
    }
    return os.str();
}

}  // namespace vcmax
