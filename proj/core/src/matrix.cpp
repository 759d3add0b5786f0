#include "vcmax/matrix.hpp"

#include <cmath>
#include <cstdlib>

namespace vcmax {

namespace {

// Scales each row to integers by its denominators' lcm.  Returns the integer
// matrix and the product of the scale factors (det(m) = det(int) / product).
struct ScaledRows {
    std::vector<BigInt> entries;  // row-major, rows x cols
    BigInt scale_product;
};

ScaledRows clear_denominators(const QMatrix& m) {
    ScaledRows out;
    out.entries.resize(m.rows() * m.cols());
    out.scale_product = 1;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BigInt l(1);
        for (std::size_t c = 0; c < m.cols(); ++c) l = boost::multiprecision::lcm(l, m.at(r, c).denominator());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& e = m.at(r, c);
            out.entries[r * m.cols() + c] = e.numerator() * (l / e.denominator());
        }
        out.scale_product *= l;
    }
    return out;
}

}  // namespace

const char* to_string(Sign s) {
    switch (s) {
        case Sign::Negative: return "negative";
        case Sign::Zero: return "zero";
        case Sign::Positive: return "positive";
    }
    return "?";
}

Rational det_exact(const QMatrix& m) {
    if (!m.square()) throw DimensionError("determinant requires a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);

    ScaledRows scaled = clear_denominators(m);
    auto& a = scaled.entries;
    auto idx = [n](std::size_t r, std::size_t c) { return r * n + c; };

    int sign = 1;
    BigInt prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[idx(k, k)] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[idx(pivot, k)] == 0) ++pivot;
            if (pivot == n) return Rational(0);
            for (std::size_t c = 0; c < n; ++c) std::swap(a[idx(k, c)], a[idx(pivot, c)]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Exact division: every Bareiss intermediate is an integer minor.
                a[idx(i, j)] = (a[idx(i, j)] * a[idx(k, k)] - a[idx(i, k)] * a[idx(k, j)]) / prev;
            }
            a[idx(i, k)] = 0;
        }
        prev = a[idx(k, k)];
    }

    BigInt det_int = a[idx(n - 1, n - 1)];
    if (sign < 0) det_int = -det_int;
    return Rational(std::move(det_int), std::move(scaled.scale_product));
}

Sign det_sign_approx(const DMatrix& m, double epsilon) {
    if (!m.square()) throw DimensionError("determinant requires a square matrix");
    if (epsilon <= 0) throw InvalidInputError("epsilon must be positive");
    const std::size_t n = m.rows();
    if (n == 0) return Sign::Positive;

    double hadamard = 1.0;
    for (std::size_t r = 0; r < n; ++r) {
        double norm_sq = 0.0;
        for (std::size_t c = 0; c < n; ++c) {
            const double e = m.at(r, c);
            if (!std::isfinite(e)) throw InvalidInputError("matrix entry is not finite");
            norm_sq += e * e;
        }
        hadamard *= std::sqrt(norm_sq);
    }
    const double scale = std::max(1.0, hadamard);

    std::vector<double> a(m.entries());
    auto idx = [n](std::size_t r, std::size_t c) { return r * n + c; };

    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t r = k + 1; r < n; ++r) {
            if (std::fabs(a[idx(r, k)]) > std::fabs(a[idx(pivot, k)])) pivot = r;
        }
        if (a[idx(pivot, k)] == 0.0) return Sign::Zero;
        if (pivot != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a[idx(k, c)], a[idx(pivot, c)]);
            det = -det;
        }
        det *= a[idx(k, k)];
        for (std::size_t r = k + 1; r < n; ++r) {
            const double f = a[idx(r, k)] / a[idx(k, k)];
            for (std::size_t c = k; c < n; ++c) a[idx(r, c)] -= f * a[idx(k, c)];
        }
    }

    if (std::fabs(det) <= epsilon * scale) return Sign::Zero;
    return det > 0 ? Sign::Positive : Sign::Negative;
}

std::size_t rank(const QMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;

    ScaledRows scaled = clear_denominators(m);
    auto& a = scaled.entries;
    const std::size_t rows = m.rows(), cols = m.cols();
    auto idx = [cols](std::size_t r, std::size_t c) { return r * cols + c; };

    std::size_t rk = 0;
    BigInt prev(1);
    for (std::size_t col = 0; col < cols && rk < rows; ++col) {
        std::size_t pivot = rk;
        while (pivot < rows && a[idx(pivot, col)] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rk) {
            for (std::size_t c = 0; c < cols; ++c) std::swap(a[idx(rk, c)], a[idx(pivot, c)]);
        }
        for (std::size_t i = rk + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                a[idx(i, j)] = (a[idx(i, j)] * a[idx(rk, col)] - a[idx(i, col)] * a[idx(rk, j)]) / prev;
            }
            a[idx(i, col)] = 0;
        }
        prev = a[idx(rk, col)];
        ++rk;
    }
    return rk;
}

}  // namespace vcmax
