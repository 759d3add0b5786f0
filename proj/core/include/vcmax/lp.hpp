#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "vcmax/matrix.hpp"
#include "vcmax/rational.hpp"

namespace vcmax {

/// Zero/sign tests used by the floating simplex pivots.
template <typename T>
struct LpTraits;

template <>
struct LpTraits<Rational> {
    static bool is_zero(const Rational& v) { return v.is_zero(); }
    static bool is_pos(const Rational& v) { return v.sign() > 0; }
    static bool is_neg(const Rational& v) { return v.sign() < 0; }
};

template <>
struct LpTraits<double> {
    static constexpr double kEps = 1e-11;
    static bool is_zero(double v) { return std::fabs(v) <= kEps; }
    static bool is_pos(double v) { return v > kEps; }
    static bool is_neg(double v) { return v < -kEps; }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <typename T>
struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    T objective{};
    std::vector<T> solution;  // structural variables only
};

/// Two-phase simplex for  max c.x  s.t.  A x <= b, x >= 0, with Bland's rule
/// on both the entering and the leaving choice (terminates on degenerate
/// inputs).
///
/// The Rational overload runs on an integer tableau with determinant-scaled
/// entries (one exact division per update, no per-operation normalization),
/// so every verdict is exact.  The double overload uses tolerance-based
/// pivoting and is only as reliable as its inputs.
LpResult<Rational> simplex_max(const Matrix<Rational>& A, const std::vector<Rational>& b,
                               const std::vector<Rational>& c);
LpResult<double> simplex_max(const Matrix<double>& A, const std::vector<double>& b,
                             const std::vector<double>& c);

}  // namespace vcmax
