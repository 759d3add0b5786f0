#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vcmax/basis.hpp"
#include "vcmax/matrix.hpp"

namespace vcmax {

enum class Mode { Exact, Approximate };

const char* to_string(Mode m);

/// Default tolerance for the approximate determinant-sign oracle.
inline constexpr double kApproxEpsilon = 1e-9;

/// N x (n+1) matrix of basis values over the sample; row i is
/// (f1(x_i), ..., fn(x_i), f0(x_i)).  Exact entries for polynomial-pure
/// bases, doubles otherwise.
struct DesignMatrix {
    std::size_t sample_size = 0;  // N
    std::size_t basis_size = 0;   // n
    Mode mode = Mode::Exact;
    QMatrix exact;   // valid when mode == Exact
    DMatrix approx;  // valid when mode == Approximate
    std::vector<Point> points;
};

DesignMatrix build_design_matrix(const FunctionBasis& b, std::span<const Point> sample);

enum class VerdictQuality { Certified, ApproximateOnly };

const char* to_string(VerdictQuality q);

/// Outcome of one of the two sufficient conditions.  Subset indices are
/// 0-based positions into the sample.
struct ConditionResult {
    bool holds = false;
    std::optional<std::vector<std::size_t>> failing_subset;  // lexicographically least failure
    std::uint64_t checked_count = 0;
    VerdictQuality quality = VerdictQuality::Certified;
    std::vector<std::vector<std::size_t>> all_failing;  // populated in exhaustive mode
};

/// Condition 1: every n-row minor on the member columns f1..fn is
/// nonsingular (the basis has full dimension on every n-point subset).
/// Fail-fast by default; exhaustive mode gathers every failing subset.
/// Requires N >= n.
ConditionResult check_condition1(const DesignMatrix& dm, bool exhaustive = false,
                                 double epsilon = kApproxEpsilon);

/// Condition 2: every (n+1)-row minor on all columns (f1..fn, f0) is
/// nonsingular (no parameter choice makes f0 - f vanish at n+1 sample
/// points).  Requires N >= n+1.
ConditionResult check_condition2(const DesignMatrix& dm, bool exhaustive = false,
                                 double epsilon = kApproxEpsilon);

struct GeneralPositionResult {
    ConditionResult condition1;
    ConditionResult condition2;
    bool certified = false;  // exact mode with both conditions holding
};

/// Runs both checks on the sample.  Requires N >= n+1.
GeneralPositionResult verify_general_position(const FunctionBasis& b, std::span<const Point> sample,
                                              bool exhaustive = false);

}  // namespace vcmax
