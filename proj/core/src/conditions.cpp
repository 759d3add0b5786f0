#include "vcmax/conditions.hpp"

#include "vcmax/combinatorics.hpp"
#include "vcmax/errors.hpp"

namespace vcmax {

const char* to_string(Mode m) { return m == Mode::Exact ? "exact" : "approximate"; }

const char* to_string(VerdictQuality q) {
    return q == VerdictQuality::Certified ? "certified" : "approximate-only";
}

DesignMatrix build_design_matrix(const FunctionBasis& b, std::span<const Point> sample) {
    if (sample.empty()) throw InsufficientSampleError("design matrix needs at least one sample point");

    DesignMatrix dm;
    dm.sample_size = sample.size();
    dm.basis_size = b.size();
    dm.mode = b.exactness() == Exactness::ExactPolynomial ? Mode::Exact : Mode::Approximate;
    dm.points.assign(sample.begin(), sample.end());

    const std::size_t cols = b.size() + 1;
    if (dm.mode == Mode::Exact) {
        dm.exact = QMatrix(sample.size(), cols);
        for (std::size_t i = 0; i < sample.size(); ++i) {
            std::vector<Rational> row = b.eval_row_exact(sample[i]);
            for (std::size_t j = 0; j < cols; ++j) dm.exact.at(i, j) = std::move(row[j]);
        }
    } else {
        dm.approx = DMatrix(sample.size(), cols);
        for (std::size_t i = 0; i < sample.size(); ++i) {
            std::vector<double> row = b.eval_row_double(sample[i]);
            for (std::size_t j = 0; j < cols; ++j) dm.approx.at(i, j) = row[j];
        }
    }
    return dm;
}

namespace {

// Shared scan over all row subsets of the given size: a subset fails when its
// minor on the first `minor_cols` columns has determinant (sign) zero.
ConditionResult scan_minors(const DesignMatrix& dm, std::size_t subset_size, std::size_t minor_cols,
                            bool exhaustive, double epsilon) {
    ConditionResult result;
    result.quality =
        dm.mode == Mode::Exact ? VerdictQuality::Certified : VerdictQuality::ApproximateOnly;
    result.holds = true;

    const bool exact = dm.mode == Mode::Exact;
    QMatrix qminor(subset_size, minor_cols);
    DMatrix dminor(subset_size, minor_cols);

    std::uint64_t seen = 0;
    for_each_combination(dm.sample_size, subset_size, [&](std::span<const std::size_t> subset) {
        bool singular = false;
        if (exact) {
            for (std::size_t r = 0; r < subset_size; ++r) {
                for (std::size_t c = 0; c < minor_cols; ++c) qminor.at(r, c) = dm.exact.at(subset[r], c);
            }
            singular = det_exact(qminor).is_zero();
        } else {
            for (std::size_t r = 0; r < subset_size; ++r) {
                for (std::size_t c = 0; c < minor_cols; ++c) dminor.at(r, c) = dm.approx.at(subset[r], c);
            }
            singular = det_sign_approx(dminor, epsilon) == Sign::Zero;
        }

        if (!singular) {
            ++seen;
            return true;
        }
        result.holds = false;
        if (!result.failing_subset) {
            result.failing_subset = std::vector<std::size_t>(subset.begin(), subset.end());
        }
        if (!exhaustive) return false;  // fail fast; `seen` holds the passes so far
        result.all_failing.emplace_back(subset.begin(), subset.end());
        ++seen;
        return true;
    });

    result.checked_count = seen;
    return result;
}

}  // namespace

ConditionResult check_condition1(const DesignMatrix& dm, bool exhaustive, double epsilon) {
    if (dm.sample_size < dm.basis_size) {
        throw InsufficientSampleError("condition 1 needs at least n sample points");
    }
    return scan_minors(dm, dm.basis_size, dm.basis_size, exhaustive, epsilon);
}

ConditionResult check_condition2(const DesignMatrix& dm, bool exhaustive, double epsilon) {
    if (dm.sample_size < dm.basis_size + 1) {
        throw InsufficientSampleError("condition 2 needs at least n+1 sample points");
    }
    return scan_minors(dm, dm.basis_size + 1, dm.basis_size + 1, exhaustive, epsilon);
}

GeneralPositionResult verify_general_position(const FunctionBasis& b, std::span<const Point> sample,
                                              bool exhaustive) {
    if (sample.size() < b.size() + 1) {
        throw InsufficientSampleError("general-position check needs at least n+1 sample points");
    }
    const DesignMatrix dm = build_design_matrix(b, sample);
    GeneralPositionResult result;
    result.condition1 = check_condition1(dm, exhaustive);
    result.condition2 = check_condition2(dm, exhaustive);
    result.certified =
        dm.mode == Mode::Exact && result.condition1.holds && result.condition2.holds;
    return result;
}

}  // namespace vcmax
