#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "vcmax/combinatorics.hpp"
#include "vcmax/conditions.hpp"
#include "vcmax/sampling.hpp"

using vcmax::BigInt;
using vcmax::DesignMatrix;
using vcmax::Expr;
using vcmax::FunctionBasis;
using vcmax::Mode;
using vcmax::parse_expression;
using vcmax::Point;
using vcmax::QMatrix;
using vcmax::Rational;
using vcmax::VerdictQuality;

namespace {

Point pt(std::initializer_list<const char*> coords) {
    Point p;
    for (const char* c : coords) p.push_back(Rational::parse(c));
    return p;
}

std::vector<Point> collinear3() { return {pt({"0", "0"}), pt({"1", "1"}), pt({"2", "2"})}; }

std::vector<Point> concyclic4() {
    return {pt({"1", "0"}), pt({"0", "1"}), pt({"-1", "0"}), pt({"0", "-1"})};
}

QMatrix minor_of(const DesignMatrix& dm, std::span<const std::size_t> rows, std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = dm.exact.at(rows[r], c);
    }
    return m;
}

}  // namespace

TEST_CASE("design matrix rows are basis evaluations") {
    const FunctionBasis disk = vcmax::make_disks(2);
    std::vector<Point> pts{pt({"0", "0"}), pt({"1", "0"}), pt({"0", "1"})};
    const DesignMatrix dm = build_design_matrix(disk, pts);
    CHECK(dm.mode == Mode::Exact);
    CHECK(dm.sample_size == 3);
    CHECK(dm.basis_size == 3);
    const Rational expected[3][4] = {
        {1, 0, 0, 0},
        {1, 1, 0, -1},
        {1, 0, 1, -1},
    };
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 4; ++j) CHECK(dm.exact.at(i, j) == expected[i][j]);
    }

    const FunctionBasis poly = vcmax::make_poly_threshold(2);
    const DesignMatrix dm2 = build_design_matrix(poly, std::vector<Point>{pt({"2", "5"})});
    CHECK(dm2.exact.at(0, 0) == Rational(1));
    CHECK(dm2.exact.at(0, 1) == Rational(2));
    CHECK(dm2.exact.at(0, 2) == Rational(4));
    CHECK(dm2.exact.at(0, 3) == Rational(5));

    CHECK_THROWS_AS(build_design_matrix(disk, std::vector<Point>{}),
                    vcmax::InsufficientSampleError);
    CHECK_THROWS_AS(build_design_matrix(disk, std::vector<Point>{pt({"1"})}),
                    vcmax::DimensionError);
}

TEST_CASE("condition 1 on affinely independent and collinear samples") {
    const FunctionBasis disk = vcmax::make_disks(2);

    const DesignMatrix good =
        build_design_matrix(disk, std::vector<Point>{pt({"0", "0"}), pt({"1", "0"}), pt({"0", "1"})});
    const auto r1 = check_condition1(good);
    CHECK(r1.holds);
    CHECK(r1.checked_count == 1);  // C(3,3)
    CHECK(r1.quality == VerdictQuality::Certified);
    CHECK_FALSE(r1.failing_subset.has_value());

    const DesignMatrix bad = build_design_matrix(disk, collinear3());
    const auto r2 = check_condition1(bad);
    CHECK_FALSE(r2.holds);
    REQUIRE(r2.failing_subset.has_value());
    CHECK(*r2.failing_subset == std::vector<std::size_t>{0, 1, 2});
    CHECK(r2.checked_count == 0);  // fail-fast counts the passes before the failure
}

TEST_CASE("condition 1 minors agree with the cofactor oracle") {
    const FunctionBasis poly = vcmax::make_poly_threshold(2);
    std::vector<Point> pts{pt({"0", "1"}), pt({"1", "2"}), pt({"2", "1"}), pt({"1/2", "3"})};
    const DesignMatrix dm = build_design_matrix(poly, pts);
    CHECK(check_condition1(dm).holds);

    vcmax::for_each_combination(4, 3, [&](std::span<const std::size_t> rows) {
        const QMatrix m = minor_of(dm, rows, 3);
        CHECK_FALSE(testsupport::det_cofactor(m).is_zero());  // distinct x: Vandermonde
        CHECK(testsupport::det_cofactor(m) == det_exact(m));
        return true;
    });
}

TEST_CASE("condition 2 detects concyclic quadruples") {
    const FunctionBasis disk = vcmax::make_disks(2);

    const DesignMatrix bad = build_design_matrix(disk, concyclic4());
    const auto r = check_condition2(bad);
    CHECK_FALSE(r.holds);
    REQUIRE(r.failing_subset.has_value());
    CHECK(*r.failing_subset == std::vector<std::size_t>{0, 1, 2, 3});

    // The oracle confirms: the 4x4 determinant on concyclic points vanishes.
    std::vector<std::size_t> all{0, 1, 2, 3};
    CHECK(testsupport::det_cofactor(minor_of(bad, all, 4)).is_zero());

    const DesignMatrix good = build_design_matrix(
        disk, std::vector<Point>{pt({"0", "0"}), pt({"1", "0"}), pt({"0", "1"}), pt({"1/3", "1/7"})});
    CHECK(check_condition2(good).holds);
    CHECK_FALSE(testsupport::det_cofactor(minor_of(good, all, 4)).is_zero());
}

TEST_CASE("a target inside the span kills every augmented minor") {
    std::vector<Expr> members{parse_expression("1", 2), parse_expression("x", 2),
                              parse_expression("y", 2)};
    const FunctionBasis halfspace(2, parse_expression("1/2 + 2*x - 3*y", 2), std::move(members),
                                  "halfspace");
    std::mt19937_64 rng(8);
    const auto pts = testsupport::rand_points(rng, 6, 2);
    const DesignMatrix dm = build_design_matrix(halfspace, pts);

    const auto r = check_condition2(dm, /*exhaustive=*/true);
    CHECK_FALSE(r.holds);
    CHECK(r.all_failing.size() == vcmax::binomial(6, 4));  // every subset fails
    CHECK(r.checked_count == vcmax::binomial(6, 4));

    // Condition 1 is indifferent to f0 and may still hold.
    CHECK(check_condition1(dm).holds);
}

TEST_CASE("duplicate points defeat condition 1") {
    const FunctionBasis disk = vcmax::make_disks(2);
    std::vector<Point> pts{pt({"0", "0"}), pt({"1", "0"}), pt({"0", "1"}), pt({"1", "0"})};
    const auto r = check_condition1(build_design_matrix(disk, pts));
    CHECK_FALSE(r.holds);
    REQUIRE(r.failing_subset.has_value());
    // lexicographically least singular triple contains both copies of (1,0)
    CHECK(*r.failing_subset == std::vector<std::size_t>{0, 1, 3});
}

TEST_CASE("sample-size preconditions") {
    const FunctionBasis disk = vcmax::make_disks(2);
    const DesignMatrix two = build_design_matrix(disk, std::vector<Point>{pt({"0", "0"}), pt({"1", "0"})});
    CHECK_THROWS_AS(check_condition1(two), vcmax::InsufficientSampleError);
    const DesignMatrix three =
        build_design_matrix(disk, std::vector<Point>{pt({"0", "0"}), pt({"1", "0"}), pt({"0", "1"})});
    CHECK_THROWS_AS(check_condition2(three), vcmax::InsufficientSampleError);
    CHECK_THROWS_AS(verify_general_position(disk, std::vector<Point>{pt({"0", "0"})}),
                    vcmax::InsufficientSampleError);
}

TEST_CASE("verdicts are invariant under sample permutation") {
    const FunctionBasis disk = vcmax::make_disks(2);
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 15; ++rep) {
        auto pts = testsupport::rand_points(rng, 7, 2, 3);  // coarse grid: degeneracies do occur
        if (rep % 3 == 0) {
            pts[3] = collinear3()[0];
            pts[4] = collinear3()[1];
            pts[5] = collinear3()[2];
        }
        const DesignMatrix dm = build_design_matrix(disk, pts);
        const bool c1 = check_condition1(dm).holds;
        const bool c2 = check_condition2(dm).holds;

        std::shuffle(pts.begin(), pts.end(), rng);
        const DesignMatrix shuffled = build_design_matrix(disk, pts);
        CHECK(check_condition1(shuffled).holds == c1);
        CHECK(check_condition2(shuffled).holds == c2);
    }
}

TEST_CASE("verdicts are invariant under scaling a member") {
    std::vector<Expr> members{parse_expression("1", 2), parse_expression("x", 2),
                              parse_expression("y", 2)};
    const FunctionBasis base(2, parse_expression("-x^2 - y^2", 2), std::move(members), "disk");
    std::vector<Expr> scaled_members{parse_expression("1", 2), parse_expression("5*x", 2),
                                     parse_expression("y", 2)};
    const FunctionBasis scaled(2, parse_expression("-x^2 - y^2", 2), std::move(scaled_members),
                               "scaled-disk");

    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 10; ++rep) {
        auto pts = testsupport::rand_points(rng, 6, 2, 3);
        if (rep % 2 == 0) {
            pts[0] = concyclic4()[0];
            pts[1] = concyclic4()[1];
            pts[2] = concyclic4()[2];
            pts[3] = concyclic4()[3];
        }
        const DesignMatrix a = build_design_matrix(base, pts);
        const DesignMatrix b = build_design_matrix(scaled, pts);
        CHECK(check_condition1(a).holds == check_condition1(b).holds);
        CHECK(check_condition2(a).holds == check_condition2(b).holds);
    }
}

TEST_CASE("conditions that hold on a sample hold on every large-enough subsample") {
    const FunctionBasis disk = vcmax::make_disks(2);
    vcmax::SamplingSpec spec;
    spec.count = 9;
    spec.dimension = 2;
    spec.seed = 2718;
    const auto pts = sample_points(spec);
    const auto full = verify_general_position(disk, pts);
    REQUIRE(full.condition1.holds);
    REQUIRE(full.condition2.holds);
    REQUIRE(full.certified);

    std::mt19937_64 rng(4);
    for (int rep = 0; rep < 10; ++rep) {
        auto shuffled = pts;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        std::uniform_int_distribution<std::size_t> size(4, 8);  // >= n+1
        shuffled.resize(size(rng));
        const auto sub = verify_general_position(disk, shuffled);
        CHECK(sub.condition1.holds);
        CHECK(sub.condition2.holds);
    }
}

TEST_CASE("condition 1 failure does not determine condition 2") {
    const FunctionBasis disk = vcmax::make_disks(2);

    // Collinear triple, but no degenerate quadruple: 1 fails, 2 holds.
    std::vector<Point> mixed{pt({"0", "0"}), pt({"1", "1"}), pt({"2", "2"}), pt({"0", "1"})};
    const DesignMatrix dm = build_design_matrix(disk, mixed);
    CHECK_FALSE(check_condition1(dm).holds);
    CHECK(check_condition2(dm).holds);

    // Collinear triple and a concyclic quadruple: both fail.
    std::vector<Point> both{pt({"1", "0"}), pt({"0", "1"}), pt({"-1", "0"}),
                            pt({"0", "-1"}), pt({"0", "0"}), pt({"2", "2"}), pt({"3", "3"})};
    const DesignMatrix dm2 = build_design_matrix(disk, both);
    CHECK_FALSE(check_condition1(dm2).holds);
    CHECK_FALSE(check_condition2(dm2).holds);
}

TEST_CASE("approximate bases yield approximate-only verdicts") {
    const FunctionBasis trig = vcmax::make_trig(1);
    vcmax::SamplingSpec spec;
    spec.count = 6;
    spec.dimension = 2;
    spec.seed = 5;
    const auto pts = sample_points(spec);
    const DesignMatrix dm = build_design_matrix(trig, pts);
    CHECK(dm.mode == Mode::Approximate);
    const auto r = verify_general_position(trig, pts);
    CHECK(r.condition1.quality == VerdictQuality::ApproximateOnly);
    CHECK(r.condition2.quality == VerdictQuality::ApproximateOnly);
    CHECK_FALSE(r.certified);
}

TEST_CASE("exhaustive mode reports the lexicographically least witness first") {
    const FunctionBasis disk = vcmax::make_disks(2);
    std::vector<Point> pts = concyclic4();
    pts.push_back(pt({"1/3", "1/5"}));
    const DesignMatrix dm = build_design_matrix(disk, pts);

    const auto fail_fast = check_condition2(dm);
    const auto exhaustive = check_condition2(dm, /*exhaustive=*/true);
    REQUIRE(fail_fast.failing_subset.has_value());
    REQUIRE(exhaustive.failing_subset.has_value());
    CHECK(*fail_fast.failing_subset == *exhaustive.failing_subset);
    CHECK(exhaustive.checked_count == vcmax::binomial(5, 4));
    CHECK(exhaustive.all_failing.size() >= 1);
    CHECK(std::is_sorted(exhaustive.all_failing.begin(), exhaustive.all_failing.end()));
}
