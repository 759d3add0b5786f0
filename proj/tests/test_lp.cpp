#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vcmax/lp.hpp"

using vcmax::BigInt;
using vcmax::DMatrix;
using vcmax::LpResult;
using vcmax::LpStatus;
using vcmax::QMatrix;
using vcmax::Rational;

namespace {

QMatrix qmat(std::initializer_list<std::initializer_list<int>> rows) {
    QMatrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (int v : row) m.at(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

std::vector<Rational> qvec(std::initializer_list<int> vals) {
    std::vector<Rational> v;
    for (int x : vals) v.push_back(Rational(x));
    return v;
}

}  // namespace

TEST_CASE("textbook maximization") {
    // max 3x + 2y s.t. x + y <= 4, x + 3y <= 6
    const auto r = simplex_max(qmat({{1, 1}, {1, 3}}), qvec({4, 6}), qvec({3, 2}));
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == Rational(12));
    CHECK(r.solution[0] == Rational(4));
    CHECK(r.solution[1] == Rational(0));
}

TEST_CASE("negative right-hand sides go through phase 1") {
    // max x s.t. -x <= -2, x <= 5  (i.e. 2 <= x <= 5)
    const auto r = simplex_max(qmat({{-1}, {1}}), qvec({-2, 5}), qvec({1}));
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == Rational(5));
    CHECK(r.solution[0] == Rational(5));
}

TEST_CASE("infeasible system is detected") {
    // x <= 1 and -x <= -3 (x >= 3) cannot both hold
    const auto r = simplex_max(qmat({{1}, {-1}}), qvec({1, -3}), qvec({1}));
    CHECK(r.status == LpStatus::Infeasible);
}

TEST_CASE("unbounded objective is detected") {
    const auto r = simplex_max(qmat({{-1}}), qvec({0}), qvec({1}));  // max x, x >= 0
    CHECK(r.status == LpStatus::Unbounded);
}

TEST_CASE("optimum is exact on fractional data") {
    // max x s.t. 3x <= 1
    QMatrix a(1, 1);
    a.at(0, 0) = Rational(3);
    const auto r = simplex_max(a, qvec({1}), qvec({1}));
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == Rational(BigInt(1), BigInt(3)));

    // fractional constraint data
    QMatrix b(2, 2);
    b.at(0, 0) = Rational::parse("1/2");
    b.at(0, 1) = Rational::parse("1/3");
    b.at(1, 0) = Rational::parse("2/7");
    b.at(1, 1) = Rational::parse("5");
    std::vector<Rational> rhs{Rational::parse("7/6"), Rational::parse("3/2")};
    const auto r2 = simplex_max(b, rhs, qvec({1, 1}));
    REQUIRE(r2.status == LpStatus::Optimal);
    // optimum is a vertex: solving 1/2 x + 1/3 y = 7/6, 2/7 x + 5 y = 3/2 exactly
    const Rational x = r2.solution[0], y = r2.solution[1];
    CHECK(Rational::parse("1/2") * x + Rational::parse("1/3") * y <= rhs[0]);
    CHECK(Rational::parse("2/7") * x + Rational::parse("5") * y <= rhs[1]);
    CHECK(r2.objective == x + y);
}

TEST_CASE("degenerate cycling example terminates with the right optimum") {
    // Beale's cycling example; Bland's rule must terminate at 1/20.
    QMatrix a(3, 4);
    const char* rows[3][4] = {
        {"1/4", "-60", "-1/25", "9"},
        {"1/2", "-90", "-1/50", "3"},
        {"0", "0", "1", "0"},
    };
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 4; ++j) a.at(i, j) = Rational::parse(rows[i][j]);
    }
    std::vector<Rational> b{Rational(0), Rational(0), Rational(1)};
    std::vector<Rational> c{Rational::parse("3/4"), Rational(-150), Rational::parse("1/50"),
                            Rational(-6)};
    const auto r = simplex_max(a, b, c);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == Rational(BigInt(1), BigInt(20)));
}

TEST_CASE("floating overload approximates the exact one") {
    DMatrix a(2, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 1;
    a.at(1, 0) = 1;
    a.at(1, 1) = 3;
    const auto r = simplex_max(a, std::vector<double>{4, 6}, std::vector<double>{3, 2});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == doctest::Approx(12.0));
}

TEST_CASE("empty constraint matrix with bounded objective") {
    // max t s.t. t <= 1 only
    const auto r = simplex_max(qmat({{1}}), qvec({1}), qvec({1}));
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == Rational(1));
}
