#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vcmax/expr.hpp"
#include "vcmax/errors.hpp"

using vcmax::BigInt;
using vcmax::Expr;
using vcmax::parse_expression;
using vcmax::Rational;

namespace {

Rational eval(const Expr& e, std::initializer_list<Rational> coords) {
    std::vector<Rational> p(coords);
    return e.eval_exact(p);
}

double evald(const Expr& e, std::initializer_list<double> coords) {
    std::vector<double> p(coords);
    return e.eval_double(p);
}

}  // namespace

TEST_CASE("polynomial parsing and exact evaluation") {
    const Expr e = parse_expression("x^2 + y^2", 2);
    CHECK(e.polynomial_pure());
    CHECK(eval(e, {Rational(1), Rational(2)}) == Rational(5));
    CHECK(eval(e, {Rational(BigInt(1), BigInt(2)), Rational(0)}) == Rational(BigInt(1), BigInt(4)));
}

TEST_CASE("transcendental expressions are flagged impure") {
    const Expr e = parse_expression("sin(2*x)", 1);
    CHECK_FALSE(e.polynomial_pure());
    CHECK(evald(e, {0.0}) == doctest::Approx(0.0));
    CHECK(evald(e, {0.25}) == doctest::Approx(std::sin(0.5)));
    CHECK_THROWS_AS(eval(e, {Rational(0)}), vcmax::InvalidInputError);
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse_expression("x +", 1);
        FAIL("expected a parse error");
    } catch (const vcmax::ParseError& e) {
        CHECK(e.position() == 4);  // end of input
    }
    CHECK_THROWS_AS(parse_expression("", 1), vcmax::ParseError);
    CHECK_THROWS_AS(parse_expression("(x", 1), vcmax::ParseError);
    CHECK_THROWS_AS(parse_expression("2x", 1), vcmax::ParseError);
    CHECK_THROWS_AS(parse_expression("x*", 1), vcmax::ParseError);
}

TEST_CASE("unknown identifiers and out-of-range variables are rejected") {
    CHECK_THROWS_WITH_AS(parse_expression("w + 1", 2), doctest::Contains("unknown identifier"),
                         vcmax::ParseError);
    CHECK_THROWS_WITH_AS(parse_expression("y", 1), doctest::Contains("out of range"),
                         vcmax::ParseError);
    CHECK_THROWS_WITH_AS(parse_expression("tan(x)", 1), doctest::Contains("unknown function"),
                         vcmax::ParseError);
    // x1 aliases x, x2 aliases y
    CHECK(eval(parse_expression("x1 + 2*x2", 2), {Rational(1), Rational(3)}) == Rational(7));
}

TEST_CASE("exponents must be non-negative integers") {
    CHECK_THROWS_AS(parse_expression("x^-1", 1), vcmax::ParseError);
    CHECK_THROWS_AS(parse_expression("x^0.5", 1), vcmax::ParseError);
    CHECK_THROWS_AS(parse_expression("x^y", 2), vcmax::ParseError);
    CHECK(eval(parse_expression("x^(3)", 1), {Rational(2)}) == Rational(8));
    CHECK(eval(parse_expression("x^0", 1), {Rational(7)}) == Rational(1));
}

TEST_CASE("precedence: power over unary minus over product over sum") {
    CHECK(eval(parse_expression("-x^2", 1), {Rational(2)}) == Rational(-4));
    CHECK(eval(parse_expression("(-x)^2", 1), {Rational(2)}) == Rational(4));
    CHECK(eval(parse_expression("-3^2", 1), {Rational(0)}) == Rational(-9));
    CHECK(eval(parse_expression("2*-3", 1), {Rational(0)}) == Rational(-6));
    CHECK(eval(parse_expression("1 - 2 - 3", 1), {Rational(0)}) == Rational(-4));
    CHECK(eval(parse_expression("2 + 3*4^2", 1), {Rational(0)}) == Rational(50));
    CHECK(eval(parse_expression("x^2^3", 1), {Rational(2)}) == Rational(64));  // (x^2)^3
}

TEST_CASE("division folds constants only") {
    CHECK(eval(parse_expression("1/3*x", 1), {Rational(3)}) == Rational(1));
    CHECK_THROWS_AS(parse_expression("x*1/3", 1), vcmax::ParseError);  // left side is x*1, not a literal
    CHECK_THROWS_AS(parse_expression("x/3", 1), vcmax::ParseError);
    CHECK_THROWS_AS(parse_expression("1/0", 1), vcmax::ParseError);
    CHECK(eval(parse_expression("3/4 + 1/4", 1), {Rational(0)}) == Rational(1));
}

TEST_CASE("decimal literals are exact") {
    CHECK(eval(parse_expression("0.1 + 0.2", 1), {Rational(0)}) ==
          Rational(BigInt(3), BigInt(10)));
    CHECK(eval(parse_expression("0.25*x", 1), {Rational(8)}) == Rational(2));
}

namespace {

Expr random_expr(std::mt19937_64& rng, std::size_t k, int depth, bool allow_transcendental) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : (allow_transcendental ? 8 : 7));
    switch (pick(rng)) {
        case 0: {
            std::uniform_int_distribution<int> num(-9, 9);
            std::uniform_int_distribution<int> den(1, 9);
            return Expr::constant(Rational(BigInt(num(rng)), BigInt(den(rng))));
        }
        case 1: {
            std::uniform_int_distribution<std::size_t> var(0, k - 1);
            return Expr::variable(var(rng));
        }
        case 2:
            return Expr::add(random_expr(rng, k, depth - 1, allow_transcendental),
                             random_expr(rng, k, depth - 1, allow_transcendental));
        case 3:
            return Expr::sub(random_expr(rng, k, depth - 1, allow_transcendental),
                             random_expr(rng, k, depth - 1, allow_transcendental));
        case 4:
            return Expr::mul(random_expr(rng, k, depth - 1, allow_transcendental),
                             random_expr(rng, k, depth - 1, allow_transcendental));
        case 5: {
            std::uniform_int_distribution<unsigned> e(0, 4);
            return Expr::pow(random_expr(rng, k, depth - 1, allow_transcendental), e(rng));
        }
        case 6:
            return Expr::negate(random_expr(rng, k, depth - 1, allow_transcendental));
        case 7:
            return Expr::mul(Expr::constant(Rational(2)),
                             random_expr(rng, k, depth - 1, allow_transcendental));
        default: {
            std::uniform_int_distribution<int> f(0, 2);
            Expr inner = random_expr(rng, k, depth - 1, allow_transcendental);
            if (f(rng) == 0) return Expr::sin(std::move(inner));
            if (f(rng) == 1) return Expr::cos(std::move(inner));
            return Expr::exp(std::move(inner));
        }
    }
}

}  // namespace

TEST_CASE("print/parse round trip is structurally exact") {
    std::mt19937_64 rng(2024);
    for (int rep = 0; rep < 300; ++rep) {
        const Expr e = random_expr(rng, 3, 4, true);
        const std::string text = e.str();
        CAPTURE(text);
        const Expr back = parse_expression(text, 3);
        CHECK(structurally_equal(e, back));
    }
}

TEST_CASE("floating evaluation tracks exact evaluation on pure expressions") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> coord(-16, 16);
    for (int rep = 0; rep < 200; ++rep) {
        const Expr e = random_expr(rng, 2, 4, false);
        if (!e.polynomial_pure()) continue;
        std::vector<Rational> p{Rational(BigInt(coord(rng)), BigInt(16)),
                                Rational(BigInt(coord(rng)), BigInt(16))};
        std::vector<double> pd{p[0].to_double(), p[1].to_double()};
        const double exact = e.eval_exact(p).to_double();
        const double approx = e.eval_double(pd);
        CHECK(std::abs(approx - exact) <= 1e-12 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("pretty printing uses minimal parentheses") {
    CHECK(parse_expression("x + y*z", 3).str() == "x + y*z");
    CHECK(parse_expression("(x + y)*z", 3).str() == "(x + y)*z");
    CHECK(parse_expression("-(x + y)", 2).str() == "-(x + y)");
    CHECK(parse_expression("x - (y - z)", 3).str() == "x - (y - z)");
    CHECK(parse_expression("x^2", 1).str() == "x^2");
}
