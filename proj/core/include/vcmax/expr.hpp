#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "vcmax/rational.hpp"

namespace vcmax {

enum class ExprKind { Constant, Variable, Add, Sub, Mul, Pow, Negate, Sin, Cos, Exp };

struct ExprNode;
using ExprNodePtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    ExprKind kind;
    Rational value;         // Constant
    std::size_t var = 0;    // Variable
    unsigned exponent = 0;  // Pow
    ExprNodePtr lhs, rhs;
    bool pure = true;  // no sin/cos/exp anywhere below
};

/// Immutable expression over rational constants, variables x1..xk, binary
/// + - * ^ (non-negative integer exponents), unary minus, and sin/cos/exp.
/// Value-like: copying shares the underlying nodes.
class Expr {
public:
    Expr() = default;

    static Expr constant(Rational v);
    static Expr variable(std::size_t index);
    static Expr add(Expr a, Expr b);
    static Expr sub(Expr a, Expr b);
    static Expr mul(Expr a, Expr b);
    static Expr pow(Expr base, unsigned exponent);
    static Expr negate(Expr a);  // folds -constant into a negative constant
    static Expr sin(Expr a);
    static Expr cos(Expr a);
    static Expr exp(Expr a);

    bool valid() const { return root_ != nullptr; }

    /// True iff no sin/cos/exp node appears (exact evaluation possible).
    bool polynomial_pure() const;

    /// Largest variable index used; 0 if none (check has_variables()).
    std::size_t max_variable() const;
    bool has_variables() const;

    /// Exact evaluation; throws InvalidInputError on a non-pure expression
    /// or when the point has too few coordinates.
    Rational eval_exact(std::span<const Rational> point) const;

    /// Floating evaluation; throws InvalidInputError if the result overflows.
    double eval_double(std::span<const double> point) const;

    /// Canonical text form; parsing it back yields a structurally equal tree.
    std::string str() const;

    friend bool structurally_equal(const Expr& a, const Expr& b);

    const ExprNodePtr& node() const { return root_; }

private:
    explicit Expr(ExprNodePtr node) : root_(std::move(node)) {}
    ExprNodePtr root_;
};

/// Parses an expression over k variables.  Surface variable names: "x", "y",
/// "z" (indices 0..2) and "x1".."x9" (indices 0..8); a name is rejected when
/// its index is >= k.  Precedence: ^ binds tighter than unary minus, which
/// binds tighter than *, which binds tighter than + and -.  Division is
/// folded at parse time and only allowed between constant subexpressions.
Expr parse_expression(std::string_view text, std::size_t k);

}  // namespace vcmax
