#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "vcmax/expr.hpp"
#include "vcmax/rational.hpp"

namespace vcmax {

/// Sample point in R^k; coordinates are always exact rationals (decimal and
/// dyadic inputs are converted exactly).
using Point = std::vector<Rational>;

std::vector<double> point_to_doubles(const Point& p);

enum class Exactness { ExactPolynomial, ApproximateAnalytic };

const char* to_string(Exactness e);

/// A target function f0 together with basis members f1..fn.  The family of
/// positivity sets {x : f0(x) - sum_j a_j f_j(x) > 0} over parameter vectors
/// a is what the rest of the library analyzes.
class FunctionBasis {
public:
    /// Throws InvalidInputError when members are empty, a variable index is
    /// out of range, or f0 is syntactically identical to one of the members.
    FunctionBasis(std::size_t ambient_dimension, Expr target, std::vector<Expr> members,
                  std::string label = "custom");

    std::size_t ambient_dimension() const { return k_; }
    std::size_t size() const { return members_.size(); }  // n
    const Expr& target() const { return f0_; }
    const std::vector<Expr>& members() const { return members_; }
    Exactness exactness() const { return exactness_; }
    const std::string& label() const { return label_; }

    /// One-line description for reports: label, n, k, and the expressions.
    std::string describe() const;

    /// (f1(p), ..., fn(p), f0(p)) evaluated exactly; requires ExactPolynomial.
    std::vector<Rational> eval_row_exact(const Point& p) const;

    /// Same row in floating point (valid for either exactness).
    std::vector<double> eval_row_double(const Point& p) const;

private:
    std::size_t k_;
    Expr f0_;
    std::vector<Expr> members_;
    Exactness exactness_;
    std::string label_;
};

/// Built-in families.
///
/// disks(k):          members (1, x1, ..., xk), f0 = -(x1^2 + ... + xk^2).
/// monomials(k, d):   members = all monomials of total degree 1..d, ordered
///                    by degree then lexicographically (x before y before z);
///                    f0 is a supplied expression (default "1").
/// poly_threshold(d): variables (x, y); members (1, x, x^2, ..., x^d); f0 = y.
/// trig(h):           variables (x, y); members (1, cos x, ..., cos hx,
///                    sin x, ..., sin hx); f0 = y.
FunctionBasis make_disks(std::size_t k);
FunctionBasis make_monomials(std::size_t k, unsigned max_degree, const std::string& f0 = "1");
FunctionBasis make_poly_threshold(unsigned degree);
FunctionBasis make_trig(unsigned harmonics);

/// Dispatcher for the CLI: family name plus "key=value" parameters.
/// Known families: disks (alias disks_k), monomials, poly_threshold, trig.
FunctionBasis builtin_basis(const std::string& family, const std::map<std::string, std::string>& params);

/// True iff the (n+1)-column evaluation matrix over the sample has full
/// column rank n+1.  A true result certifies linear independence of
/// (f1..fn, f0) as functions; false on one sample is inconclusive.
/// Requires |sample| >= n+1.
bool check_linear_independence(const FunctionBasis& b, std::span<const Point> sample);

/// Basis spec file:
///   dim: <k>
///   f0: <expression>
///   f: <expression>     (one line per member)
/// Blank lines and lines starting with '#' are ignored.
FunctionBasis read_basis_file(std::istream& in, const std::string& label = "file");
void write_basis_file(std::ostream& out, const FunctionBasis& b);

}  // namespace vcmax
