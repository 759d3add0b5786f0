#include "vcmax/basis.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "vcmax/errors.hpp"
#include "vcmax/matrix.hpp"

namespace vcmax {

std::vector<double> point_to_doubles(const Point& p) {
    std::vector<double> out;
    out.reserve(p.size());
    for (const Rational& c : p) out.push_back(c.to_double());
    return out;
}

const char* to_string(Exactness e) {
    return e == Exactness::ExactPolynomial ? "exact-polynomial" : "approximate-analytic";
}

FunctionBasis::FunctionBasis(std::size_t ambient_dimension, Expr target, std::vector<Expr> members,
                             std::string label)
    : k_(ambient_dimension), f0_(std::move(target)), members_(std::move(members)), label_(std::move(label)) {
    if (members_.empty()) throw InvalidInputError("basis needs at least one member");
    if (!f0_.valid()) throw InvalidInputError("basis target f0 is empty");
    if (k_ == 0) throw InvalidInputError("ambient dimension must be at least 1");

    bool pure = f0_.polynomial_pure();
    auto check_vars = [this](const Expr& e, const char* what) {
        if (e.has_variables() && e.max_variable() >= k_) {
            throw InvalidInputError(std::string(what) + " uses a variable beyond dimension " +
                                    std::to_string(k_));
        }
    };
    check_vars(f0_, "target f0");
    for (const Expr& m : members_) {
        if (!m.valid()) throw InvalidInputError("basis member is empty");
        check_vars(m, "basis member");
        pure = pure && m.polynomial_pure();
        if (structurally_equal(m, f0_)) {
            throw InvalidInputError("target f0 coincides syntactically with a basis member");
        }
    }
    exactness_ = pure ? Exactness::ExactPolynomial : Exactness::ApproximateAnalytic;
}

std::string FunctionBasis::describe() const {
    std::ostringstream os;
    os << label_ << " (k=" << k_ << ", n=" << members_.size() << ", " << to_string(exactness_) << ") f0="
       << f0_.str();
    for (std::size_t i = 0; i < members_.size(); ++i) os << "; f" << (i + 1) << "=" << members_[i].str();
    return os.str();
}

std::vector<Rational> FunctionBasis::eval_row_exact(const Point& p) const {
    if (exactness_ != Exactness::ExactPolynomial) {
        throw InvalidInputError("exact evaluation requires a polynomial-pure basis");
    }
    if (p.size() != k_) throw DimensionError("point dimension does not match basis");
    std::vector<Rational> row;
    row.reserve(members_.size() + 1);
    for (const Expr& m : members_) row.push_back(m.eval_exact(p));
    row.push_back(f0_.eval_exact(p));
    return row;
}

std::vector<double> FunctionBasis::eval_row_double(const Point& p) const {
    if (p.size() != k_) throw DimensionError("point dimension does not match basis");
    const std::vector<double> coords = point_to_doubles(p);
    std::vector<double> row;
    row.reserve(members_.size() + 1);
    for (const Expr& m : members_) row.push_back(m.eval_double(coords));
    row.push_back(f0_.eval_double(coords));
    return row;
}

FunctionBasis make_disks(std::size_t k) {
    if (k == 0) throw InvalidInputError("disks family needs k >= 1");
    std::vector<Expr> members;
    members.push_back(Expr::constant(Rational(1)));
    for (std::size_t i = 0; i < k; ++i) members.push_back(Expr::variable(i));
    Expr sum = Expr::pow(Expr::variable(0), 2);
    for (std::size_t i = 1; i < k; ++i) sum = Expr::add(std::move(sum), Expr::pow(Expr::variable(i), 2));
    Expr f0 = Expr::negate(std::move(sum));
    return FunctionBasis(k, std::move(f0), std::move(members), "disks(k=" + std::to_string(k) + ")");
}

namespace {

Expr monomial_expr(const std::vector<unsigned>& exponents) {
    Expr result;
    for (std::size_t v = 0; v < exponents.size(); ++v) {
        if (exponents[v] == 0) continue;
        Expr factor = exponents[v] == 1 ? Expr::variable(v) : Expr::pow(Expr::variable(v), exponents[v]);
        result = result.valid() ? Expr::mul(std::move(result), std::move(factor)) : std::move(factor);
    }
    return result.valid() ? result : Expr::constant(Rational(1));
}

// All exponent tuples of the given total degree, lexicographic with x1 first.
void degree_tuples(std::size_t k, unsigned degree, std::vector<unsigned>& current,
                   std::vector<std::vector<unsigned>>& out) {
    if (current.size() + 1 == k) {
        current.push_back(degree);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (unsigned e = degree; e + 1 > 0; --e) {
        current.push_back(e);
        degree_tuples(k, degree - e, current, out);
        current.pop_back();
    }
}

}  // namespace

FunctionBasis make_monomials(std::size_t k, unsigned max_degree, const std::string& f0) {
    if (k == 0) throw InvalidInputError("monomials family needs k >= 1");
    if (max_degree == 0) throw InvalidInputError("monomials family needs degree >= 1");
    std::vector<Expr> members;
    for (unsigned d = 1; d <= max_degree; ++d) {
        std::vector<std::vector<unsigned>> tuples;
        std::vector<unsigned> scratch;
        degree_tuples(k, d, scratch, tuples);
        for (const auto& t : tuples) members.push_back(monomial_expr(t));
    }
    Expr target = parse_expression(f0, k);
    return FunctionBasis(k, std::move(target), std::move(members),
                         "monomials(k=" + std::to_string(k) + ", d=" + std::to_string(max_degree) + ")");
}

FunctionBasis make_poly_threshold(unsigned degree) {
    if (degree == 0) throw InvalidInputError("poly_threshold family needs degree >= 1");
    std::vector<Expr> members;
    members.push_back(Expr::constant(Rational(1)));
    for (unsigned d = 1; d <= degree; ++d) {
        members.push_back(d == 1 ? Expr::variable(0) : Expr::pow(Expr::variable(0), d));
    }
    return FunctionBasis(2, Expr::variable(1), std::move(members),
                         "poly_threshold(d=" + std::to_string(degree) + ")");
}

FunctionBasis make_trig(unsigned harmonics) {
    if (harmonics == 0) throw InvalidInputError("trig family needs at least one harmonic");
    std::vector<Expr> members;
    members.push_back(Expr::constant(Rational(1)));
    auto arg = [](unsigned h) {
        Expr x = Expr::variable(0);
        return h == 1 ? x : Expr::mul(Expr::constant(Rational(static_cast<int>(h))), std::move(x));
    };
    for (unsigned h = 1; h <= harmonics; ++h) members.push_back(Expr::cos(arg(h)));
    for (unsigned h = 1; h <= harmonics; ++h) members.push_back(Expr::sin(arg(h)));
    return FunctionBasis(2, Expr::variable(1), std::move(members),
                         "trig(harmonics=" + std::to_string(harmonics) + ")");
}

namespace {

unsigned param_uint(const std::map<std::string, std::string>& params, const std::string& key,
                    std::optional<unsigned> fallback = std::nullopt) {
    auto it = params.find(key);
    if (it == params.end()) {
        if (fallback) return *fallback;
        throw InvalidInputError("missing required family parameter '" + key + "'");
    }
    try {
        const unsigned long v = std::stoul(it->second);
        if (v == 0 || v > 1000) throw InvalidInputError("parameter '" + key + "' out of range");
        return static_cast<unsigned>(v);
    } catch (const std::logic_error&) {
        throw InvalidInputError("parameter '" + key + "' must be a positive integer");
    }
}

}  // namespace

FunctionBasis builtin_basis(const std::string& family, const std::map<std::string, std::string>& params) {
    if (family == "disks" || family == "disks_k") {
        return make_disks(param_uint(params, "k", 2u));
    }
    if (family == "monomials") {
        const auto it = params.find("f0");
        return make_monomials(param_uint(params, "k", 2u), param_uint(params, "d"),
                              it == params.end() ? "1" : it->second);
    }
    if (family == "poly_threshold") {
        return make_poly_threshold(param_uint(params, "d"));
    }
    if (family == "trig") {
        return make_trig(param_uint(params, "harmonics", 1u));
    }
    throw InvalidInputError("unknown family '" + family +
                            "' (known: disks, monomials, poly_threshold, trig)");
}

bool check_linear_independence(const FunctionBasis& b, std::span<const Point> sample) {
    const std::size_t cols = b.size() + 1;
    if (sample.size() < cols) {
        throw InsufficientSampleError("independence check needs at least n+1 sample points");
    }
    if (b.exactness() == Exactness::ExactPolynomial) {
        QMatrix m(sample.size(), cols);
        for (std::size_t i = 0; i < sample.size(); ++i) {
            std::vector<Rational> row = b.eval_row_exact(sample[i]);
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = std::move(row[j]);
        }
        return rank(m) == cols;
    }
    // Approximate bases: floating rank with a relative pivot threshold.
    std::vector<std::vector<double>> rows;
    rows.reserve(sample.size());
    double scale = 0.0;
    for (const Point& p : sample) {
        rows.push_back(b.eval_row_double(p));
        for (double v : rows.back()) scale = std::max(scale, std::abs(v));
    }
    const double tol = 1e-9 * std::max(1.0, scale);
    std::size_t rk = 0;
    for (std::size_t col = 0; col < cols && rk < rows.size(); ++col) {
        std::size_t pivot = rk;
        for (std::size_t r = rk + 1; r < rows.size(); ++r) {
            if (std::abs(rows[r][col]) > std::abs(rows[pivot][col])) pivot = r;
        }
        if (std::abs(rows[pivot][col]) <= tol) continue;
        std::swap(rows[rk], rows[pivot]);
        for (std::size_t r = rk + 1; r < rows.size(); ++r) {
            const double f = rows[r][col] / rows[rk][col];
            for (std::size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[rk][c];
        }
        ++rk;
    }
    return rk == cols;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

FunctionBasis read_basis_file(std::istream& in, const std::string& label) {
    std::optional<std::size_t> dim;
    std::optional<std::string> f0_text;
    std::vector<std::string> member_texts;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const std::size_t colon = t.find(':');
        if (colon == std::string::npos) {
            throw ParseError("basis file line " + std::to_string(line_no) + ": expected 'key: value'");
        }
        const std::string key = trim(t.substr(0, colon));
        const std::string value = trim(t.substr(colon + 1));
        if (key == "dim") {
            try {
                dim = std::stoul(value);
            } catch (const std::logic_error&) {
                throw ParseError("basis file line " + std::to_string(line_no) + ": bad dimension");
            }
        } else if (key == "f0") {
            if (f0_text) throw ParseError("basis file has more than one f0 line");
            f0_text = value;
        } else if (key == "f") {
            member_texts.push_back(value);
        } else {
            throw ParseError("basis file line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    if (!dim) throw ParseError("basis file is missing the 'dim:' line");
    if (!f0_text) throw ParseError("basis file is missing the 'f0:' line");
    if (member_texts.empty()) throw ParseError("basis file needs at least one 'f:' line");

    Expr f0 = parse_expression(*f0_text, *dim);
    std::vector<Expr> members;
    members.reserve(member_texts.size());
    for (const std::string& text : member_texts) members.push_back(parse_expression(text, *dim));
    return FunctionBasis(*dim, std::move(f0), std::move(members), label);
}

void write_basis_file(std::ostream& out, const FunctionBasis& b) {
    out << "dim: " << b.ambient_dimension() << "\n";
    out << "f0: " << b.target().str() << "\n";
    for (const Expr& m : b.members()) out << "f: " << m.str() << "\n";
}

}  // namespace vcmax
