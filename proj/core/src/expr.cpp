#include "vcmax/expr.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "vcmax/errors.hpp"

namespace vcmax {

namespace {

ExprNodePtr make_node(ExprNode node) { return std::make_shared<const ExprNode>(std::move(node)); }

bool node_pure(const Expr& e) { return !e.valid() || e.node()->pure; }

}  // namespace

Expr Expr::constant(Rational v) {
    ExprNode n;
    n.kind = ExprKind::Constant;
    n.value = std::move(v);
    return Expr(make_node(std::move(n)));
}

Expr Expr::variable(std::size_t index) {
    ExprNode n;
    n.kind = ExprKind::Variable;
    n.var = index;
    return Expr(make_node(std::move(n)));
}

Expr Expr::add(Expr a, Expr b) {
    ExprNode n;
    n.kind = ExprKind::Add;
    n.pure = node_pure(a) && node_pure(b);
    n.lhs = a.root_;
    n.rhs = b.root_;
    return Expr(make_node(std::move(n)));
}

Expr Expr::sub(Expr a, Expr b) {
    ExprNode n;
    n.kind = ExprKind::Sub;
    n.pure = node_pure(a) && node_pure(b);
    n.lhs = a.root_;
    n.rhs = b.root_;
    return Expr(make_node(std::move(n)));
}

Expr Expr::mul(Expr a, Expr b) {
    ExprNode n;
    n.kind = ExprKind::Mul;
    n.pure = node_pure(a) && node_pure(b);
    n.lhs = a.root_;
    n.rhs = b.root_;
    return Expr(make_node(std::move(n)));
}

Expr Expr::pow(Expr base, unsigned exponent) {
    ExprNode n;
    n.kind = ExprKind::Pow;
    n.exponent = exponent;
    n.pure = node_pure(base);
    n.lhs = base.root_;
    return Expr(make_node(std::move(n)));
}

Expr Expr::negate(Expr a) {
    if (a.valid() && a.root_->kind == ExprKind::Constant) return constant(-a.root_->value);
    ExprNode n;
    n.kind = ExprKind::Negate;
    n.pure = node_pure(a);
    n.lhs = a.root_;
    return Expr(make_node(std::move(n)));
}

Expr Expr::sin(Expr a) {
    ExprNode n;
    n.kind = ExprKind::Sin;
    n.pure = false;
    n.lhs = a.root_;
    return Expr(make_node(std::move(n)));
}

Expr Expr::cos(Expr a) {
    ExprNode n;
    n.kind = ExprKind::Cos;
    n.pure = false;
    n.lhs = a.root_;
    return Expr(make_node(std::move(n)));
}

Expr Expr::exp(Expr a) {
    ExprNode n;
    n.kind = ExprKind::Exp;
    n.pure = false;
    n.lhs = a.root_;
    return Expr(make_node(std::move(n)));
}

bool Expr::polynomial_pure() const { return node_pure(*this); }

namespace {

std::size_t max_var_rec(const ExprNodePtr& n, bool& any) {
    if (!n) return 0;
    if (n->kind == ExprKind::Variable) {
        any = true;
        return n->var;
    }
    std::size_t m = 0;
    if (n->lhs) m = std::max(m, max_var_rec(n->lhs, any));
    if (n->rhs) m = std::max(m, max_var_rec(n->rhs, any));
    return m;
}

}  // namespace

std::size_t Expr::max_variable() const {
    bool any = false;
    return max_var_rec(root_, any);
}

bool Expr::has_variables() const {
    bool any = false;
    max_var_rec(root_, any);
    return any;
}

namespace {

Rational eval_exact_rec(const ExprNodePtr& n, std::span<const Rational> p) {
    switch (n->kind) {
        case ExprKind::Constant: return n->value;
        case ExprKind::Variable:
            if (n->var >= p.size()) throw InvalidInputError("point has too few coordinates for expression");
            return p[n->var];
        case ExprKind::Add: return eval_exact_rec(n->lhs, p) + eval_exact_rec(n->rhs, p);
        case ExprKind::Sub: return eval_exact_rec(n->lhs, p) - eval_exact_rec(n->rhs, p);
        case ExprKind::Mul: return eval_exact_rec(n->lhs, p) * eval_exact_rec(n->rhs, p);
        case ExprKind::Pow: return eval_exact_rec(n->lhs, p).pow(n->exponent);
        case ExprKind::Negate: return -eval_exact_rec(n->lhs, p);
        default: throw InvalidInputError("exact evaluation of a non-polynomial expression");
    }
}

double pow_double(double base, unsigned e) {
    double result = 1.0, b = base;
    while (e > 0) {
        if (e & 1u) result *= b;
        b *= b;
        e >>= 1u;
    }
    return result;
}

double eval_double_rec(const ExprNodePtr& n, std::span<const double> p) {
    switch (n->kind) {
        case ExprKind::Constant: return n->value.to_double();
        case ExprKind::Variable:
            if (n->var >= p.size()) throw InvalidInputError("point has too few coordinates for expression");
            return p[n->var];
        case ExprKind::Add: return eval_double_rec(n->lhs, p) + eval_double_rec(n->rhs, p);
        case ExprKind::Sub: return eval_double_rec(n->lhs, p) - eval_double_rec(n->rhs, p);
        case ExprKind::Mul: return eval_double_rec(n->lhs, p) * eval_double_rec(n->rhs, p);
        case ExprKind::Pow: return pow_double(eval_double_rec(n->lhs, p), n->exponent);
        case ExprKind::Negate: return -eval_double_rec(n->lhs, p);
        case ExprKind::Sin: return std::sin(eval_double_rec(n->lhs, p));
        case ExprKind::Cos: return std::cos(eval_double_rec(n->lhs, p));
        case ExprKind::Exp: return std::exp(eval_double_rec(n->lhs, p));
    }
    throw InvalidInputError("malformed expression node");
}

}  // namespace

Rational Expr::eval_exact(std::span<const Rational> point) const {
    if (!root_) throw InvalidInputError("empty expression");
    if (!root_->pure) throw InvalidInputError("exact evaluation of a non-polynomial expression");
    return eval_exact_rec(root_, point);
}

double Expr::eval_double(std::span<const double> point) const {
    if (!root_) throw InvalidInputError("empty expression");
    const double v = eval_double_rec(root_, point);
    if (!std::isfinite(v)) throw InvalidInputError("expression evaluation overflowed");
    return v;
}

namespace {

// Printing precedence levels; a child is parenthesized when its level is
// below what its context requires.
constexpr int kPrecAdd = 1;
constexpr int kPrecMul = 2;
constexpr int kPrecUnary = 3;
constexpr int kPrecPow = 4;
constexpr int kPrecAtom = 5;

int node_prec(const ExprNodePtr& n) {
    switch (n->kind) {
        case ExprKind::Add:
        case ExprKind::Sub: return kPrecAdd;
        case ExprKind::Mul: return kPrecMul;
        case ExprKind::Negate: return kPrecUnary;
        case ExprKind::Constant:
            // "p/q" renders as a division, "-p" as a negation; both need the
            // parenthesization of their surface form.
            if (!n->value.is_integer()) return kPrecMul;
            return n->value.sign() < 0 ? kPrecUnary : kPrecAtom;
        case ExprKind::Pow: return kPrecPow;
        default: return kPrecAtom;
    }
}

std::string var_name(std::size_t index) {
    switch (index) {
        case 0: return "x";
        case 1: return "y";
        case 2: return "z";
        default: return "x" + std::to_string(index + 1);
    }
}

void print_rec(const ExprNodePtr& n, int min_prec, std::string& out) {
    const int prec = node_prec(n);
    const bool parens = prec < min_prec;
    if (parens) out.push_back('(');
    switch (n->kind) {
        case ExprKind::Constant: out += n->value.str(); break;
        case ExprKind::Variable: out += var_name(n->var); break;
        case ExprKind::Add:
            print_rec(n->lhs, kPrecAdd, out);
            out += " + ";
            print_rec(n->rhs, kPrecAdd + 1, out);
            break;
        case ExprKind::Sub:
            print_rec(n->lhs, kPrecAdd, out);
            out += " - ";
            print_rec(n->rhs, kPrecAdd + 1, out);
            break;
        case ExprKind::Mul:
            print_rec(n->lhs, kPrecMul, out);
            out += "*";
            print_rec(n->rhs, kPrecMul + 1, out);
            break;
        case ExprKind::Pow:
            print_rec(n->lhs, kPrecAtom, out);
            out += "^";
            out += std::to_string(n->exponent);
            break;
        case ExprKind::Negate:
            out.push_back('-');
            print_rec(n->lhs, kPrecUnary, out);
            break;
        case ExprKind::Sin:
            out += "sin(";
            print_rec(n->lhs, 0, out);
            out.push_back(')');
            break;
        case ExprKind::Cos:
            out += "cos(";
            print_rec(n->lhs, 0, out);
            out.push_back(')');
            break;
        case ExprKind::Exp:
            out += "exp(";
            print_rec(n->lhs, 0, out);
            out.push_back(')');
            break;
    }
    if (parens) out.push_back(')');
}

}  // namespace

std::string Expr::str() const {
    if (!root_) return "<empty>";
    std::string out;
    print_rec(root_, 0, out);
    return out;
}

namespace {

bool equal_rec(const ExprNodePtr& a, const ExprNodePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprKind::Constant: return a->value == b->value;
        case ExprKind::Variable: return a->var == b->var;
        case ExprKind::Pow: return a->exponent == b->exponent && equal_rec(a->lhs, b->lhs);
        case ExprKind::Add:
        case ExprKind::Sub:
        case ExprKind::Mul: return equal_rec(a->lhs, b->lhs) && equal_rec(a->rhs, b->rhs);
        default: return equal_rec(a->lhs, b->lhs);
    }
}

}  // namespace

bool structurally_equal(const Expr& a, const Expr& b) { return equal_rec(a.node(), b.node()); }

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

class Parser {
public:
    Parser(std::string_view text, std::size_t k) : text_(text), k_(k) {}

    Expr parse() {
        skip_ws();
        Expr e = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    bool consume(char c) {
        skip_ws();
        if (!at_end() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Expr parse_sum() {
        Expr lhs = parse_product();
        for (;;) {
            skip_ws();
            if (consume('+')) {
                lhs = Expr::add(std::move(lhs), parse_product());
            } else if (consume('-')) {
                lhs = Expr::sub(std::move(lhs), parse_product());
            } else {
                return lhs;
            }
        }
    }

    Expr parse_product() {
        Expr lhs = parse_unary();
        for (;;) {
            skip_ws();
            if (consume('*')) {
                lhs = Expr::mul(std::move(lhs), parse_unary());
            } else if (!at_end() && peek() == '/') {
                const std::size_t at = pos_;
                ++pos_;
                Expr rhs = parse_unary();
                if (!lhs.valid() || lhs.node()->kind != ExprKind::Constant ||
                    rhs.node()->kind != ExprKind::Constant) {
                    pos_ = at;
                    fail("division is only supported between numeric constants");
                }
                if (rhs.node()->value.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                lhs = Expr::constant(lhs.node()->value / rhs.node()->value);
            } else {
                return lhs;
            }
        }
    }

    Expr parse_unary() {
        skip_ws();
        if (consume('-')) return Expr::negate(parse_unary());
        if (consume('+')) return parse_unary();
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_atom();
        for (;;) {
            skip_ws();
            if (!consume('^')) return base;
            base = Expr::pow(std::move(base), parse_exponent());
        }
    }

    unsigned parse_exponent() {
        skip_ws();
        const bool parens = consume('(');
        skip_ws();
        if (at_end()) fail("expected exponent");
        if (peek() == '-') fail("exponent must be a non-negative integer");
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(text_[pos_++]);
        if (digits.empty()) fail("exponent must be a non-negative integer");
        if (!at_end() && peek() == '.') fail("exponent must be a non-negative integer");
        if (parens && !consume(')')) fail("expected ')' after exponent");
        unsigned long v = 0;
        for (char c : digits) {
            v = v * 10 + static_cast<unsigned long>(c - '0');
            if (v > 1u << 20) fail("exponent too large");
        }
        return static_cast<unsigned>(v);
    }

    Expr parse_atom() {
        skip_ws();
        if (at_end()) fail("unexpected end of expression");
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Expr inner = parse_sum();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
        fail(std::string("unexpected character '") + c + "'");
    }

    Expr parse_number() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (!at_end() && peek() == '.') {
            ++pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        const std::string_view token = text_.substr(start, pos_ - start);
        try {
            return Expr::constant(Rational::parse(token));
        } catch (const ParseError&) {
            pos_ = start;
            fail("malformed number");
        }
    }

    Expr parse_identifier() {
        const std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        const std::string name(text_.substr(start, pos_ - start));

        skip_ws();
        if (!at_end() && peek() == '(') {
            ++pos_;
            Expr arg = parse_sum();
            if (!consume(')')) fail("expected ')' after function argument");
            if (name == "sin") return Expr::sin(std::move(arg));
            if (name == "cos") return Expr::cos(std::move(arg));
            if (name == "exp") return Expr::exp(std::move(arg));
            pos_ = start;
            fail("unknown function '" + name + "'");
        }

        std::size_t index = 0;
        bool known = true;
        if (name == "x") {
            index = 0;
        } else if (name == "y") {
            index = 1;
        } else if (name == "z") {
            index = 2;
        } else if (name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] <= '9') {
            index = static_cast<std::size_t>(name[1] - '1');
        } else {
            known = false;
        }
        if (!known) {
            pos_ = start;
            fail("unknown identifier '" + name + "'");
        }
        if (index >= k_) {
            pos_ = start;
            fail("variable '" + name + "' is out of range for dimension " + std::to_string(k_));
        }
        return Expr::variable(index);
    }

    std::string_view text_;
    std::size_t k_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expression(std::string_view text, std::size_t k) { return Parser(text, k).parse(); }

}  // namespace vcmax
