#pragma once

#include <cstddef>
#include <vector>

#include "vcmax/errors.hpp"
#include "vcmax/rational.hpp"

namespace vcmax {

/// Dense row-major matrix.  Rational entries for the exact pipeline,
/// double entries for the approximate one.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<T>& entries() const { return data_; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using DMatrix = Matrix<double>;

/// Determinant sign classes used by the zero-set membership tests.
enum class Sign { Negative, Zero, Positive };

inline Sign sign_of(const Rational& r) {
    const int s = r.sign();
    return s == 0 ? Sign::Zero : (s < 0 ? Sign::Negative : Sign::Positive);
}

const char* to_string(Sign s);

/// Exact determinant by fraction-free (Bareiss) elimination: rows are scaled
/// to integers first, so every intermediate value stays integral.
Rational det_exact(const QMatrix& m);

/// Sign of det with a relative tolerance: Zero iff |det| <= epsilon * max(1, H)
/// where H is the product of Euclidean row norms (the Hadamard scale of m).
/// Determinant computed by partially pivoted elimination.
Sign det_sign_approx(const DMatrix& m, double epsilon);

/// Exact row rank via fraction-free elimination.
std::size_t rank(const QMatrix& m);

}  // namespace vcmax
