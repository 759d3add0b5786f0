#pragma once

// Shared test helpers.  The cofactor determinant is an independent oracle:
// it must stay free of the elimination code it cross-checks.

#include <random>
#include <vector>

#include "vcmax/arrangement.hpp"
#include "vcmax/basis.hpp"
#include "vcmax/matrix.hpp"

namespace testsupport {

inline vcmax::Rational det_cofactor(const vcmax::QMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return vcmax::Rational(1);
    if (n == 1) return m.at(0, 0);
    vcmax::Rational total(0);
    for (std::size_t col = 0; col < n; ++col) {
        if (m.at(0, col).is_zero()) continue;
        vcmax::QMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == col) continue;
                minor.at(i - 1, cc++) = m.at(i, j);
            }
        }
        vcmax::Rational term = m.at(0, col) * det_cofactor(minor);
        if (col % 2 == 1) term = -term;
        total += term;
    }
    return total;
}

inline vcmax::Rational rand_rational(std::mt19937_64& rng, int num_span = 9, int den_span = 9) {
    std::uniform_int_distribution<int> num(-num_span, num_span);
    std::uniform_int_distribution<int> den(1, den_span);
    return vcmax::Rational(vcmax::BigInt(num(rng)), vcmax::BigInt(den(rng)));
}

inline vcmax::QMatrix rand_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                  int num_span = 9, int den_span = 9) {
    vcmax::QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rand_rational(rng, num_span, den_span);
    }
    return m;
}

/// Random rational points on a coarse dyadic grid (coordinates p/2^bits in
/// [-1, 1]); coarse grids keep degenerate collisions reachable.
inline std::vector<vcmax::Point> rand_points(std::mt19937_64& rng, std::size_t count,
                                             std::size_t dim, unsigned bits = 6) {
    std::uniform_int_distribution<long long> d(-(1LL << bits), 1LL << bits);
    std::vector<vcmax::Point> pts(count);
    for (auto& p : pts) {
        p.resize(dim);
        for (auto& c : p) c = vcmax::Rational(vcmax::BigInt(d(rng)), vcmax::BigInt(1) << bits);
    }
    return pts;
}

/// True iff the witness satisfies the cell's sign pattern strictly.
template <typename T>
bool witness_strict(std::span<const vcmax::DualHyperplane<T>> hs, std::uint64_t mask,
                    const std::vector<T>& witness) {
    for (std::size_t i = 0; i < hs.size(); ++i) {
        T lhs{};
        for (std::size_t j = 0; j < hs[i].normal.size(); ++j) lhs += hs[i].normal[j] * witness[j];
        const bool positive = ((mask >> i) & 1u) != 0;
        bool zero_normal = true;
        for (const T& w : hs[i].normal) {
            if (!(w == T{})) zero_normal = false;
        }
        if (zero_normal) {
            // Constant side: the witness is irrelevant, the offset decides.
            if (positive != (hs[i].offset > T{})) return false;
            continue;
        }
        if (positive && !(lhs < hs[i].offset)) return false;
        if (!positive && !(hs[i].offset < lhs)) return false;
    }
    return true;
}

}  // namespace testsupport
