#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vcmax/errors.hpp"

namespace vcmax {

/// C(n, k) in exact 64-bit arithmetic; valid for n <= 62.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (n > 62) throw InvalidInputError("binomial limited to n <= 62");
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        result = result * (n - i) / (i + 1);
    }
    return result;
}

/// Calls fn(indices) for every m-subset of {0..n-1} in lexicographic order.
/// fn returns false to stop early; the function returns true if the sweep
/// ran to completion.
template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t m, Fn&& fn) {
    if (m > n) return true;
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    for (;;) {
        if (!fn(std::span<const std::size_t>(idx))) return false;
        // Advance to the next combination.
        std::size_t i = m;
        while (i > 0) {
            --i;
            if (idx[i] + (m - i) < n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return true;
        }
        if (m == 0) return true;
    }
}

}  // namespace vcmax
