#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vcmax/combinatorics.hpp"

namespace vcmax {

/// Sum_{i=0}^{min(d,N)} C(N, i); equals 2^N when N < d.  The largest number
/// of distinct restrictions to N points a system of VC dimension d can have.
std::uint64_t sauer_bound(std::uint64_t n_points, std::uint64_t dimension);

struct MaximumVerdict {
    bool is_maximum = false;
    int dimension = 0;
    std::uint64_t full_count = 0;
    std::uint64_t bound = 0;
    bool exhaustive = false;  // true when the all-subsets sweep actually ran
    std::optional<std::vector<std::size_t>> failing_subset;
    std::uint64_t failing_count = 0;
    std::uint64_t failing_bound = 0;
};

/// Family of subsets of an N-point ground set.  Members are bit vectors
/// (bit i = point i), stored duplicate-free in lexicographic bitstring
/// order.  Immutable after construction.
class SetSystem {
public:
    SetSystem() = default;
    SetSystem(std::size_t ground_size, std::vector<std::uint64_t> members);

    std::size_t ground_size() const { return ground_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<std::uint64_t>& members() const { return members_; }
    bool contains(std::uint64_t mask) const;

    friend bool operator==(const SetSystem& a, const SetSystem& b) = default;

    /// Projects every member onto the given coordinates (sorted, 0-based),
    /// deduplicates, and re-sorts; the result's ground set has |subset| points.
    SetSystem restrict(std::span<const std::size_t> subset) const;

    /// True iff the restriction to the subset realizes all 2^|subset| patterns.
    bool shatters(std::span<const std::size_t> subset) const;

    /// -1 for the empty system; otherwise the largest m such that some
    /// m-subset of the ground set is shattered (ascending exhaustive search).
    int vc_dimension() const;

    /// Full-count test |members| == sauer_bound(N, d); with exhaustive set
    /// and N <= 12, additionally verifies the bound with equality on every
    /// subset of the ground set.
    MaximumVerdict is_maximum(std::size_t intended_dimension, bool exhaustive = false) const;

    /// File form: header "N=<N> count=<c>", then one N-character bitstring
    /// per member ('1' at position i = point i in the subset), sorted.
    void write(std::ostream& out) const;
    static SetSystem read(std::istream& in);

    std::string member_string(std::uint64_t mask) const;

private:
    std::size_t ground_ = 0;
    std::vector<std::uint64_t> members_;
};

/// Lexicographic bitstring order on masks (position 0 compared first).
bool lex_mask_less(std::uint64_t a, std::uint64_t b);

}  // namespace vcmax
