#include "vcmax/set_system.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

#include "vcmax/errors.hpp"

namespace vcmax {

std::uint64_t sauer_bound(std::uint64_t n_points, std::uint64_t dimension) {
    std::uint64_t total = 0;
    const std::uint64_t top = std::min(dimension, n_points);
    for (std::uint64_t i = 0; i <= top; ++i) total += binomial(n_points, i);
    return total;
}

bool lex_mask_less(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t diff = a ^ b;
    if (diff == 0) return false;
    const int first = std::countr_zero(diff);
    return ((a >> first) & 1u) == 0;  // '0' sorts before '1' at the first differing position
}

SetSystem::SetSystem(std::size_t ground_size, std::vector<std::uint64_t> members)
    : ground_(ground_size), members_(std::move(members)) {
    if (ground_ > 62) throw InvalidInputError("ground set limited to 62 points");
    for (std::uint64_t m : members_) {
        if (ground_ < 64 && (m >> ground_) != 0) {
            throw InvalidInputError("set-system member does not fit in the ground set");
        }
    }
    std::sort(members_.begin(), members_.end(), lex_mask_less);
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetSystem::contains(std::uint64_t mask) const {
    return std::binary_search(members_.begin(), members_.end(), mask, lex_mask_less);
}

SetSystem SetSystem::restrict(std::span<const std::size_t> subset) const {
    for (std::size_t i : subset) {
        if (i >= ground_) throw InvalidInputError("restriction index out of range");
    }
    std::vector<std::uint64_t> projected;
    projected.reserve(members_.size());
    for (std::uint64_t m : members_) {
        std::uint64_t p = 0;
        for (std::size_t j = 0; j < subset.size(); ++j) p |= ((m >> subset[j]) & 1u) << j;
        projected.push_back(p);
    }
    return SetSystem(subset.size(), std::move(projected));
}

bool SetSystem::shatters(std::span<const std::size_t> subset) const {
    for (std::size_t i : subset) {
        if (i >= ground_) throw InvalidInputError("subset index out of range");
    }
    if (members_.empty()) return false;
    const std::size_t s = subset.size();
    if (s == 0) return true;  // P(empty set) = {empty set}, realized by any member
    if (s > 25 || members_.size() < (std::uint64_t(1) << s)) return false;

    std::vector<char> seen(std::size_t(1) << s, 0);
    std::size_t distinct = 0;
    for (std::uint64_t m : members_) {
        std::uint64_t p = 0;
        for (std::size_t j = 0; j < s; ++j) p |= ((m >> subset[j]) & 1u) << j;
        if (!seen[p]) {
            seen[p] = 1;
            if (++distinct == (std::size_t(1) << s)) return true;
        }
    }
    return false;
}

int SetSystem::vc_dimension() const {
    if (members_.empty()) return -1;
    // A system with c members cannot shatter more than log2(c) points.
    std::size_t cap = 0;
    while ((std::uint64_t(1) << (cap + 1)) <= members_.size() && cap + 1 <= ground_) ++cap;

    int dim = 0;
    for (std::size_t m = 1; m <= cap; ++m) {
        bool found = false;
        for_each_combination(ground_, m, [&](std::span<const std::size_t> subset) {
            if (shatters(subset)) {
                found = true;
                return false;
            }
            return true;
        });
        if (!found) break;
        dim = static_cast<int>(m);
    }
    return dim;
}

MaximumVerdict SetSystem::is_maximum(std::size_t intended_dimension, bool exhaustive) const {
    MaximumVerdict v;
    v.dimension = static_cast<int>(intended_dimension);
    v.full_count = members_.size();
    v.bound = sauer_bound(ground_, intended_dimension);
    v.is_maximum = v.full_count == v.bound;
    if (!v.is_maximum) {
        v.failing_count = v.full_count;
        v.failing_bound = v.bound;
        return v;
    }
    if (!exhaustive || ground_ > 12) return v;

    v.exhaustive = true;
    std::vector<std::size_t> idx;
    for (std::uint64_t y = 0; y < (std::uint64_t(1) << ground_); ++y) {
        idx.clear();
        for (std::size_t i = 0; i < ground_; ++i) {
            if ((y >> i) & 1u) idx.push_back(i);
        }
        const std::uint64_t count = restrict(idx).size();
        const std::uint64_t bound = sauer_bound(idx.size(), intended_dimension);
        if (count != bound) {
            v.is_maximum = false;
            v.failing_subset = idx;
            v.failing_count = count;
            v.failing_bound = bound;
            return v;
        }
    }
    return v;
}

std::string SetSystem::member_string(std::uint64_t mask) const {
    std::string s(ground_, '0');
    for (std::size_t i = 0; i < ground_; ++i) {
        if ((mask >> i) & 1u) s[i] = '1';
    }
    return s;
}

void SetSystem::write(std::ostream& out) const {
    out << "N=" << ground_ << " count=" << members_.size() << "\n";
    for (std::uint64_t m : members_) out << member_string(m) << "\n";
}

SetSystem SetSystem::read(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw ParseError("set-system file is empty");
    std::size_t n = 0;
    std::size_t count = 0;
    if (std::sscanf(header.c_str(), "N=%zu count=%zu", &n, &count) != 2) {
        throw ParseError("set-system header must be 'N=<N> count=<c>'");
    }
    std::vector<std::uint64_t> members;
    members.reserve(count);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.size() != n) throw ParseError("set-system member line has wrong length");
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (line[i] == '1') {
                mask |= std::uint64_t(1) << i;
            } else if (line[i] != '0') {
                throw ParseError("set-system member line must be a bitstring");
            }
        }
        members.push_back(mask);
    }
    if (members.size() != count) throw ParseError("set-system member count does not match header");
    return SetSystem(n, std::move(members));
}

}  // namespace vcmax
