#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "support.hpp"
#include "vcmax/sampling.hpp"
#include "vcmax/set_system.hpp"

using vcmax::SetSystem;
using vcmax::sauer_bound;

namespace {

SetSystem power_set(std::size_t n) {
    std::vector<std::uint64_t> members;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m) members.push_back(m);
    return SetSystem(n, std::move(members));
}

SetSystem disk_system(std::uint64_t seed, std::size_t count) {
    vcmax::SamplingSpec spec;
    spec.count = count;
    spec.dimension = 2;
    spec.seed = seed;
    const auto pts = sample_points(spec);
    const auto dm = build_design_matrix(vcmax::make_disks(2), pts);
    return enumerate_cells<vcmax::Rational>(dualize_exact(dm)).to_set_system();
}

std::vector<std::size_t> idx(std::initializer_list<std::size_t> v) { return v; }

}  // namespace

TEST_CASE("sauer bound values") {
    CHECK(sauer_bound(5, 2) == 16);
    CHECK(sauer_bound(10, 3) == 176);
    CHECK(sauer_bound(3, 5) == 8);  // N < d collapses to 2^N
    CHECK(sauer_bound(0, 0) == 1);
    CHECK(sauer_bound(4, 0) == 1);
    CHECK(sauer_bound(12, 3) == 299);
    CHECK(sauer_bound(9, 4) == 256);
    CHECK(sauer_bound(8, 5) == 219);
    CHECK(sauer_bound(8, 3) == 93);
    for (std::uint64_t n = 0; n <= 10; ++n) {
        CHECK(sauer_bound(n, n) == (std::uint64_t(1) << n));
        CHECK(sauer_bound(n, n + 3) == (std::uint64_t(1) << n));
    }
}

TEST_CASE("construction canonicalizes and validates") {
    SetSystem s(3, {0b110, 0b001, 0b110, 0b000});
    CHECK(s.size() == 3);  // duplicate removed
    CHECK(s.ground_size() == 3);
    CHECK(s.contains(0b110));
    CHECK_FALSE(s.contains(0b111));
    CHECK_THROWS_AS(SetSystem(2, {0b100}), vcmax::InvalidInputError);  // member too wide
}

TEST_CASE("restriction projects, deduplicates and relabels") {
    // {}, {1}, {1,2} on ground {1,2}; restricting to point 2 leaves {}, {2}
    SetSystem s(2, {0b00, 0b01, 0b11});
    const SetSystem r = s.restrict(idx({1}));
    CHECK(r.ground_size() == 1);
    CHECK(r.size() == 2);
    CHECK(r.contains(0b0));
    CHECK(r.contains(0b1));

    std::vector<std::size_t> all{0, 1};
    CHECK(s.restrict(all) == s);
    CHECK_THROWS_AS(s.restrict(idx({5})), vcmax::InvalidInputError);
}

TEST_CASE("shattering basics") {
    SetSystem s(2, {0b00, 0b01, 0b11});
    CHECK(s.shatters(idx({})));  // nonempty system shatters the empty set
    CHECK(s.shatters(idx({0})));
    CHECK_FALSE(s.shatters(idx({0, 1})));
    CHECK(power_set(3).shatters(idx({0, 1, 2})));
    CHECK_FALSE(SetSystem(2, {}).shatters(idx({})));
}

TEST_CASE("vc dimension basics") {
    CHECK(SetSystem(4, {}).vc_dimension() == -1);  // empty system convention
    CHECK(SetSystem(4, {0b0000}).vc_dimension() == 0);
    CHECK(power_set(3).vc_dimension() == 3);

    // singletons only: every point is hit alone, no pair pattern 11
    SetSystem singles(4, {0b0001, 0b0010, 0b0100, 0b1000});
    CHECK(singles.vc_dimension() == 1);
}

TEST_CASE("disk systems on generic points have dimension 3 and are maximum") {
    const SetSystem s = disk_system(42, 10);
    REQUIRE(s.size() == 176);
    CHECK(s.vc_dimension() == 3);

    // no 4-point subset is shattered
    bool any4 = false;
    vcmax::for_each_combination(10, 4, [&](std::span<const std::size_t> subset) {
        if (s.shatters(subset)) any4 = true;
        return !any4;
    });
    CHECK_FALSE(any4);

    const auto verdict = s.is_maximum(3, /*exhaustive=*/true);
    CHECK(verdict.is_maximum);
    CHECK(verdict.exhaustive);
    CHECK(verdict.full_count == 176);
    CHECK(verdict.bound == 176);

    // every 5-point restriction of a maximum system meets its own bound
    vcmax::for_each_combination(10, 5, [&](std::span<const std::size_t> subset) {
        CHECK(s.restrict(subset).size() == sauer_bound(5, 3));  // 26
        return true;
    });
}

TEST_CASE("maximum verdict fails on deficient systems") {
    const auto verdict = power_set(4).is_maximum(4, true);
    CHECK(verdict.is_maximum);

    SetSystem missing(3, {0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110});  // 7 of 8
    const auto v = missing.is_maximum(3, true);
    CHECK_FALSE(v.is_maximum);
    CHECK(v.failing_count == 7);
    CHECK(v.failing_bound == 8);

    // concyclic degenerate sample: count drops below the bound
    const SetSystem degenerate = [] {
        std::vector<vcmax::Point> pts{
            {vcmax::Rational(1), vcmax::Rational(0)},
            {vcmax::Rational(0), vcmax::Rational(1)},
            {vcmax::Rational(-1), vcmax::Rational(0)},
            {vcmax::Rational(0), vcmax::Rational(-1)},
        };
        const auto dm = build_design_matrix(vcmax::make_disks(2), pts);
        return enumerate_cells<vcmax::Rational>(dualize_exact(dm)).to_set_system();
    }();
    const auto dv = degenerate.is_maximum(3, true);
    CHECK_FALSE(dv.is_maximum);
    CHECK(dv.failing_count < 15);
}

TEST_CASE("is_maximum implies count equals bound") {
    std::mt19937_64 rng(6);
    for (int rep = 0; rep < 10; ++rep) {
        const auto pts = testsupport::rand_points(rng, 6, 2, 3);
        const auto dm = build_design_matrix(vcmax::make_disks(2), pts);
        const SetSystem s = enumerate_cells<vcmax::Rational>(dualize_exact(dm)).to_set_system();
        const auto v = s.is_maximum(3, rep % 2 == 0);
        if (v.is_maximum) CHECK(v.full_count == v.bound);
    }
}

TEST_CASE("restrictions never beat the Sauer bound of their dimension") {
    std::mt19937_64 rng(99);
    std::vector<SetSystem> produced;
    produced.push_back(disk_system(7, 8));
    produced.push_back(power_set(4));
    for (int rep = 0; rep < 5; ++rep) {
        const auto pts = testsupport::rand_points(rng, 7, 2, 3);
        const auto dm = build_design_matrix(vcmax::make_disks(2), pts);
        produced.push_back(enumerate_cells<vcmax::Rational>(dualize_exact(dm)).to_set_system());
    }

    for (const SetSystem& s : produced) {
        const int d = s.vc_dimension();
        REQUIRE(d >= 0);
        const std::size_t n = s.ground_size();
        for (std::uint64_t y = 0; y < (std::uint64_t(1) << n); ++y) {
            std::vector<std::size_t> subset;
            for (std::size_t i = 0; i < n; ++i) {
                if ((y >> i) & 1u) subset.push_back(i);
            }
            const SetSystem r = s.restrict(subset);
            CHECK(r.size() <= sauer_bound(subset.size(), std::uint64_t(d)));
            CHECK(r.vc_dimension() <= d);
        }
    }
}

TEST_CASE("shattered sets are downward closed") {
    const SetSystem s = disk_system(11, 7);
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<std::size_t> y;
        for (std::size_t i = 0; i < 7; ++i) {
            if (rng() & 1u) y.push_back(i);
        }
        if (!s.shatters(y) || y.empty()) continue;
        std::vector<std::size_t> z;
        for (std::size_t i : y) {
            if (rng() & 1u) z.push_back(i);
        }
        CHECK(s.shatters(z));
    }
}

TEST_CASE("file format round trip and golden bytes") {
    SetSystem s(3, {0b000, 0b011, 0b100});
    std::ostringstream os;
    s.write(os);
    // bit i maps to string position i: mask 0b011 reads "110"
    CHECK(os.str() == "N=3 count=3\n000\n001\n110\n");

    std::istringstream is(os.str());
    CHECK(SetSystem::read(is) == s);
}

TEST_CASE("file format rejects malformed input") {
    auto parse = [](const std::string& text) {
        std::istringstream is(text);
        return SetSystem::read(is);
    };
    CHECK_THROWS_AS(parse(""), vcmax::ParseError);
    CHECK_THROWS_AS(parse("bogus\n"), vcmax::ParseError);
    CHECK_THROWS_AS(parse("N=3 count=1\n01\n"), vcmax::ParseError);      // wrong length
    CHECK_THROWS_AS(parse("N=3 count=2\n011\n"), vcmax::ParseError);     // count mismatch
    CHECK_THROWS_AS(parse("N=3 count=1\n0x1\n"), vcmax::ParseError);     // not a bitstring
}

TEST_CASE("members are stored in lexicographic bitstring order") {
    SetSystem s(4, {0b1111, 0b0000, 0b0010, 0b1000});
    std::vector<std::string> lines;
    for (std::uint64_t m : s.members()) lines.push_back(s.member_string(m));
    CHECK(std::is_sorted(lines.begin(), lines.end()));
}
