#include <benchmark/benchmark.h>

#include <random>

#include "vcmax/arrangement.hpp"
#include "vcmax/pipeline.hpp"

using namespace vcmax;

namespace {

QMatrix random_rational_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> num(-99, 99);
    std::uniform_int_distribution<long long> den(1, 99);
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m.at(i, j) = Rational(BigInt(num(rng)), BigInt(den(rng)));
        }
    }
    return m;
}

std::vector<Point> disk_sample(std::size_t count, std::uint64_t seed) {
    SamplingSpec spec;
    spec.count = count;
    spec.dimension = 2;
    spec.seed = seed;
    return sample_points(spec);
}

void BM_DetExact(benchmark::State& state) {
    const QMatrix m = random_rational_matrix(std::size_t(state.range(0)), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(det_exact(m));
    }
}
BENCHMARK(BM_DetExact)->Arg(3)->Arg(5)->Arg(7);

void BM_DetSignApprox(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    DMatrix m(6, 6);
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) m.at(i, j) = d(rng);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(det_sign_approx(m, 1e-9));
    }
}
BENCHMARK(BM_DetSignApprox);

void BM_ConditionChecks(benchmark::State& state) {
    const auto pts = disk_sample(std::size_t(state.range(0)), 42);
    const DesignMatrix dm = build_design_matrix(make_disks(2), pts);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_condition1(dm).holds);
        benchmark::DoNotOptimize(check_condition2(dm).holds);
    }
}
BENCHMARK(BM_ConditionChecks)->Arg(10)->Arg(14);

void BM_StrictFeasible(benchmark::State& state) {
    const auto pts = disk_sample(10, 42);
    const auto hs = dualize_exact(build_design_matrix(make_disks(2), pts));
    std::vector<SignedConstraint<Rational>> cs;
    for (const auto& h : hs) cs.push_back({h.normal, h.offset, true});
    for (auto _ : state) {
        benchmark::DoNotOptimize(strict_feasible<Rational>(cs, 3).outcome);
    }
}
BENCHMARK(BM_StrictFeasible);

void BM_EnumerateDiskCells(benchmark::State& state) {
    const auto pts = disk_sample(std::size_t(state.range(0)), 42);
    const auto hs = dualize_exact(build_design_matrix(make_disks(2), pts));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_cells<Rational>(hs).cells.size());
    }
}
BENCHMARK(BM_EnumerateDiskCells)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_BruteForceCells(benchmark::State& state) {
    const auto pts = disk_sample(8, 42);
    const auto hs = dualize_exact(build_design_matrix(make_disks(2), pts));
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_cells<Rational>(hs).cells.size());
    }
}
BENCHMARK(BM_BruteForceCells)->Unit(benchmark::kMillisecond);

void BM_VcDimension(benchmark::State& state) {
    const auto pts = disk_sample(10, 42);
    const auto dm = build_design_matrix(make_disks(2), pts);
    const SetSystem s = enumerate_cells<Rational>(dualize_exact(dm)).to_set_system();
    for (auto _ : state) {
        benchmark::DoNotOptimize(s.vc_dimension());
    }
}
BENCHMARK(BM_VcDimension);

void BM_IsMaximumExhaustive(benchmark::State& state) {
    const auto pts = disk_sample(10, 42);
    const auto dm = build_design_matrix(make_disks(2), pts);
    const SetSystem s = enumerate_cells<Rational>(dualize_exact(dm)).to_set_system();
    for (auto _ : state) {
        benchmark::DoNotOptimize(s.is_maximum(3, true).is_maximum);
    }
}
BENCHMARK(BM_IsMaximumExhaustive)->Unit(benchmark::kMillisecond);

void BM_SamplePoints(benchmark::State& state) {
    SamplingSpec spec;
    spec.count = 100;
    spec.dimension = 3;
    spec.seed = 5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_points(spec).size());
    }
}
BENCHMARK(BM_SamplePoints);

void BM_ParseExpression(benchmark::State& state) {
    const std::string text = "-(x^2 + y^2) + 1/3*x*y - sin(2*x)*exp(y)";
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_expression(text, 2).polynomial_pure());
    }
}
BENCHMARK(BM_ParseExpression);

}  // namespace

BENCHMARK_MAIN();
