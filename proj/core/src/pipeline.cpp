#include "vcmax/pipeline.hpp"

#include <chrono>
#include <sstream>

#include "vcmax/errors.hpp"

namespace vcmax {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename T>
void run_enumeration(const DesignMatrix& dm, std::vector<DualHyperplane<T>> hyperplanes,
                     const VerifyOptions& options, VerificationReport& report) {
    CellEnumeration<T> cells = enumerate_cells<T>(hyperplanes);
    report.cell_count = cells.cells.size();
    report.enumeration_certified = cells.certified;
    report.degenerate_points = cells.degenerate_points;
    SetSystem system = cells.to_set_system();

    if (options.oracle && dm.sample_size <= options.oracle_cap) {
        CellEnumeration<T> oracle = brute_force_cells<T>(hyperplanes, options.oracle_cap);
        SetSystem oracle_system = oracle.to_set_system();
        report.oracle_agrees = oracle_system == system;
        report.oracle_count = oracle_system.size();
    }
    report.system = std::move(system);
}

}  // namespace

VerificationReport run_verify(const FunctionBasis& basis, std::span<const Point> points,
                              const VerifyOptions& options) {
    if (points.size() <= basis.size()) {
        throw InsufficientSampleError("the sample must contain more than n points (got N=" +
                                      std::to_string(points.size()) + " for a basis of size n=" +
                                      std::to_string(basis.size()) + ")");
    }

    VerificationReport report;
    report.basis_description = basis.describe();
    report.sample_provenance =
        options.sample_provenance.empty() ? "unspecified" : options.sample_provenance;
    report.basis_size = basis.size();
    report.ambient_dimension = basis.ambient_dimension();
    report.sample_size = points.size();

    auto t0 = std::chrono::steady_clock::now();
    const DesignMatrix dm = build_design_matrix(basis, points);
    report.mode = dm.mode;
    report.timings.design = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    report.condition1 = check_condition1(dm, options.exhaustive);
    report.condition2 = check_condition2(dm, options.exhaustive);
    report.timings.conditions = seconds_since(t0);

    // Enumeration runs even when a condition fails: the deficient cell count
    // is the informative outcome there.
    t0 = std::chrono::steady_clock::now();
    if (dm.mode == Mode::Exact) {
        run_enumeration<Rational>(dm, dualize_exact(dm), options, report);
    } else {
        run_enumeration<double>(dm, dualize_approx(dm), options, report);
    }
    report.timings.enumeration = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    report.bound = sauer_bound(report.sample_size, report.basis_size);
    report.vc_dimension = report.system->vc_dimension();
    report.maximum = report.system->is_maximum(report.basis_size, options.exhaustive);
    report.timings.combinatorics = seconds_since(t0);

    report.certified = dm.mode == Mode::Exact && report.condition1.holds && report.condition2.holds &&
                       report.enumeration_certified;
    return report;
}

VerificationReport run_demo(const std::string& name, const VerifyOptions& options) {
    VerifyOptions opts = options;
    SamplingSpec spec;
    spec.distribution = Distribution::UniformBox;
    spec.dimension = 2;

    if (name == "disks") {
        spec.count = 10;
        spec.seed = 42;
        const FunctionBasis basis = make_disks(2);
        opts.sample_provenance = describe(spec);
        return run_verify(basis, sample_points(spec), opts);
    }
    if (name == "poly_threshold") {
        spec.count = 9;
        spec.seed = 7;
        const FunctionBasis basis = make_poly_threshold(3);
        opts.sample_provenance = describe(spec);
        return run_verify(basis, sample_points(spec), opts);
    }
    if (name == "trig") {
        spec.count = 12;
        spec.seed = 11;
        const FunctionBasis basis = make_trig(1);
        opts.sample_provenance = describe(spec);
        return run_verify(basis, sample_points(spec), opts);
    }
    if (name == "halfspace_violation") {
        // f0 lies in the span of the members, so every G_B minor vanishes:
        // the halfspace family fails condition 2 on every subset.
        spec.count = 8;
        spec.seed = 5;
        std::vector<Expr> members{Expr::constant(Rational(1)), Expr::variable(0), Expr::variable(1)};
        Expr f0 = parse_expression("1/2 + 2*x - 3*y", 2);
        const FunctionBasis basis(2, std::move(f0), std::move(members), "halfspace_violation");
        opts.sample_provenance = describe(spec);
        return run_verify(basis, sample_points(spec), opts);
    }
    throw InvalidInputError("unknown demo '" + name +
                            "' (known: disks, poly_threshold, trig, halfspace_violation)");
}

TrialSummary run_trials(const FunctionBasis& basis, const SamplingSpec& spec, std::size_t trials) {
    if (basis.exactness() != Exactness::ExactPolynomial) {
        throw InvalidInputError("trials require an exact-polynomial basis");
    }
    if (trials == 0) throw InvalidInputError("at least one trial required");

    TrialSummary summary;
    summary.basis_description = basis.describe();
    summary.spec = spec;
    summary.trials = trials;

    for (std::size_t t = 0; t < trials; ++t) {
        SamplingSpec trial_spec = spec;
        trial_spec.seed = spec.seed + t;
        VerifyOptions opts;
        opts.sample_provenance = describe(trial_spec);
        const VerificationReport r = run_verify(basis, sample_points(trial_spec), opts);
        if (r.maximum.is_maximum) {
            ++summary.maximum_count;
        } else {
            summary.failing_seeds.push_back(trial_spec.seed);
        }
    }
    return summary;
}

std::string render_trials(const TrialSummary& s) {
    std::ostringstream os;
    os << "basis: " << s.basis_description << "\n";
    os << "sampling: " << describe(s.spec) << "\n";
    os << "trials: " << s.trials << "\n";
    os << "maximum: " << s.maximum_count << "\n";
    os << "fraction: " << s.maximum_count << "/" << s.trials << "\n";
    os << "precision-bits: " << s.spec.precision_bits << "\n";
    if (s.failing_seeds.empty()) {
        os << "failures: none\n";
    } else {
        os << "failures:";
        for (std::uint64_t seed : s.failing_seeds) os << " seed=" << seed;
        os << "\n";
    }
    return os.str();
}

}  // namespace vcmax
