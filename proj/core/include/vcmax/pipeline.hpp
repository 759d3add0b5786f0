#pragma once

#include <span>
#include <string>

#include "vcmax/arrangement.hpp"
#include "vcmax/report.hpp"
#include "vcmax/sampling.hpp"

namespace vcmax {

struct VerifyOptions {
    bool exhaustive = false;     // gather all failing subsets; all-subsets maximum check
    bool oracle = false;         // cross-check enumeration against the brute-force oracle
    std::size_t oracle_cap = 15;
    std::string sample_provenance;  // free-form note for the report (seed or file)
};

/// Full pipeline: design matrix, both sufficient conditions, dual-arrangement
/// cell enumeration (always run, even after a condition failure), VC
/// dimension, and the maximum verdict.  Requires N > n.
VerificationReport run_verify(const FunctionBasis& basis, std::span<const Point> points,
                              const VerifyOptions& options = {});

/// Fixed seeded scenarios: "disks", "poly_threshold", "trig",
/// "halfspace_violation".
VerificationReport run_demo(const std::string& name, const VerifyOptions& options = {});

struct TrialSummary {
    std::string basis_description;
    SamplingSpec spec;  // seeds used: spec.seed + t for trial t
    std::size_t trials = 0;
    std::size_t maximum_count = 0;
    std::vector<std::uint64_t> failing_seeds;
};

/// Repeats run_verify over `trials` seeds (spec.seed + t).  Requires an
/// exact-polynomial basis; reports the fraction of trials whose restriction
/// was maximum, and the seed of every failure.
TrialSummary run_trials(const FunctionBasis& basis, const SamplingSpec& spec, std::size_t trials);

std::string render_trials(const TrialSummary& s);

}  // namespace vcmax
