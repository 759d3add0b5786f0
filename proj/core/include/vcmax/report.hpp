#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vcmax/conditions.hpp"
#include "vcmax/set_system.hpp"

namespace vcmax {

/// Wall-clock seconds per pipeline phase.  Diagnostic only: excluded from
/// the canonical report text so identical runs stay byte-identical.
struct PhaseTimings {
    double design = 0.0;
    double conditions = 0.0;
    double enumeration = 0.0;
    double combinatorics = 0.0;
};

/// Everything one verification run produced.
struct VerificationReport {
    std::string basis_description;
    std::string sample_provenance;
    Mode mode = Mode::Exact;
    std::size_t basis_size = 0;         // n
    std::size_t ambient_dimension = 0;  // k
    std::size_t sample_size = 0;        // N

    ConditionResult condition1;
    ConditionResult condition2;

    std::uint64_t cell_count = 0;
    bool enumeration_certified = false;
    std::vector<std::size_t> degenerate_points;
    std::optional<SetSystem> system;

    std::uint64_t bound = 0;  // sauer_bound(N, n)
    int vc_dimension = 0;
    MaximumVerdict maximum;

    bool certified = false;  // exact mode, both conditions hold, enumeration certified

    std::optional<bool> oracle_agrees;           // set when the brute-force cross-check ran
    std::optional<std::uint64_t> oracle_count;

    PhaseTimings timings;
};

/// Canonical line-oriented "key: value" block.  Byte-identical for
/// identical inputs; subset witnesses are printed 1-based.
std::string render_report(const VerificationReport& r);

/// Machine-readable form (JSON), same content as the canonical block.
void write_report_json(std::ostream& out, const VerificationReport& r);

/// Process exit code: 0 = verified maximum, 1 = verified non-maximum,
/// 2 = approximate or indeterminate verdict.
int report_exit_code(const VerificationReport& r);

}  // namespace vcmax
