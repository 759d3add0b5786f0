#include "vcmax/report.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

namespace vcmax {

namespace {

std::string subset_string(const std::vector<std::size_t>& subset) {
    std::string out = "(";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(subset[i] + 1);  // 1-based in all user-facing output
    }
    out += ")";
    return out;
}

void render_condition(std::ostringstream& os, const char* key, const ConditionResult& c) {
    os << key << ": " << (c.holds ? "holds" : "fails");
    if (c.failing_subset) os << " witness=" << subset_string(*c.failing_subset);
    os << " checked=" << c.checked_count << " quality=" << to_string(c.quality) << "\n";
    if (!c.all_failing.empty()) {
        os << key << "-failures:";
        for (const auto& f : c.all_failing) os << " " << subset_string(f);
        os << "\n";
    }
}

}  // namespace

std::string render_report(const VerificationReport& r) {
    std::ostringstream os;
    os << "mode: " << to_string(r.mode) << "\n";
    os << "basis: " << r.basis_description << "\n";
    os << "sample: " << r.sample_provenance << "\n";
    os << "N: " << r.sample_size << "\n";
    os << "n: " << r.basis_size << "\n";
    os << "k: " << r.ambient_dimension << "\n";
    render_condition(os, "condition1", r.condition1);
    render_condition(os, "condition2", r.condition2);
    if (!r.degenerate_points.empty()) {
        os << "degenerate-points: " << subset_string(r.degenerate_points) << "\n";
    }
    os << "cells: " << r.cell_count << "\n";
    os << "sauer-bound: " << r.bound << "\n";
    os << "vc-dimension: " << r.vc_dimension << "\n";
    os << "maximum: " << (r.maximum.is_maximum ? "true" : "false")
       << " criterion=" << (r.maximum.exhaustive ? "all-subsets" : "full-count");
    if (!r.maximum.is_maximum) {
        os << " count=" << r.maximum.failing_count << " bound=" << r.maximum.failing_bound;
        if (r.maximum.failing_subset) os << " subset=" << subset_string(*r.maximum.failing_subset);
    }
    os << "\n";
    if (r.oracle_agrees) {
        os << "oracle: " << (*r.oracle_agrees ? "agree" : "MISMATCH");
        if (r.oracle_count) os << " cells=" << *r.oracle_count;
        os << "\n";
    }
    os << "certificate: "
       << (r.certified ? "certified" : (r.mode == Mode::Exact ? "exact-verdict" : "approximate-only"))
       << "\n";
    return os.str();
}

namespace {

nlohmann::json condition_json(const ConditionResult& c) {
    nlohmann::json j;
    j["holds"] = c.holds;
    j["checked"] = c.checked_count;
    j["quality"] = to_string(c.quality);
    if (c.failing_subset) {
        std::vector<std::size_t> one_based;
        for (std::size_t i : *c.failing_subset) one_based.push_back(i + 1);
        j["witness"] = one_based;
    }
    if (!c.all_failing.empty()) {
        nlohmann::json all = nlohmann::json::array();
        for (const auto& f : c.all_failing) {
            std::vector<std::size_t> one_based;
            for (std::size_t i : f) one_based.push_back(i + 1);
            all.push_back(one_based);
        }
        j["all_failing"] = all;
    }
    return j;
}

}  // namespace

void write_report_json(std::ostream& out, const VerificationReport& r) {
    nlohmann::json j;
    j["mode"] = to_string(r.mode);
    j["basis"] = r.basis_description;
    j["sample"] = r.sample_provenance;
    j["N"] = r.sample_size;
    j["n"] = r.basis_size;
    j["k"] = r.ambient_dimension;
    j["condition1"] = condition_json(r.condition1);
    j["condition2"] = condition_json(r.condition2);
    j["cells"] = r.cell_count;
    j["sauer_bound"] = r.bound;
    j["vc_dimension"] = r.vc_dimension;
    j["maximum"] = r.maximum.is_maximum;
    j["maximum_criterion"] = r.maximum.exhaustive ? "all-subsets" : "full-count";
    j["certificate"] =
        r.certified ? "certified" : (r.mode == Mode::Exact ? "exact-verdict" : "approximate-only");
    if (!r.degenerate_points.empty()) {
        std::vector<std::size_t> one_based;
        for (std::size_t i : r.degenerate_points) one_based.push_back(i + 1);
        j["degenerate_points"] = one_based;
    }
    if (r.oracle_agrees) {
        j["oracle_agrees"] = *r.oracle_agrees;
        if (r.oracle_count) j["oracle_cells"] = *r.oracle_count;
    }
    out << j.dump(2) << "\n";
}

int report_exit_code(const VerificationReport& r) {
    if (r.mode != Mode::Exact || !r.enumeration_certified) return 2;
    return r.maximum.is_maximum ? 0 : 1;
}

}  // namespace vcmax
