// Command-line front end: verify / enumerate / vcdim / sample / demo / trial.
//
// Exit codes: 0 = verified maximum, 1 = verified non-maximum,
// 2 = approximate or indeterminate verdict, 3 = input or usage error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vcmax/errors.hpp"
#include "vcmax/io.hpp"
#include "vcmax/pipeline.hpp"

namespace {

struct BasisArgs {
    std::string family;
    std::vector<std::string> params;
    std::string basis_file;
};

struct SampleArgs {
    std::size_t count = 0;
    std::uint64_t seed = 0;
    std::string dist = "uniform";
    unsigned precision_bits = 53;
    std::string box = "0:1";
    double mean = 0.0;
    double sigma = 1.0;
    std::string points_file;
};

void add_basis_options(CLI::App* cmd, BasisArgs& args) {
    cmd->add_option("--family", args.family, "Built-in family: disks, monomials, poly_threshold, trig");
    cmd->add_option("--param", args.params, "Family parameter as key=value (repeatable)");
    cmd->add_option("--basis-file", args.basis_file, "Basis spec file (dim:/f0:/f: lines)");
}

void add_sample_options(CLI::App* cmd, SampleArgs& args, bool with_points_file) {
    cmd->add_option("--n", args.count, "Number of sample points");
    cmd->add_option("--seed", args.seed, "Sampling seed");
    cmd->add_option("--dist", args.dist, "Distribution: uniform | gaussian")
        ->check(CLI::IsMember({"uniform", "gaussian"}));
    cmd->add_option("--precision-bits", args.precision_bits, "Dyadic grid precision (1..53)");
    cmd->add_option("--box", args.box, "Uniform bounds as lo:hi (rationals or decimals)");
    cmd->add_option("--mean", args.mean, "Gaussian mean");
    cmd->add_option("--sigma", args.sigma, "Gaussian sigma");
    if (with_points_file) {
        cmd->add_option("--points", args.points_file, "Read points from file instead of sampling");
    }
}

vcmax::FunctionBasis resolve_basis(const BasisArgs& args) {
    if (!args.basis_file.empty()) {
        if (!args.family.empty()) {
            throw vcmax::InvalidInputError("give either --family or --basis-file, not both");
        }
        return vcmax::read_basis_path(args.basis_file);
    }
    if (args.family.empty()) {
        throw vcmax::InvalidInputError("a basis is required: --family <name> or --basis-file <path>");
    }
    std::map<std::string, std::string> params;
    for (const std::string& kv : args.params) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos) {
            throw vcmax::InvalidInputError("--param expects key=value, got '" + kv + "'");
        }
        params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return vcmax::builtin_basis(args.family, params);
}

vcmax::SamplingSpec resolve_spec(const SampleArgs& args, std::size_t dimension) {
    vcmax::SamplingSpec spec;
    spec.count = args.count;
    spec.dimension = dimension;
    spec.seed = args.seed;
    spec.precision_bits = args.precision_bits;
    spec.distribution =
        args.dist == "gaussian" ? vcmax::Distribution::Gaussian : vcmax::Distribution::UniformBox;
    const std::size_t colon = args.box.find(':');
    if (colon == std::string::npos) {
        throw vcmax::InvalidInputError("--box expects lo:hi");
    }
    spec.low = {vcmax::Rational::parse(args.box.substr(0, colon))};
    spec.high = {vcmax::Rational::parse(args.box.substr(colon + 1))};
    spec.mean = {args.mean};
    spec.sigma = {args.sigma};
    return spec;
}

struct ResolvedPoints {
    std::vector<vcmax::Point> points;
    std::string provenance;
};

ResolvedPoints resolve_points(const SampleArgs& args, std::size_t dimension) {
    ResolvedPoints out;
    if (!args.points_file.empty()) {
        out.points = vcmax::read_points_file(args.points_file);
        out.provenance = "file=" + args.points_file;
        return out;
    }
    if (args.count == 0) {
        throw vcmax::InvalidInputError("points are required: --points <file> or --n <count> [--seed S]");
    }
    const vcmax::SamplingSpec spec = resolve_spec(args, dimension);
    out.points = vcmax::sample_points(spec);
    out.provenance = vcmax::describe(spec);
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    std::cout << text;
    if (!out_path.empty()) vcmax::write_text_file(out_path, text);
}

void print_timings(const vcmax::VerificationReport& r) {
    std::cerr << "timings: design=" << r.timings.design << "s conditions=" << r.timings.conditions
              << "s enumeration=" << r.timings.enumeration
              << "s combinatorics=" << r.timings.combinatorics << "s\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for the maximum property of positivity-set systems"};
    app.require_subcommand(1);

    BasisArgs basis_args;
    SampleArgs sample_args;
    bool exhaustive = false;
    bool oracle = false;
    bool timings = false;
    std::string out_path;
    std::string json_path;
    std::string system_path;
    std::string demo_name;
    std::size_t trials = 100;
    std::size_t dimension = 2;

    CLI::App* verify = app.add_subcommand("verify", "Run the full verification pipeline");
    add_basis_options(verify, basis_args);
    add_sample_options(verify, sample_args, true);
    verify->add_flag("--exhaustive", exhaustive, "Gather all failing subsets; all-subsets maximum check");
    verify->add_flag("--oracle", oracle, "Cross-check enumeration against the brute-force oracle");
    verify->add_option("--out", out_path, "Write the report to this file as well");
    verify->add_option("--json", json_path, "Write a JSON report to this file");
    verify->add_option("--out-system", system_path, "Write the enumerated set system to this file");
    verify->add_flag("--timings", timings, "Print phase timings to stderr");

    CLI::App* enumerate = app.add_subcommand("enumerate", "Enumerate the set system of a basis + sample");
    add_basis_options(enumerate, basis_args);
    add_sample_options(enumerate, sample_args, true);
    enumerate->add_flag("--oracle", oracle, "Cross-check against the brute-force oracle");
    enumerate->add_option("--out", out_path, "Write the set-system file here (default: stdout)");

    CLI::App* vcdim = app.add_subcommand("vcdim", "VC dimension of a set-system file");
    std::string system_in;
    vcdim->add_option("--system", system_in, "Set-system file")->required();

    CLI::App* sample = app.add_subcommand("sample", "Generate a seeded point sample");
    add_sample_options(sample, sample_args, false);
    sample->add_option("--k", dimension, "Point dimension");
    sample->add_option("--out", out_path, "Write the points file here (default: stdout)");

    CLI::App* demo = app.add_subcommand("demo", "Run a packaged scenario");
    demo->add_option("name", demo_name, "disks | poly_threshold | trig | halfspace_violation")
        ->required();
    demo->add_flag("--exhaustive", exhaustive, "Gather all failing subsets");
    demo->add_flag("--oracle", oracle, "Cross-check enumeration against the brute-force oracle");
    demo->add_option("--out", out_path, "Write the report to this file as well");
    demo->add_flag("--timings", timings, "Print phase timings to stderr");

    CLI::App* trial = app.add_subcommand("trial", "Repeat verification over consecutive seeds");
    add_basis_options(trial, basis_args);
    add_sample_options(trial, sample_args, false);
    trial->add_option("--trials", trials, "Number of trials");
    trial->add_option("--out", out_path, "Write the summary to this file as well");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            const vcmax::FunctionBasis basis = resolve_basis(basis_args);
            ResolvedPoints pts = resolve_points(sample_args, basis.ambient_dimension());
            vcmax::VerifyOptions options;
            options.exhaustive = exhaustive;
            options.oracle = oracle;
            options.sample_provenance = pts.provenance;
            const vcmax::VerificationReport report = vcmax::run_verify(basis, pts.points, options);
            emit(vcmax::render_report(report), out_path);
            if (!json_path.empty()) {
                std::ofstream out(json_path);
                vcmax::write_report_json(out, report);
            }
            if (!system_path.empty() && report.system) {
                vcmax::write_set_system_file(system_path, *report.system);
            }
            if (timings) print_timings(report);
            return vcmax::report_exit_code(report);
        }
        if (enumerate->parsed()) {
            const vcmax::FunctionBasis basis = resolve_basis(basis_args);
            ResolvedPoints pts = resolve_points(sample_args, basis.ambient_dimension());
            vcmax::VerifyOptions options;
            options.oracle = oracle;
            options.sample_provenance = pts.provenance;
            const vcmax::VerificationReport report = vcmax::run_verify(basis, pts.points, options);
            std::ostringstream os;
            report.system->write(os);
            emit(os.str(), out_path);
            if (report.oracle_agrees && !*report.oracle_agrees) {
                std::cerr << "oracle mismatch: incremental and brute-force enumerations disagree\n";
                return 4;
            }
            return report.mode == vcmax::Mode::Exact && report.enumeration_certified ? 0 : 2;
        }
        if (vcdim->parsed()) {
            const vcmax::SetSystem system = vcmax::read_set_system_file(system_in);
            std::ostringstream os;
            os << "N: " << system.ground_size() << "\n";
            os << "count: " << system.size() << "\n";
            os << "vc-dimension: " << system.vc_dimension() << "\n";
            emit(os.str(), out_path);
            return 0;
        }
        if (sample->parsed()) {
            if (sample_args.count == 0) throw vcmax::InvalidInputError("--n is required");
            const vcmax::SamplingSpec spec = resolve_spec(sample_args, dimension);
            const std::vector<vcmax::Point> points = vcmax::sample_points(spec);
            std::ostringstream os;
            vcmax::write_points(os, points);
            emit(os.str(), out_path);
            return 0;
        }
        if (demo->parsed()) {
            vcmax::VerifyOptions options;
            options.exhaustive = exhaustive;
            options.oracle = oracle;
            const vcmax::VerificationReport report = vcmax::run_demo(demo_name, options);
            emit(vcmax::render_report(report), out_path);
            if (timings) print_timings(report);
            return vcmax::report_exit_code(report);
        }
        if (trial->parsed()) {
            const vcmax::FunctionBasis basis = resolve_basis(basis_args);
            if (sample_args.count == 0) throw vcmax::InvalidInputError("--n is required");
            const vcmax::SamplingSpec spec = resolve_spec(sample_args, basis.ambient_dimension());
            const vcmax::TrialSummary summary = vcmax::run_trials(basis, spec, trials);
            emit(vcmax::render_trials(summary), out_path);
            return summary.maximum_count == summary.trials ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
