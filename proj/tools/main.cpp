// Command-line entry point: ingest operator spec files, run the
// classify/embed/verify pipelines, emit reports and CSV sweeps.
//
// Exit codes: 0 = success (NotEmbeddable is a correct answer, not an
// error), 1 = a requested verification failed, 2 = spec parse error,
// 3 = numerical failure during construction.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "c0embed/classify.hpp"
#include "c0embed/constructors.hpp"
#include "c0embed/demo.hpp"
#include "c0embed/error.hpp"
#include "c0embed/report.hpp"
#include "c0embed/specfile.hpp"
#include "c0embed/verify.hpp"

namespace {

namespace fs = std::filesystem;
using namespace c0embed;

struct CliConfig {
    std::string input_path;
    std::string out_dir = "out";
    std::optional<double> tol;
    std::optional<int> nodes;
    std::optional<int> grid;
    std::optional<int> depth;
    std::vector<int> branch;
    unsigned seed = kDefaultVerifySeed;
    bool seed_set = false;
};

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw Error("cannot write " + path.string());
}

EmbedOptions merge_options(const CliConfig& cli, const SpecOptions& spec) {
    EmbedOptions opt;
    opt.contour_nodes = cli.nodes.value_or(spec.nodes.value_or(opt.contour_nodes));
    opt.grid_per_block = cli.grid.value_or(spec.grid.value_or(opt.grid_per_block));
    opt.wold_depth = cli.depth.value_or(spec.depth.value_or(opt.wold_depth));
    opt.branch_offsets = cli.branch.empty() ? spec.branch : cli.branch;
    return opt;
}

VerifyTolerances tolerances_for(const SemigroupRealization& s, const CliConfig& cli,
                                const SpecOptions& spec) {
    VerifyTolerances tol = VerifyTolerances::for_method(s.method());
    const std::optional<double> override_tol = cli.tol ? cli.tol : spec.tol;
    if (override_tol) {
        tol.endpoint = *override_tol;
        tol.cocycle = *override_tol;
    }
    return tol;
}

unsigned effective_seed(const CliConfig& cli, const SpecOptions& spec) {
    if (cli.seed_set) return cli.seed;
    return spec.seed.value_or(cli.seed);
}

int run_classify(const CliConfig& cli) {
    const OperatorSpec spec = load_operator_spec(cli.input_path);
    const EmbeddabilityVerdict verdict = classify(spec.op);
    const std::string report = render_verdict_report(spec.op, verdict);
    write_file(fs::path(cli.out_dir) / "verdict.txt", report);
    std::cout << report;
    return 0;
}

int run_embed(const CliConfig& cli, bool verification_drives_exit) {
    const OperatorSpec spec = load_operator_spec(cli.input_path);
    const EmbedOptions options = merge_options(cli, spec.options);
    const unsigned seed = effective_seed(cli, spec.options);

    const EmbeddabilityVerdict verdict = classify(spec.op);
    std::string verdict_report = render_verdict_report(spec.op, verdict);
    write_file(fs::path(cli.out_dir) / "verdict.txt", verdict_report);
    std::cout << verdict_report;
    if (!verdict.is_embeddable()) return 0;

    auto result = construct_embedding(spec.op, options);
    const auto& realization = std::get<SemigroupRealization>(result);
    const std::string realization_report = render_realization_report(realization);
    write_file(fs::path(cli.out_dir) / "realization.txt", realization_report);
    std::cout << realization_report;

    const VerifyTolerances tol = tolerances_for(realization, cli, spec.options);
    VerificationReport report =
        check_embedding(realization, realization.endpoint_target(), tol, {}, seed);
    if (realization.coarse_embedding()) {
        report.coarse_endpoint_residual =
            coarse_endpoint_residual(realization, materialize(spec.op));
        const double budget = std::max(tol.endpoint, 1e-7);
        report.pass = report.pass && *report.coarse_endpoint_residual <= budget;
    }
    const std::string verification_report =
        render_verification_report(realization, report, tol);
    write_file(fs::path(cli.out_dir) / "verification.txt", verification_report);
    write_file(fs::path(cli.out_dir) / "continuity.csv",
               render_continuity_csv(report.continuity_profile));
    std::cout << verification_report;
    if (verification_drives_exit && !report.pass) return 1;
    return 0;
}

int run_sweep(const CliConfig& cli) {
    const OperatorSpec spec = load_operator_spec(cli.input_path);
    const EmbedOptions options = merge_options(cli, spec.options);
    const unsigned seed = effective_seed(cli, spec.options);

    auto result = construct_embedding(spec.op, options);
    if (const auto* verdict = std::get_if<EmbeddabilityVerdict>(&result)) {
        std::cout << render_verdict_report(spec.op, *verdict);
        return 0;
    }
    const auto& realization = std::get<SemigroupRealization>(result);
    const auto profile =
        continuity_sweep(realization, default_test_vectors(realization.dim(), seed),
                         default_continuity_steps(realization));
    const std::string csv = render_continuity_csv(profile);
    write_file(fs::path(cli.out_dir) / "sweep.csv", csv);
    std::cout << csv;
    return 0;
}

int run_demo_command(const CliConfig& cli) {
    EmbedOptions options;
    options.contour_nodes = cli.nodes.value_or(options.contour_nodes);
    options.grid_per_block = cli.grid.value_or(options.grid_per_block);
    options.wold_depth = cli.depth.value_or(options.wold_depth);
    const DemoSummary summary = run_demo(cli.seed, options);
    const std::string text = render_demo_summary(summary);
    write_file(fs::path(cli.out_dir) / "demo_summary.txt", text);
    std::cout << text;
    return summary.all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"classify linear operators by embeddability into C0-semigroups, "
                 "construct embedding semigroups, and verify them numerically"};
    app.require_subcommand(1);

    CliConfig cli;
    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input)
            cmd->add_option("input", cli.input_path, "operator spec file")->required();
        cmd->add_option("--out", cli.out_dir, "output directory (default: out)");
        cmd->add_option("--tol", cli.tol, "override endpoint/cocycle tolerance");
        cmd->add_option("--nodes", cli.nodes, "contour quadrature nodes per circle");
        cmd->add_option("--grid", cli.grid, "grid cells per unit time for translations");
        cmd->add_option("--depth", cli.depth, "wold accumulation depth");
        cmd->add_option("--branch", cli.branch, "per-eigenvalue branch offsets k1,k2,...")
            ->delimiter(',');
        cmd->add_option("--seed", cli.seed, "seed for random test vectors")
            ->each([&](const std::string&) { cli.seed_set = true; });
    };

    auto* classify_cmd = app.add_subcommand("classify", "emit the embeddability verdict");
    add_common(classify_cmd, true);
    auto* embed_cmd =
        app.add_subcommand("embed", "construct an embedding semigroup and auto-verify");
    add_common(embed_cmd, true);
    auto* verify_cmd = app.add_subcommand(
        "verify", "construct and verify; exit status reflects verification");
    add_common(verify_cmd, true);
    auto* sweep_cmd = app.add_subcommand("sweep", "emit the continuity CSV sweep");
    add_common(sweep_cmd, true);
    auto* demo_cmd = app.add_subcommand("demo", "run the built-in corpus");
    add_common(demo_cmd, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify_cmd->parsed()) return run_classify(cli);
        if (embed_cmd->parsed()) return run_embed(cli, true);
        if (verify_cmd->parsed()) return run_embed(cli, true);
        if (sweep_cmd->parsed()) return run_sweep(cli);
        if (demo_cmd->parsed()) return run_demo_command(cli);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
