#include "edgeideal_cli/cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <thread>

#include "edgeideal/error.hpp"
#include "edgeideal/theorems.hpp"

namespace edgeideal::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Edge ideal laboratory: depth, Cohen-Macaulay and almost Cohen-Macaulay tests for graphs and complexes"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string field_text = "q";

    app.add_option("--field", field_text, "Coefficient field: q for the rationals, or a prime p");
    app.add_option("--codim", cfg.codim, "k for the codimension-k connectivity report")->check(CLI::NonNegativeNumber);
    app.add_option("--max-n", cfg.max_n,
                   "Size limit: vertices for graph sweeps (default 10), variables for Hochster sweeps (default 20)");
    app.add_flag("--json", cfg.json, "Emit JSON");
    app.add_option("--jobs", cfg.jobs, "Worker threads (0 = hardware concurrency)")->check(CLI::NonNegativeNumber);
    app.add_flag("--verbose", cfg.verbose, "Full multigraded Betti table and extra detail");
    app.add_flag("--timing", cfg.timing, "Include elapsed times");

    auto* analyze = app.add_subcommand("analyze", "Classify a graph (edge list) or simplicial complex (facet list)");
    analyze->add_option("input", cfg.inputs, "Input file, or - for standard input")->required();
    analyze->add_option("--format", cfg.format, "Input format")->check(CLI::IsMember({"auto", "graph", "complex"}));

    auto* ferrers = app.add_subcommand("ferrers", "Closed-form invariants of a Ferrers ideal");
    ferrers->add_option("lambda", cfg.lambda, "Weakly decreasing positive parts")->required();

    auto* verify = app.add_subcommand("verify", "Check a statement over its enumerated family");
    verify->add_option("ids", cfg.ids, "Statement ids, or all")->required();
    verify->add_option("--max-m", cfg.max_m, "Largest side for the complete bipartite check")->check(CLI::PositiveNumber);
    verify->add_option("--ferrers-n", cfg.ferrers_n, "Largest n and lambda_1 for the Ferrers check")
        ->check(CLI::PositiveNumber);
    verify->add_option("--random", cfg.random_complexes, "Random complexes for T2")->check(CLI::NonNegativeNumber);
    verify->add_option("--splits", cfg.mv_splits, "Random facet splits for MV")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", cfg.seed, "Random seed");
    verify->add_option("--out-dir", cfg.out_dir, "Directory for counterexample files");

    app.add_subcommand("reproduce", "Recompute both worked examples and compare with the expected values");

    try {
        app.parse(argc, argv);
        cfg.field = FieldSpec::parse(field_text);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    if (cfg.jobs == 0) cfg.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        if (cfg.command == "analyze") return cmd_analyze(cfg, out);
        if (cfg.command == "ferrers") return cmd_ferrers(cfg, out);
        if (cfg.command == "verify") return cmd_verify(cfg, out);
        return cmd_reproduce(cfg, out);
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return kResource;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kMismatch;
    }
}

}  // namespace edgeideal::cli
