// clustered: command-line front end.
//
//   clustered gen grid k=3 --out grid.json
//   clustered td exact --in k5.json
//   clustered check hex k=4 --threads 4
//   clustered bounds delta=1 g=0
//
// Reports go to stdout as JSON and are byte-identical for identical inputs
// and seed, whatever --threads is. Elapsed time goes to stderr only.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"
#include "clustered/error.hpp"

using namespace clustered;
using namespace clustered::cli;

namespace {

void add_common(CLI::App& cmd, GlobalOptions& opts, bool with_format = true) {
    cmd.add_option("--seed", opts.seed, "Random seed");
    cmd.add_option("--budget", opts.budget, "Enumeration budget in canonical colorings")->capture_default_str();
    cmd.add_option("--threads", opts.threads, "Worker threads")->check(CLI::Range(1, 256));
    cmd.add_option("--in", opts.in, "Input file");
    cmd.add_option("--out", opts.out, "Output file");
    if (with_format)
        cmd.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clustered coloring toolkit: generators, decompositions, exhaustive checks, bounds"};
    app.require_subcommand(1);

    GlobalOptions opts;
    std::string what;
    std::vector<std::string> tokens;

    auto* gen = app.add_subcommand("gen", "Generate a graph: grid, gadget, necklace, line, regular, path, cycle");
    gen->add_option("family", what)->required();
    gen->add_option("params", tokens, "key=value parameters");
    add_common(*gen, opts);

    auto* td = app.add_subcommand("td", "Tree decompositions: exact, necklace, validate");
    td->add_option("mode", what)->required();
    td->add_option("params", tokens, "key=value parameters");
    add_common(*td, opts);

    auto* check = app.add_subcommand("check", "Checks: hex, gadget, line, recolor, forall, bound24");
    check->add_option("check", what)->required();
    check->add_option("params", tokens, "key=value parameters");
    add_common(*check, opts);

    auto* color = app.add_subcommand("color", "Exact min-max monochromatic component coloring");
    color->add_option("params", tokens, "key=value parameters");
    add_common(*color, opts);

    auto* exp = app.add_subcommand("export", "Convert a graph file to json or dot");
    exp->add_option("params", tokens, "key=value parameters");
    add_common(*exp, opts);

    auto* bounds = app.add_subcommand("bounds", "Evaluate the bound formulas exactly");
    bounds->add_option("params", tokens, "key=value parameters");
    add_common(*bounds, opts, false);
    bounds->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kError;
    }
    if (bounds->parsed() && bounds->count("--format") == 0)
        opts.format = "text";

    const auto start = std::chrono::steady_clock::now();
    int code = kError;
    try {
        if (gen->parsed()) {
            Params p("gen " + what, tokens);
            code = run_gen(what, p, opts);
        } else if (td->parsed()) {
            Params p("td " + what, tokens);
            code = run_td(what, p, opts);
        } else if (check->parsed()) {
            Params p("check " + what, tokens);
            code = run_check(what, p, opts);
        } else if (color->parsed()) {
            Params p("color", tokens);
            code = run_color(p, opts);
        } else if (exp->parsed()) {
            Params p("export", tokens);
            code = run_export(p, opts);
        } else {
            Params p("bounds", tokens);
            code = run_bounds(p, opts);
        }
    } catch (const LimitExceeded& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return kError;
    } catch (const GenerationFailed& e) {
        std::cerr << "generation failed: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cerr << "elapsed_ms " << ms.count() << "\n";
    return code;
}
