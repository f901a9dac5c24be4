#include <random>

#include "cli.hpp"
#include "clustered/error.hpp"
#include "clustered/extremal.hpp"
#include "clustered/generators.hpp"
#include "clustered/io.hpp"

namespace clustered::cli {

namespace {

int as_int(std::int64_t v, const char* what) {
    if (v < 0 || v > 1'000'000)
        throw InvalidArgument(std::string(what) + " must be between 0 and 1000000");
    return static_cast<int>(v);
}

} // namespace

int run_gen(const std::string& family, Params& params, const GlobalOptions& opts) {
    json report;
    report["command"] = "gen " + family;
    json results = json::object();
    Graph g;
    bool seeded = false;

    if (family == "grid") {
        g = triangular_grid(as_int(params.integer("k"), "k"));
    } else if (family == "gadget") {
        GadgetParams p;
        p.level = as_int(params.integer("level", 2), "level");
        p.d = as_int(params.integer("d", 1), "d");
        if (auto len = params.maybe_integer("base_length"))
            p.base_path_length = as_int(*len, "base_length");
        p.size_cap = params.integer("size_cap", p.size_cap);
        results["predicted_size"] = predicted_gadget_size(p).str();
        g = build_gadget(p);
    } else if (family == "necklace") {
        const int n = as_int(params.integer("n"), "n");
        const int q = as_int(params.integer("q"), "q");
        auto spec_out = params.maybe_text("spec_out");
        std::mt19937_64 rng(opts.seed);
        NecklaceSpec spec = random_necklace_spec(n, q, rng);
        seeded = true;
        results["spec"] = json::parse(io::necklace_spec_to_json(spec));
        if (spec_out)
            write_output(*spec_out, io::necklace_spec_to_json(spec));
        g = necklace_graph(spec);
    } else if (family == "line") {
        const int k = as_int(params.integer("k"), "k");
        const int n_min = as_int(params.integer("N"), "N");
        auto fam = build_line_family(k, n_min, opts.seed);
        seeded = true;
        results["root"] = {{"n", fam.root.vertex_count()},
                           {"degree", max_degree(fam.root)},
                           {"girth", fam.root_girth}};
        g = std::move(fam.line);
    } else if (family == "regular") {
        const int degree = as_int(params.integer("degree"), "degree");
        const int girth_min = as_int(params.integer("girth"), "girth");
        g = random_regular_with_girth(degree, girth_min, opts.seed);
        seeded = true;
    } else if (family == "path") {
        g = path_graph(as_int(params.integer("n"), "n"));
    } else if (family == "cycle") {
        g = cycle_graph(as_int(params.integer("n"), "n"));
    } else {
        throw InvalidArgument("gen: unknown family '" + family +
                              "' (expected grid, gadget, necklace, line, regular, path or cycle)");
    }
    params.finish();

    results["graph"] = graph_summary(g);
    report["params"] = params.resolved();
    report["seed"] = seeded ? json(opts.seed) : json(nullptr);
    report["results"] = results;
    if (opts.out.empty())
        report["graph"] = json::parse(io::graph_to_json(g));
    else
        write_output(opts.out, render_graph(g, opts.format));
    write_output("", dump(report));
    return kPass;
}

int run_export(Params& params, const GlobalOptions& opts) {
    params.finish();
    write_output(opts.out, render_graph(read_graph(opts.in), opts.format));
    return kPass;
}

} // namespace clustered::cli
