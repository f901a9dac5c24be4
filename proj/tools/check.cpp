#include <sstream>

#include "cli.hpp"
#include "clustered/coloring.hpp"
#include "clustered/enumeration.hpp"
#include "clustered/error.hpp"
#include "clustered/extremal.hpp"
#include "clustered/io.hpp"
#include "clustered/necklace.hpp"

namespace clustered::cli {

namespace {

json forall_json(const ForallResult& r) {
    json j;
    j["holds"] = r.holds;
    j["canonical_total"] = r.canonical_total.str();
    j["leaves_examined"] = r.leaves_examined;
    j["counterexample"] = r.counterexample ? json::parse(io::coloring_to_json(*r.counterexample)) : json(nullptr);
    return j;
}

ComponentPredicate parse_predicate(const std::string& text) {
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string kind = text.substr(0, colon);
        std::istringstream in(text.substr(colon + 1));
        int value = 0;
        if (in >> value && in.eof()) {
            if (kind == "size")
                return ComponentPredicate::size_at_least(value);
            if (kind == "diameter")
                return ComponentPredicate::diameter_above(value);
        }
    }
    throw InvalidArgument("pred must be size:<N> or diameter:<d>, got '" + text + "'");
}

VertexSet parse_vertex_list(const std::string& text) {
    VertexSet out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty())
            continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw InvalidArgument("");
        } catch (const std::exception&) {
            throw InvalidArgument("z must be a comma-separated vertex list, got '" + text + "'");
        }
    }
    return out;
}

} // namespace

int run_check(const std::string& kind, Params& params, const GlobalOptions& opts) {
    json report;
    report["command"] = "check " + kind;
    const EnumerationOptions eopts{opts.budget, opts.threads};
    json results = json::object();
    bool ok = false;

    if (kind == "hex") {
        const int k = static_cast<int>(params.integer("k"));
        params.finish();
        auto r = hex_check(k, eopts);
        results = forall_json(r);
        ok = r.holds;
    } else if (kind == "gadget") {
        GadgetParams p;
        p.level = static_cast<int>(params.integer("level", 2));
        p.d = static_cast<int>(params.integer("d", 1));
        if (auto len = params.maybe_integer("base_length"))
            p.base_path_length = static_cast<int>(*len);
        params.finish();
        if (!opts.in.empty() && p.base_path_length)
            throw InvalidArgument("check gadget: base_length only applies when building the gadget");
        Graph g = opts.in.empty() ? build_gadget(p) : read_graph(opts.in);
        auto r = verify_gadget(g, p.level, p.d, eopts);
        results = forall_json(r);
        results["n"] = g.vertex_count();
        ok = r.holds;
    } else if (kind == "line") {
        const int k = static_cast<int>(params.integer("k"));
        const int n_min = static_cast<int>(params.integer("N"));
        params.finish();
        Graph g;
        if (opts.in.empty()) {
            auto fam = build_line_family(k, n_min, opts.seed);
            report["seed"] = opts.seed;
            results["root_girth"] = fam.root_girth;
            g = std::move(fam.line);
        } else {
            g = read_graph(opts.in);
        }
        auto r = verify_line_family(g, k, n_min, eopts);
        const json base = results;
        results = forall_json(r);
        results.update(base);
        results["n"] = g.vertex_count();
        ok = r.holds;
    } else if (kind == "forall") {
        const int k = static_cast<int>(params.integer("k"));
        const auto pred = parse_predicate(params.text("pred"));
        params.finish();
        auto r = forall_colorings_check(read_graph(opts.in), k, pred, eopts);
        results = forall_json(r);
        ok = r.holds;
    } else if (kind == "recolor") {
        const std::string base_path = params.text("base");
        const std::string recolored_path = params.text("recolored");
        const VertexSet z = parse_vertex_list(params.text("z", ""));
        auto k_size = params.maybe_integer("k_size");
        params.finish();
        Graph g = read_graph(opts.in);
        Coloring base = io::coloring_from_json(read_file(base_path));
        Coloring recolored = io::coloring_from_json(read_file(recolored_path));
        const int k = k_size ? static_cast<int>(*k_size) : mono_components(g, base).max_size;
        auto r = check_recolor_bound(g, base, k, z, recolored);
        results = {{"pass", r.pass},
                   {"budget", r.budget.str()},
                   {"union_size", r.union_size},
                   {"max_disjoint", r.max_disjoint},
                   {"max_degree", r.max_degree},
                   {"k_size", k}};
        ok = r.pass;
    } else if (kind == "bound24") {
        auto td_path = params.maybe_text("td");
        auto spec_path = params.maybe_text("spec");
        params.finish();
        if (td_path && spec_path)
            throw InvalidArgument("check bound24: give td=<file> or spec=<file>, not both");
        Graph g;
        TreeDecomposition td;
        std::string source;
        if (spec_path) {
            NecklaceSpec spec = io::necklace_spec_from_json(read_file(*spec_path));
            g = necklace_graph(spec);
            td = necklace_td(spec);
            source = "necklace";
        } else {
            g = read_graph(opts.in);
            td = td_path ? io::decomposition_from_json(read_file(*td_path)) : min_degree_decomposition(g);
            source = td_path ? "file" : "min_degree";
        }
        auto r = td_two_coloring(g, td);
        results = {{"decomposition", source},
                   {"width", r.width},
                   {"max_degree", r.max_degree},
                   {"block_size", r.block_size},
                   {"max_component", r.max_component},
                   {"bound", r.bound.str()},
                   {"within_bound", r.within_bound},
                   {"coloring", json::parse(io::coloring_to_json(r.coloring))}};
        ok = r.within_bound;
    } else {
        throw InvalidArgument("check: unknown check '" + kind +
                              "' (expected hex, gadget, line, recolor, forall or bound24)");
    }

    report["params"] = params.resolved();
    report["results"] = results;
    const bool universal = kind == "hex" || kind == "gadget" || kind == "line" || kind == "forall";
    report["verdict"] = universal ? (ok ? "holds" : "fails") : (ok ? "pass" : "fail");
    const std::string text = dump(report);
    if (!opts.out.empty())
        write_output(opts.out, text);
    write_output("", text);
    return ok ? kPass : kFail;
}

int run_color(Params& params, const GlobalOptions& opts) {
    json report;
    report["command"] = "color";
    const int k = static_cast<int>(params.integer("k"));
    auto pre_path = params.maybe_text("precolored");
    ExactOptions xopts;
    xopts.max_vertices = static_cast<int>(params.integer("limit", xopts.max_vertices));
    xopts.threads = opts.threads;
    params.finish();

    Graph g = read_graph(opts.in);
    std::optional<PartialColoring> pre;
    if (pre_path)
        pre = io::partial_coloring_from_json(read_file(*pre_path));
    auto r = exact_min_max_mono(g, k, pre, xopts);
    auto mono = mono_components(g, r.witness);
    report["params"] = params.resolved();
    report["results"] = {{"optimum", r.optimum}, {"max_diameter", mono.max_diameter}};
    emit_artifact(report, "coloring", io::coloring_to_json(r.witness), opts);
    write_output("", dump(report));
    return kPass;
}

} // namespace clustered::cli
