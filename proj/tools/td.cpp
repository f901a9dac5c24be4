#include "cli.hpp"
#include "clustered/bounds.hpp"
#include "clustered/error.hpp"
#include "clustered/io.hpp"
#include "clustered/necklace.hpp"
#include "clustered/treewidth.hpp"

namespace clustered::cli {

namespace {

json violations_json(const std::vector<Violation>& vs) {
    json list = json::array();
    for (const auto& v : vs)
        list.push_back({{"kind", to_string(v.kind)}, {"message", v.message}, {"vertices", v.vertices}});
    return list;
}

json td_summary(const Graph& g, const TreeDecomposition& td) {
    auto vs = validate_td(g, td);
    return {{"nodes", td.node_count()},
            {"width", width(td)},
            {"adhesion", adhesion(td)},
            {"valid", vs.empty()},
            {"violations", violations_json(vs)}};
}

} // namespace

int run_td(const std::string& mode, Params& params, const GlobalOptions& opts) {
    json report;
    report["command"] = "td " + mode;
    json results = json::object();
    int code = kPass;

    if (mode == "exact") {
        TreewidthOptions topts;
        topts.max_vertices = static_cast<int>(params.integer("limit", topts.max_vertices));
        params.finish();
        Graph g = read_graph(opts.in);
        auto r = exact_treewidth(g, topts);
        results = td_summary(g, r.witness);
        results["treewidth"] = r.treewidth;
        results["elimination_order"] = r.elimination_order;
        emit_artifact(report, "decomposition", io::decomposition_to_json(r.witness), opts);
    } else if (mode == "necklace") {
        params.finish();
        NecklaceSpec spec = io::necklace_spec_from_json(read_file(opts.in));
        auto td = necklace_td(spec);
        results = td_summary(necklace_graph(spec), td);
        results["bound"] = necklace_bound(spec.q).str();
        results["within_bound"] = BigInt(width(td)) <= necklace_bound(spec.q);
        emit_artifact(report, "decomposition", io::decomposition_to_json(td), opts);
    } else if (mode == "validate") {
        const std::string td_path = params.text("td");
        params.finish();
        Graph g = read_graph(opts.in);
        auto td = io::decomposition_from_json(read_file(td_path));
        results = td_summary(g, td);
        if (!results["valid"].get<bool>())
            code = kFail;
    } else {
        throw InvalidArgument("td: unknown mode '" + mode + "' (expected exact, necklace or validate)");
    }

    report["params"] = params.resolved();
    report["results"] = results;
    report["verdict"] = code == kPass ? "pass" : "fail";
    const std::string text = dump(report);
    // validate has no artifact of its own; its report is the output.
    if (mode == "validate" && !opts.out.empty())
        write_output(opts.out, text);
    write_output("", text);
    return code;
}

} // namespace clustered::cli
