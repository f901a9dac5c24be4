#include "clustered/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "clustered/error.hpp"

namespace clustered::io {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
}

template <class F>
auto guarded(std::string_view what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string(what) + ": " + e.what());
    }
}

std::string finish(const json& j) { return j.dump() + "\n"; }

json graph_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_of(const json& j) {
    return guarded("graph JSON", [&] {
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw InvalidArgument("graph JSON: every edge must be a pair");
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        }
        return Graph(j.at("n").get<int>(), edges);
    });
}

std::vector<VertexSet> bag_list(const json& j) {
    std::vector<VertexSet> bags;
    for (const auto& bag : j)
        bags.push_back(bag.get<VertexSet>());
    return bags;
}

} // namespace

std::string graph_to_json(const Graph& g) { return finish(graph_json(g)); }

Graph graph_from_json(std::string_view text) { return graph_of(parse(text)); }

std::string graph_to_dot(const Graph& g, std::string_view name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        out << "  " << v << ";\n";
    for (auto [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string decomposition_to_json(const TreeDecomposition& td) {
    json nodes = json::array();
    for (int t = 0; t < td.node_count(); ++t)
        nodes.push_back(t);
    json tree_edges = json::array();
    for (auto [s, t] : td.tree.edges())
        tree_edges.push_back({s, t});
    // Keys in numeric node order; nlohmann's default object would sort them as strings.
    std::ostringstream out;
    out << "{\"nodes\":" << nodes.dump() << ",\"tree_edges\":" << tree_edges.dump() << ",\"bags\":{";
    for (int t = 0; t < td.node_count(); ++t) {
        VertexSet bag = td.bags[t];
        std::sort(bag.begin(), bag.end());
        out << (t ? "," : "") << '"' << t << "\":" << json(bag).dump();
    }
    out << "}}\n";
    return out.str();
}

TreeDecomposition decomposition_from_json(std::string_view text) {
    const json j = parse(text);
    return guarded("decomposition JSON", [&] {
        const auto nodes = j.at("nodes").get<std::vector<int>>();
        const int m = static_cast<int>(nodes.size());
        std::map<int, int> index;
        for (int i = 0; i < m; ++i)
            if (!index.emplace(nodes[i], i).second)
                throw InvalidArgument("decomposition JSON: duplicate node id " + std::to_string(nodes[i]));
        auto lookup = [&](int id) {
            auto it = index.find(id);
            if (it == index.end())
                throw InvalidArgument("decomposition JSON: unknown node id " + std::to_string(id));
            return it->second;
        };
        std::vector<Edge> edges;
        for (const auto& e : j.at("tree_edges")) {
            if (!e.is_array() || e.size() != 2)
                throw InvalidArgument("decomposition JSON: every tree edge must be a pair");
            edges.emplace_back(lookup(e.at(0).get<int>()), lookup(e.at(1).get<int>()));
        }
        std::vector<VertexSet> bags(m);
        for (const auto& [key, bag] : j.at("bags").items()) {
            int id = 0;
            try {
                id = std::stoi(key);
            } catch (const std::exception&) {
                throw InvalidArgument("decomposition JSON: bag key '" + key + "' is not a node id");
            }
            bags[lookup(id)] = bag.get<VertexSet>();
        }
        return TreeDecomposition{Graph(m, edges), std::move(bags)};
    });
}

std::string coloring_to_json(const Coloring& c) { return finish(json{{"k", c.k}, {"colors", c.colors}}); }

Coloring coloring_from_json(std::string_view text) {
    const json j = parse(text);
    return guarded("coloring JSON", [&] {
        return Coloring{j.at("k").get<int>(), j.at("colors").get<std::vector<int>>()};
    });
}

PartialColoring partial_coloring_from_json(std::string_view text) {
    const json j = parse(text);
    return guarded("partial coloring JSON", [&] {
        return PartialColoring{j.at("k").get<int>(), j.at("colors").get<std::vector<int>>()};
    });
}

std::string mono_report_to_json(const MonoReport& report) {
    json comps = json::array();
    for (const auto& c : report.components)
        comps.push_back({{"color", c.color},
                         {"vertices", c.vertices},
                         {"size", c.vertices.size()},
                         {"diameter", c.diameter}});
    return finish(json{{"components", std::move(comps)},
                       {"max_size", report.max_size},
                       {"max_diameter", report.max_diameter}});
}

std::string necklace_spec_to_json(const NecklaceSpec& spec) {
    return finish(json{{"n", spec.n}, {"q", spec.q}, {"cliques", spec.cliques}});
}

NecklaceSpec necklace_spec_from_json(std::string_view text) {
    const json j = parse(text);
    return guarded("necklace JSON", [&] {
        NecklaceSpec spec{j.at("n").get<int>(), j.at("q").get<int>(), {}};
        if (j.contains("cliques"))
            spec.cliques = bag_list(j.at("cliques"));
        return spec;
    });
}

std::string society_to_json(const Society& s) {
    return finish(json{{"graph", graph_json(s.graph)}, {"omega", s.omega}});
}

Society society_from_json(std::string_view text) {
    const json j = parse(text);
    Society s = guarded("society JSON", [&] { return Society{graph_of(j.at("graph")), j.at("omega").get<VertexSet>()}; });
    validate_society(s);
    return s;
}

std::string vortical_to_json(const VorticalDecomposition& vd) { return finish(json{{"bags", vd.bags}}); }

VorticalDecomposition vortical_from_json(std::string_view text) {
    const json j = parse(text);
    return guarded("vortical JSON", [&] { return VorticalDecomposition{bag_list(j.at("bags"))}; });
}

} // namespace clustered::io
