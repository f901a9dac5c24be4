#include "clustered/coloring.hpp"

#include <algorithm>
#include <string>

#include "clustered/error.hpp"

namespace clustered {

void validate_coloring(const Graph& g, const Coloring& c) {
    if (c.k < 1)
        throw InvalidArgument("coloring needs at least one color");
    if (static_cast<int>(c.colors.size()) != g.vertex_count())
        throw InvalidArgument("coloring covers " + std::to_string(c.colors.size()) + " vertices, graph has " +
                              std::to_string(g.vertex_count()));
    for (std::size_t v = 0; v < c.colors.size(); ++v)
        if (c.colors[v] < 1 || c.colors[v] > c.k)
            throw InvalidArgument("vertex " + std::to_string(v) + " has color " + std::to_string(c.colors[v]) +
                                  " outside 1.." + std::to_string(c.k));
}

MonoReport mono_components(const Graph& g, const Coloring& c) {
    validate_coloring(g, c);
    MonoReport report;
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        MonoComponent comp{c.colors[s], {s}, 0};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.vertices.size(); ++head)
            for (Vertex w : g.neighbors(comp.vertices[head]))
                if (!seen[w] && c.colors[w] == comp.color) {
                    seen[w] = 1;
                    comp.vertices.push_back(w);
                }
        std::sort(comp.vertices.begin(), comp.vertices.end());
        comp.diameter = component_diameter(g, comp.vertices);
        report.max_size = std::max(report.max_size, static_cast<int>(comp.vertices.size()));
        report.max_diameter = std::max(report.max_diameter, comp.diameter);
        report.components.push_back(std::move(comp));
    }
    return report;
}

RecolorCheck check_recolor_bound(const Graph& g, const Coloring& base, int k_size,
                                 std::span<const Vertex> z, const Coloring& recolored) {
    validate_coloring(g, base);
    validate_coloring(g, recolored);
    if (k_size < 0)
        throw InvalidArgument("component size bound must be nonnegative");
    const int n = g.vertex_count();
    std::vector<char> in_z(n, 0);
    for (Vertex v : z) {
        if (v < 0 || v >= n)
            throw InvalidArgument("Z contains vertex " + std::to_string(v) + " outside the graph");
        in_z[v] = 1;
    }
    for (Vertex v = 0; v < n; ++v)
        if (!in_z[v] && base.colors[v] != recolored.colors[v])
            throw InvalidArgument("recolored coloring changes vertex " + std::to_string(v) + ", which is not in Z");
    const auto before = mono_components(g, base);
    if (before.max_size > k_size)
        throw InvalidArgument("base coloring has a component of size " + std::to_string(before.max_size) +
                              ", above the certified bound " + std::to_string(k_size));

    RecolorCheck check;
    check.max_degree = max_degree(g);
    const auto z_count = static_cast<std::int64_t>(std::count(in_z.begin(), in_z.end(), 1));
    check.budget = recolor_budget(z_count, check.max_degree, k_size);
    for (const auto& comp : mono_components(g, recolored).components) {
        const bool meets_z = std::any_of(comp.vertices.begin(), comp.vertices.end(),
                                         [&](Vertex v) { return in_z[v] != 0; });
        const auto size = static_cast<std::int64_t>(comp.vertices.size());
        if (meets_z)
            check.union_size += size;
        else
            check.max_disjoint = std::max(check.max_disjoint, size);
    }
    check.pass = BigInt(check.union_size) <= check.budget && check.max_disjoint <= k_size;
    return check;
}

TwoColoringReport td_two_coloring(const Graph& g, const TreeDecomposition& td) {
    if (auto v = validate_td(g, td); !v.empty())
        throw InvalidArgument("invalid tree decomposition: " + v.front().message);
    TwoColoringReport report;
    report.width = width(td);
    report.max_degree = max_degree(g);
    if (report.width < 1 || report.max_degree < 1)
        throw InvalidArgument("24wΔ verification needs width >= 1 and maximum degree >= 1");
    report.bound = adov_bound(report.width, report.max_degree);

    const int m = td.node_count();
    std::vector<int> node_depth(m, -1);
    std::vector<int> order{0};
    node_depth[0] = 0;
    for (std::size_t head = 0; head < order.size(); ++head)
        for (int s : td.tree.neighbors(order[head]))
            if (node_depth[s] < 0) {
                node_depth[s] = node_depth[order[head]] + 1;
                order.push_back(s);
            }

    // Traces are subtrees, so the shallowest bag holding v is unique.
    const int n = g.vertex_count();
    std::vector<int> depth(n, -1);
    for (int t : order)
        for (Vertex v : td.bags[t])
            if (depth[v] < 0)
                depth[v] = node_depth[t];

    for (int b = 1; b <= report.width + 1; ++b) {
        Coloring c{2, std::vector<int>(n)};
        for (Vertex v = 0; v < n; ++v)
            c.colors[v] = 1 + (depth[v] / b) % 2;
        const int largest = mono_components(g, c).max_size;
        if (report.block_size == 0 || largest < report.max_component) {
            report.block_size = b;
            report.max_component = largest;
            report.coloring = std::move(c);
        }
    }
    report.within_bound = BigInt(report.max_component) <= report.bound;
    return report;
}

} // namespace clustered
