#include "clustered/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "clustered/error.hpp"

namespace clustered {

namespace {

constexpr int kHardLimit = 26;

using Mask = std::uint32_t;

// Number of vertices outside `inside` + v adjacent to the component of v in
// G[inside + v].
int outside_reach(const std::vector<Mask>& adj, Mask inside, int v) {
    Mask reach = Mask{1} << v;
    Mask frontier = reach;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1)
            next |= adj[std::countr_zero(f)];
        next &= inside & ~reach;
        reach |= next;
        frontier = next;
    }
    Mask border = 0;
    for (Mask r = reach; r; r &= r - 1)
        border |= adj[std::countr_zero(r)];
    border &= ~inside & ~(Mask{1} << v);
    return std::popcount(border);
}

} // namespace

TreewidthResult exact_treewidth(const Graph& g, TreewidthOptions options) {
    const int n = g.vertex_count();
    const int limit = std::min(options.max_vertices, kHardLimit);
    if (n > limit)
        throw LimitExceeded("exact treewidth limited to " + std::to_string(limit) +
                            " vertices, graph has " + std::to_string(n));
    TreewidthResult result;
    if (n == 0) {
        result.witness = decomposition_from_elimination_order(g, {});
        return result;
    }

    std::vector<Mask> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= Mask{1} << v;
        adj[v] |= Mask{1} << u;
    }

    const std::size_t subsets = std::size_t{1} << n;
    std::vector<std::int8_t> table(subsets, 0);
    table[0] = -1;
    for (std::size_t s = 1; s < subsets; ++s) {
        const Mask set = static_cast<Mask>(s);
        int best = n;
        for (Mask rest = set; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const Mask without = set & ~(Mask{1} << v);
            const int sub = table[without];
            if (sub >= best)
                continue;
            best = std::min(best, std::max(sub, outside_reach(adj, without, v)));
        }
        table[s] = static_cast<std::int8_t>(best);
    }

    // Walk back down: the vertex chosen at S is eliminated after S \ v.
    Mask set = static_cast<Mask>(subsets - 1);
    std::vector<Vertex> reversed;
    while (set) {
        for (Mask rest = set; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const Mask without = set & ~(Mask{1} << v);
            if (std::max<int>(table[without], outside_reach(adj, without, v)) == table[set]) {
                reversed.push_back(v);
                set = without;
                break;
            }
        }
    }
    result.treewidth = table[subsets - 1];
    result.elimination_order.assign(reversed.rbegin(), reversed.rend());
    result.witness = decomposition_from_elimination_order(g, result.elimination_order);
    return result;
}

} // namespace clustered
