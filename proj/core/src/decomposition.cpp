#include "clustered/decomposition.hpp"

#include <algorithm>
#include <set>

#include "clustered/error.hpp"

namespace clustered {

const char* to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::MalformedTree: return "malformed-tree";
    case ViolationKind::BagOutOfRange: return "bag-out-of-range";
    case ViolationKind::VertexUncovered: return "vertex-uncovered";
    case ViolationKind::EdgeUncovered: return "edge-uncovered";
    case ViolationKind::DisconnectedTrace: return "disconnected-trace";
    case ViolationKind::BoundaryNotInBag: return "boundary-not-in-bag";
    case ViolationKind::AdhesionTooLarge: return "adhesion-too-large";
    }
    return "unknown";
}

std::vector<Violation> validate_td(const Graph& g, const TreeDecomposition& td) {
    std::vector<Violation> out;
    const int m = td.node_count();
    if (td.tree.vertex_count() != m) {
        out.push_back({ViolationKind::MalformedTree,
                       "tree has " + std::to_string(td.tree.vertex_count()) + " nodes but " +
                           std::to_string(m) + " bags",
                       {}});
        return out;
    }
    if (!is_tree(td.tree)) {
        out.push_back({ViolationKind::MalformedTree, "decomposition tree is not a tree", {}});
        return out;
    }

    const int n = g.vertex_count();
    std::vector<std::vector<int>> nodes_of(n);
    for (int t = 0; t < m; ++t)
        for (Vertex v : td.bags[t]) {
            if (v < 0 || v >= n) {
                out.push_back({ViolationKind::BagOutOfRange,
                               "bag " + std::to_string(t) + " contains vertex " + std::to_string(v) +
                                   " not in the graph",
                               {v}});
                continue;
            }
            if (nodes_of[v].empty() || nodes_of[v].back() != t)
                nodes_of[v].push_back(t);
        }

    for (Vertex v = 0; v < n; ++v)
        if (nodes_of[v].empty())
            out.push_back({ViolationKind::VertexUncovered,
                           "vertex " + std::to_string(v) + " is in no bag", {v}});

    for (auto [u, v] : g.edges()) {
        const auto& a = nodes_of[u];
        const auto& b = nodes_of[v];
        std::vector<int> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        if (common.empty())
            out.push_back({ViolationKind::EdgeUncovered,
                           "edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") is in no single bag",
                           {u, v}});
    }

    // The nodes holding v induce a subtree iff they are connected in T.
    std::vector<char> holds(m, 0);
    for (Vertex v = 0; v < n; ++v) {
        const auto& list = nodes_of[v];
        if (list.size() <= 1)
            continue;
        for (int t : list)
            holds[t] = 1;
        std::vector<int> stack{list.front()};
        std::vector<char> seen(m, 0);
        seen[list.front()] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int s : td.tree.neighbors(t))
                if (holds[s] && !seen[s]) {
                    seen[s] = 1;
                    ++reached;
                    stack.push_back(s);
                }
        }
        if (reached != list.size())
            out.push_back({ViolationKind::DisconnectedTrace,
                           "bags containing vertex " + std::to_string(v) +
                               " do not form a connected subtree",
                           {v}});
        for (int t : list)
            holds[t] = 0;
    }
    return out;
}

int width(const TreeDecomposition& td) {
    int best = -1;
    for (const auto& bag : td.bags)
        best = std::max(best, static_cast<int>(bag.size()) - 1);
    return best;
}

int adhesion(const TreeDecomposition& td) {
    int best = 0;
    for (auto [s, t] : td.tree.edges()) {
        VertexSet a = td.bags.at(s), b = td.bags.at(t);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        VertexSet common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        best = std::max(best, static_cast<int>(common.size()));
    }
    return best;
}

namespace {

struct EliminationResult {
    std::vector<VertexSet> later_neighbors;  // indexed by elimination position
    std::vector<int> position;               // vertex -> position
};

void check_order(const Graph& g, std::span<const Vertex> order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw InvalidArgument("elimination order must list every vertex exactly once");
    std::vector<char> hit(n, 0);
    for (Vertex v : order) {
        if (v < 0 || v >= n || hit[v])
            throw InvalidArgument("elimination order must list every vertex exactly once");
        hit[v] = 1;
    }
}

EliminationResult eliminate(const Graph& g, std::span<const Vertex> order) {
    check_order(g, order);
    const int n = g.vertex_count();
    EliminationResult r;
    r.position.assign(n, 0);
    for (int i = 0; i < n; ++i)
        r.position[order[i]] = i;
    std::vector<std::set<Vertex>> fill(n);
    for (auto [u, v] : g.edges()) {
        fill[u].insert(v);
        fill[v].insert(u);
    }
    r.later_neighbors.resize(n);
    for (int i = 0; i < n; ++i) {
        Vertex v = order[i];
        VertexSet later;
        for (Vertex w : fill[v])
            if (r.position[w] > i)
                later.push_back(w);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b) {
                fill[later[a]].insert(later[b]);
                fill[later[b]].insert(later[a]);
            }
        r.later_neighbors[i] = std::move(later);
    }
    return r;
}

} // namespace

int elimination_width(const Graph& g, std::span<const Vertex> order) {
    auto r = eliminate(g, order);
    int best = g.vertex_count() == 0 ? -1 : 0;
    for (const auto& later : r.later_neighbors)
        best = std::max(best, static_cast<int>(later.size()));
    return best;
}

TreeDecomposition decomposition_from_elimination_order(const Graph& g, std::span<const Vertex> order) {
    const int n = g.vertex_count();
    if (n == 0)
        return TreeDecomposition{Graph(1, {}), {VertexSet{}}};
    auto r = eliminate(g, order);
    // Node i holds order[i] and its later neighbours; its parent is the node
    // of the earliest-eliminated later neighbour.
    std::vector<VertexSet> bags(n);
    std::vector<Edge> tree_edges;
    std::vector<int> roots;
    for (int i = 0; i < n; ++i) {
        const auto& later = r.later_neighbors[i];
        bags[i] = later;
        bags[i].push_back(order[i]);
        std::sort(bags[i].begin(), bags[i].end());
        if (later.empty()) {
            roots.push_back(i);
            continue;
        }
        int parent = n;
        for (Vertex w : later)
            parent = std::min(parent, r.position[w]);
        tree_edges.emplace_back(i, parent);
    }
    for (std::size_t i = 1; i < roots.size(); ++i)
        tree_edges.emplace_back(roots[i - 1], roots[i]);
    return TreeDecomposition{Graph(n, tree_edges), std::move(bags)};
}

TreeDecomposition min_degree_decomposition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::set<Vertex>> fill(n);
    for (auto [u, v] : g.edges()) {
        fill[u].insert(v);
        fill[v].insert(u);
    }
    std::vector<char> gone(n, 0);
    std::vector<Vertex> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!gone[v] && (pick < 0 || fill[v].size() < fill[pick].size()))
                pick = v;
        order.push_back(pick);
        gone[pick] = 1;
        VertexSet nbrs(fill[pick].begin(), fill[pick].end());
        for (Vertex w : nbrs)
            fill[w].erase(pick);
        for (std::size_t a = 0; a < nbrs.size(); ++a)
            for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
                fill[nbrs[a]].insert(nbrs[b]);
                fill[nbrs[b]].insert(nbrs[a]);
            }
    }
    return decomposition_from_elimination_order(g, order);
}

void normalize(TreeDecomposition& td) {
    for (auto& bag : td.bags) {
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    }
}

} // namespace clustered
