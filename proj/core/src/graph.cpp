#include "clustered/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "clustered/error.hpp"

namespace clustered {

namespace {

std::vector<int> bfs_distances(const Graph& g, Vertex source, const std::vector<char>& allowed) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (allowed[w] && dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

} // namespace

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 0)
        throw InvalidArgument("vertex count must be nonnegative");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has an endpoint outside 0.." + std::to_string(n - 1));
        if (u == v)
            throw InvalidArgument("self-loop at vertex " + std::to_string(u));
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adjacency_.assign(n, {});
    for (auto [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_)
        std::sort(list.begin(), list.end());
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        return false;
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

Graph make_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

int max_degree(const Graph& g) {
    int best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> result;
    std::vector<char> seen(g.vertex_count(), 0);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[s])
            continue;
        VertexSet comp{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (Vertex w : g.neighbors(comp[head])) {
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

int component_diameter(const Graph& g, std::span<const Vertex> vertices) {
    if (vertices.empty())
        throw InvalidArgument("diameter of an empty vertex set");
    std::vector<char> allowed(g.vertex_count(), 0);
    for (Vertex v : vertices) {
        if (v < 0 || v >= g.vertex_count())
            throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
        allowed[v] = 1;
    }
    int diameter = 0;
    for (Vertex s : vertices) {
        auto dist = bfs_distances(g, s, allowed);
        for (Vertex t : vertices) {
            if (dist[t] < 0)
                throw InvalidArgument("vertex set does not induce a connected subgraph");
            diameter = std::max(diameter, dist[t]);
        }
    }
    return diameter;
}

std::optional<int> girth(const Graph& g) {
    // BFS from every vertex; a non-tree edge (u,w) closes a closed walk of
    // length dist[u]+dist[w]+1, and the minimum over all roots is the girth.
    int best = std::numeric_limits<int>::max();
    const int n = g.vertex_count();
    std::vector<int> dist(n), parent(n);
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<Vertex> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            if (2 * dist[u] + 1 >= best)
                break;
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max())
        return std::nullopt;
    return best;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<int> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        Vertex v = vertices[i];
        if (v < 0 || v >= g.vertex_count())
            throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
        if (index[v] >= 0)
            throw InvalidArgument("duplicate vertex " + std::to_string(v));
        index[v] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0)
            edges.emplace_back(index[u], index[v]);
    return Graph(static_cast<int>(vertices.size()), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    const int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n)
        throw InvalidArgument("permutation size does not match vertex count");
    std::vector<char> hit(n, 0);
    for (Vertex p : perm) {
        if (p < 0 || p >= n || hit[p])
            throw InvalidArgument("not a permutation");
        hit[p] = 1;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[u], perm[v]);
    return Graph(n, edges);
}

bool is_tree(const Graph& g) {
    if (g.vertex_count() == 0)
        return false;
    return g.edge_count() + 1 == static_cast<std::size_t>(g.vertex_count()) &&
           components(g).size() == 1;
}

} // namespace clustered
