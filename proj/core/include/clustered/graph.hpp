#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace clustered {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable once built. Edges are stored canonically (u < v, sorted), so two
/// graphs compare equal iff they have the same vertex count and edge set,
/// independent of the order edges were supplied in.
class Graph {
public:
    Graph() = default;

    /// Throws InvalidArgument on a self-loop or an endpoint >= n.
    /// Duplicate pairs, in either orientation, are collapsed.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    int vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
    bool has_edge(Vertex u, Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) noexcept {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

Graph make_graph(int n, std::span<const Edge> edges);

int max_degree(const Graph& g);

/// Connected components, each sorted ascending, ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g);

/// Diameter of the subgraph induced by `vertices`.
/// Throws InvalidArgument if that subgraph is empty or disconnected.
int component_diameter(const Graph& g, std::span<const Vertex> vertices);

/// Length of a shortest cycle; std::nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Induced subgraph; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Image of g under the vertex map v -> perm[v]. perm must be a permutation.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

bool is_tree(const Graph& g);

} // namespace clustered
