#pragma once

#include <optional>
#include <vector>

#include "clustered/decomposition.hpp"
#include "clustered/graph.hpp"

namespace clustered {

/// A graph with a cyclically ordered boundary.
struct Society {
    Graph graph;
    VertexSet omega;
};

/// Throws InvalidArgument unless omega lists distinct vertices of the graph.
void validate_society(const Society& society);

/// Path decomposition aligned with the boundary: bag i belongs to omega[i].
struct VorticalDecomposition {
    std::vector<VertexSet> bags;
};

/// The vortical bags as a tree decomposition over the path 0 - 1 - ... - (n-1).
TreeDecomposition as_tree_decomposition(const VorticalDecomposition& vd);

struct DisjointPaths {
    int count = 0;
    std::vector<VertexSet> paths;  // each runs from `sources` to `sinks`
};

/// Maximum number of pairwise vertex-disjoint paths from `sources` to `sinks`
/// (Menger, via unit vertex capacities). A vertex in both sets is a path of
/// length zero. Stops augmenting once `stop_after` paths are found, so the
/// count is exact only when it is below that cap.
DisjointPaths max_vertex_disjoint_paths(const Graph& g, std::span<const Vertex> sources,
                                        std::span<const Vertex> sinks, int stop_after);

struct VortexWitness {
    Vertex u;
    Vertex v;
    std::vector<VertexSet> paths;  // rho+1 disjoint paths
};

struct VortexCheck {
    bool is_vortex = true;
    std::optional<VortexWitness> witness;
};

/// For every ordered pair u != v of boundary vertices, with I the boundary
/// vertices strictly between u and v in cyclic order and J those strictly
/// between v and u, checks that at most rho disjoint paths join I+u to J+v.
/// The first violating pair in (position of u, position of v) order is
/// reported. Throws InvalidArgument if the boundary has fewer than 2 vertices.
VortexCheck vortex_order_check(const Society& society, int rho);

/// Path-decomposition validity, bag i containing omega[i], bag count equal to
/// the boundary length, and adhesion at most rho.
std::vector<Violation> validate_vortical(const Society& society, const VorticalDecomposition& vd,
                                         int rho);

} // namespace clustered
