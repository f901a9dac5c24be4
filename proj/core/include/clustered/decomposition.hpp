#pragma once

#include <string>
#include <vector>

#include "clustered/graph.hpp"

namespace clustered {

/// A tree over node ids 0..m-1 and one bag of host vertices per node.
/// Bags are kept sorted and duplicate-free by the builders in this library.
struct TreeDecomposition {
    Graph tree;
    std::vector<VertexSet> bags;

    int node_count() const noexcept { return static_cast<int>(bags.size()); }
};

enum class ViolationKind {
    MalformedTree,
    BagOutOfRange,
    VertexUncovered,
    EdgeUncovered,
    DisconnectedTrace,
    BoundaryNotInBag,
    AdhesionTooLarge,
};

struct Violation {
    ViolationKind kind;
    std::string message;
    VertexSet vertices;  // offending vertex, edge endpoints, or (node, node)
};

const char* to_string(ViolationKind kind);

/// Checks vertex coverage, edge coverage and connectivity of every vertex's
/// trace. An empty result means the decomposition is valid.
std::vector<Violation> validate_td(const Graph& g, const TreeDecomposition& td);

/// max |bag| - 1.
int width(const TreeDecomposition& td);

/// max |X_s ∩ X_t| over tree edges st; 0 for a single node.
int adhesion(const TreeDecomposition& td);

/// Decomposition from an elimination ordering: eliminating v creates the bag
/// {v} plus its later neighbours in the fill-in graph. Disconnected parts
/// are linked in order of their roots so the result is always a tree.
TreeDecomposition decomposition_from_elimination_order(const Graph& g, std::span<const Vertex> order);

/// Width of the decomposition induced by an elimination ordering, without
/// building it.
int elimination_width(const Graph& g, std::span<const Vertex> order);

/// Greedy min-degree elimination (ties to the lowest vertex id). Valid for
/// any size; no optimality claim.
TreeDecomposition min_degree_decomposition(const Graph& g);

/// Sorts every bag and removes duplicates.
void normalize(TreeDecomposition& td);

} // namespace clustered
