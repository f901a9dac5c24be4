#pragma once

#include "clustered/decomposition.hpp"
#include "clustered/graph.hpp"

namespace clustered {

struct TreewidthOptions {
    int max_vertices = 20;
};

struct TreewidthResult {
    int treewidth = -1;
    std::vector<Vertex> elimination_order;
    TreeDecomposition witness;
};

/// Exact treewidth by dynamic programming over vertex subsets:
///   TW(S) = min over v in S of max(TW(S \ v), Q(S \ v, v)),
/// where Q(S, v) counts vertices outside S + v reachable from v through S.
/// The optimal elimination order is recovered from the table and turned into
/// a witness decomposition of exactly that width. The empty graph has
/// treewidth -1. Throws LimitExceeded above options.max_vertices (at most 26).
TreewidthResult exact_treewidth(const Graph& g, TreewidthOptions options = {});

} // namespace clustered
