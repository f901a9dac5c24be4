#pragma once

#include "clustered/decomposition.hpp"
#include "clustered/generators.hpp"
#include "clustered/vortex.hpp"

namespace clustered {

/// Tree decomposition of necklace_graph(spec) of width at most max(q-1, 2).
///
/// Recursive construction: pick the clique M holding the lowest chain
/// position (ties: lexicographically least positions), rotate so it starts
/// the chain, cut the cycle at M's vertices into segments W_1..W_s (each
/// running from one vertex of M to the next, inclusive), decompose each
/// segment with the cliques it contains, and hang every segment's tree off a
/// central node with bag M, attached at a node holding both ends of the
/// segment. A segment without cliques is a cycle and gets the fan
/// decomposition {w0, wi, wi+1}. Throws InvalidArgument on an invalid spec.
TreeDecomposition necklace_td(const NecklaceSpec& spec);

struct CombinedDecomposition {
    Graph graph;
    TreeDecomposition td;
};

/// Glues a necklace H (chain u_0..u_{n-1}) onto a society by identifying u_i
/// with omega[i], and lifts a decomposition of H to the merged graph with
///   X''_t = X'_t  ∪  ⋃ { X_i : u_i ∈ X'_t }
/// where X_i is the i-th vortical bag. Merged vertex ids are the society's.
/// If the necklace decomposition has width at most q-1 and the vortical one
/// width w, the result has width at most q(w+1)-1.
///
/// Throws InvalidArgument when q < 3, the chain length differs from the
/// boundary length, either input decomposition is invalid, or the necklace
/// decomposition is wider than q-1.
CombinedDecomposition combine_necklace_vortex(const Graph& necklace, const TreeDecomposition& necklace_td,
                                              int q, const Society& society,
                                              const VorticalDecomposition& vd);

} // namespace clustered
