#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "clustered/bounds.hpp"
#include "clustered/coloring.hpp"
#include "clustered/graph.hpp"

namespace clustered {

/// Colors for a subset of vertices; 0 marks a free vertex.
struct PartialColoring {
    int k = 0;
    std::vector<int> colors;
};

struct ExactOptions {
    int max_vertices = 16;  // hard ceiling 64
    int threads = 1;
};

struct MinMaxResult {
    int optimum = 0;  // N*: least achievable largest monochromatic component
    Coloring witness;
};

/// Minimum over all k-colorings extending `precolored` of the largest
/// monochromatic component.
///
/// Branch and bound over the free vertices in BFS order from the precolored
/// set, bounding by the largest component formed so far and treating colors
/// unused by the precoloring as interchangeable. A second pass in vertex
/// order returns the lexicographically least coloring attaining the optimum,
/// so the witness does not depend on the thread count.
///
/// Throws LimitExceeded above options.max_vertices and InvalidArgument for a
/// precoloring of the wrong size or with colors outside 1..k.
MinMaxResult exact_min_max_mono(const Graph& g, int k, const std::optional<PartialColoring>& precolored = {},
                                ExactOptions options = {});

struct ComponentPredicate {
    enum class Kind { MinSize, MinDiameter };
    Kind kind = Kind::MinSize;
    int value = 1;

    /// Some component with at least `n` vertices.
    static ComponentPredicate size_at_least(int n) { return {Kind::MinSize, n}; }
    /// Some component with diameter strictly greater than `d`.
    static ComponentPredicate diameter_above(int d) { return {Kind::MinDiameter, d}; }
};

struct EnumerationOptions {
    std::uint64_t budget = std::uint64_t{1} << 26;
    int threads = 1;
};

struct ForallResult {
    bool holds = true;
    std::optional<Coloring> counterexample;  // lexicographically least canonical one
    BigInt canonical_total;                  // colorings up to color permutation
    std::uint64_t leaves_examined = 0;
};

/// Number of k-colorings of n vertices up to renaming colors:
/// S(n,1) + ... + S(n,k) with S the Stirling numbers of the second kind.
BigInt canonical_coloring_count(int n, int k);

/// Decides whether every k-coloring of g has a monochromatic component
/// satisfying `predicate`. Colorings are enumerated in canonical form (the
/// first occurrences of colors appear in increasing order), which loses
/// nothing because component structure is invariant under renaming colors.
/// Size predicates prune any branch that already contains a large enough
/// component. Work is split into fixed prefix tasks; the reported
/// counterexample and leaf count are identical for every thread count.
///
/// Throws LimitExceeded if the canonical count exceeds options.budget or the
/// graph has more than 64 vertices.
ForallResult forall_colorings_check(const Graph& g, int k, ComponentPredicate predicate,
                                    EnumerationOptions options = {});

} // namespace clustered
