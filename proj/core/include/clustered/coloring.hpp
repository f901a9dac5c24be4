#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "clustered/bounds.hpp"
#include "clustered/decomposition.hpp"
#include "clustered/graph.hpp"

namespace clustered {

/// Total map vertex -> color in 1..k.
struct Coloring {
    int k = 0;
    std::vector<int> colors;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Throws InvalidArgument unless `c` assigns every vertex of `g` a color in 1..k.
void validate_coloring(const Graph& g, const Coloring& c);

struct MonoComponent {
    int color = 0;
    VertexSet vertices;
    int diameter = 0;
};

struct MonoReport {
    std::vector<MonoComponent> components;  // ordered by smallest vertex
    int max_size = 0;
    int max_diameter = 0;
};

/// Components of the subgraphs induced by each color class, with sizes and
/// diameters measured inside each component.
MonoReport mono_components(const Graph& g, const Coloring& c);

struct RecolorCheck {
    bool pass = false;
    BigInt budget;                  // |Z|(Δk+1)
    std::int64_t union_size = 0;    // vertices in components meeting Z
    std::int64_t max_disjoint = 0;  // largest component avoiding Z
    int max_degree = 0;
};

/// Measures the two quantities bounded after recoloring vertices of Z in a
/// coloring whose components all have at most `k_size` vertices: the union
/// of the new components meeting Z (at most |Z|(Δk+1)) and the largest new
/// component avoiding Z (at most k).
///
/// Throws InvalidArgument if `recolored` differs from `base` outside Z, if
/// some component of `base` exceeds k_size, or if either coloring is invalid.
RecolorCheck check_recolor_bound(const Graph& g, const Coloring& base, int k_size,
                                 std::span<const Vertex> z, const Coloring& recolored);

struct TwoColoringReport {
    Coloring coloring;
    int block_size = 0;
    int max_component = 0;
    int width = 0;
    int max_degree = 0;
    BigInt bound;  // 24wΔ
    bool within_bound = false;
};

/// Layered 2-coloring from a tree decomposition. The tree is rooted at node
/// 0 and every vertex takes the depth of the topmost bag containing it;
/// vertex v gets color 1 + (depth(v) / b) mod 2. The block size b ranges over
/// 1..w+1 and the smallest b with the least measured maximum component wins.
/// The report compares that maximum against 24wΔ; it is a per-instance
/// measurement, not a guarantee.
///
/// Throws InvalidArgument if the decomposition is invalid or if w or Δ is 0.
TwoColoringReport td_two_coloring(const Graph& g, const TreeDecomposition& td);

} // namespace clustered
