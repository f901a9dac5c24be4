#pragma once

#include <cstdint>
#include <optional>

#include "clustered/bounds.hpp"
#include "clustered/enumeration.hpp"
#include "clustered/generators.hpp"
#include "clustered/graph.hpp"

namespace clustered {

/// Parameters of the bounded-treewidth diameter gadget G_level.
struct GadgetParams {
    int level = 1;
    int d = 1;
    std::optional<int> base_path_length;  // defaults to d + 2
    std::int64_t size_cap = 5000;

    int base_length() const { return base_path_length.value_or(d + 2); }
};

/// Vertex count of G_level without building it:
///   |G_1| = base length,  |G_i| = 1 + (1 + n + ... + n^d) · n  with n = |G_{i-1}|.
BigInt predicted_gadget_size(const GadgetParams& p);

/// Recursive gadget. G_1 is a path. G_i takes the complete n-ary tree T of
/// depth d (n = |G_{i-1}|, every internal node has n children), a copy H_t of
/// G_{i-1} per node, an apex joined to all of H_root, and joins the j-th
/// vertex of H_t to all of H_{j-th child of t}.
///
/// Layout: apex is vertex 0; the copy for tree node t (breadth-first, root
/// 0, children of t are t*n+1 .. t*n+n) occupies 1 + t*n .. t*n + n, keeping
/// the vertex order of G_{i-1}. G_1 is the path 0 - 1 - ... - (L-1).
///
/// Throws LimitExceeded if the predicted size exceeds size_cap, before any
/// allocation, and InvalidArgument for nonpositive parameters.
Graph build_gadget(const GadgetParams& p);

/// Every `level`-coloring has a monochromatic component of diameter > d.
ForallResult verify_gadget(const Graph& g, int level, int d, EnumerationOptions options = {});

/// Every 2-coloring of triangular_grid(k) has a monochromatic component with
/// at least k vertices. Throws LimitExceeded if 2^(k*k-1) exceeds the budget.
ForallResult hex_check(int k, EnumerationOptions options = {});

struct LineFamily {
    Graph root;  // 2k-regular with girth >= N
    Graph line;  // its line graph, (4k-2)-regular
    int root_girth = 0;
};

/// Line graph of a 2k-regular graph of girth >= N. The root graph comes from
/// random_regular_with_girth and is returned for auditing.
LineFamily build_line_family(int k, int n_min, std::uint64_t seed, RegularGraphOptions options = {});

/// Every k-partition of V(G) has a part inducing a component with >= N vertices.
ForallResult verify_line_family(const Graph& g, int k, int n_min, EnumerationOptions options = {});

} // namespace clustered
