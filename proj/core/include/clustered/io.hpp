#pragma once

#include <string>
#include <string_view>

#include "clustered/coloring.hpp"
#include "clustered/decomposition.hpp"
#include "clustered/enumeration.hpp"
#include "clustered/generators.hpp"
#include "clustered/graph.hpp"
#include "clustered/vortex.hpp"

// Text formats. Every writer emits compact JSON followed by a newline and is
// byte-deterministic for a given value; every reader throws InvalidArgument
// on malformed input.
namespace clustered::io {

/// {"n": 3, "edges": [[0,1],[1,2]]}, pairs ascending, list sorted.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(std::string_view text);

/// Undirected DOT, one edge per line in canonical order.
std::string graph_to_dot(const Graph& g, std::string_view name = "G");

/// {"nodes": [0,1], "tree_edges": [[0,1]], "bags": {"0": [0,1], "1": [1,2]}}.
std::string decomposition_to_json(const TreeDecomposition& td);
TreeDecomposition decomposition_from_json(std::string_view text);

/// {"k": 2, "colors": [1,2,1]}.
std::string coloring_to_json(const Coloring& c);
Coloring coloring_from_json(std::string_view text);

/// Same shape as a coloring; 0 marks a free vertex.
PartialColoring partial_coloring_from_json(std::string_view text);

/// {"components": [{"color": 1, "vertices": [...], "size": s, "diameter": d}],
///  "max_size": s, "max_diameter": d}.
std::string mono_report_to_json(const MonoReport& report);

/// {"n": 6, "q": 3, "cliques": [[0,2,4]]}.
std::string necklace_spec_to_json(const NecklaceSpec& spec);
NecklaceSpec necklace_spec_from_json(std::string_view text);

/// {"graph": {graph}, "omega": [...]}.
std::string society_to_json(const Society& s);
Society society_from_json(std::string_view text);

/// {"bags": [[...], ...]}.
std::string vortical_to_json(const VorticalDecomposition& vd);
VorticalDecomposition vortical_from_json(std::string_view text);

} // namespace clustered::io
