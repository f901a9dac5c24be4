#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "clustered/graph.hpp"

namespace clustered {

/// Path v0 - v1 - ... - v(n-1).
Graph path_graph(int n);

/// Cycle on n >= 3 vertices, edges i - (i+1 mod n).
Graph cycle_graph(int n);

Graph complete_graph(int n);

/// Petersen graph: outer 5-cycle 0..4, spokes i - i+5, inner pentagram 5+i - 5+(i+2 mod 5).
Graph petersen_graph();

/// Line graph. Vertex i of the result is the i-th edge of g in canonical
/// (sorted) order. Throws InvalidArgument on an edgeless input.
Graph line_graph(const Graph& g);

/// k x k triangular grid. Vertex (i, j), 0 <= i, j < k, has index i*k + j.
/// Edges: (i,j)-(i+1,j), (i,j)-(i,j+1) and the diagonal (i,j)-(i+1,j+1).
Graph triangular_grid(int k);

/// Chain v0..v(n-1) closed into a cycle, with complete graphs on each clique.
/// Vertex v_i of the chain is vertex i.
struct NecklaceSpec {
    int n = 0;
    int q = 0;
    std::vector<VertexSet> cliques;
};

/// Throws InvalidArgument if a clique is too large, out of range, has a
/// repeated vertex, shares an edge with another clique, or two cliques cross.
void validate_necklace_spec(const NecklaceSpec& spec);

/// The necklace as a simple graph (parallel chain/clique edges collapsed).
Graph necklace_graph(const NecklaceSpec& spec);

/// Random valid necklace spec: cliques are drawn as non-crossing, pairwise
/// edge-disjoint subsets of size 2..q by recursive interval splitting.
NecklaceSpec random_necklace_spec(int n, int q, std::mt19937_64& rng);

struct RegularGraphOptions {
    int max_attempts = 2000;
    int attempts_per_size = 40;
};

/// A `degree`-regular simple graph with girth >= girth_min.
///
/// Small cases come from a fixed table (K_{d+1}, Petersen, cycles). Otherwise
/// points are paired at random under the constraint that no pairing creates
/// a loop, a parallel edge or a cycle shorter than girth_min. At a dead end
/// an existing edge is switched onto the stuck vertex; when that keeps
/// failing the attempt restarts, and the vertex count grows every
/// `attempts_per_size` failures. Deterministic per (arguments, seed).
/// Throws GenerationFailed after max_attempts.
Graph random_regular_with_girth(int degree, int girth_min, std::uint64_t seed,
                                RegularGraphOptions options = {});

/// Uniform integer in [0, bound) drawn by rejection from a 64-bit engine.
/// Unlike std::uniform_int_distribution the sequence is fixed across
/// standard library implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

} // namespace clustered
