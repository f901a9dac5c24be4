#pragma once

// Random instance generators shared by the property tests.

#include <algorithm>
#include <random>
#include <vector>

#include "clustered/generators.hpp"
#include "clustered/graph.hpp"

namespace clustered::testing {

inline int below(std::mt19937_64& rng, int bound) {
    return static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(bound)));
}

inline Graph random_tree(int n, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(v, below(rng, v));
    return Graph(n, edges);
}

/// Random tree whose maximum degree stays at or below `cap` (cap >= 2).
inline Graph random_tree_capped(int n, int cap, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    std::vector<int> degree(n, 0);
    for (int v = 1; v < n; ++v) {
        std::vector<int> open;
        for (int u = 0; u < v; ++u)
            if (degree[u] < cap)
                open.push_back(u);
        const int parent = open[below(rng, static_cast<int>(open.size()))];
        ++degree[parent];
        ++degree[v];
        edges.emplace_back(v, parent);
    }
    return Graph(n, edges);
}

/// G(n, p) filtered to maximum degree at most `cap`.
inline Graph random_graph(int n, double p, int cap, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    std::vector<int> degree(n, 0);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (degree[u] < cap && degree[v] < cap && coin(rng)) {
                ++degree[u];
                ++degree[v];
                edges.emplace_back(u, v);
            }
    return Graph(n, edges);
}

/// Random 2-connected outerplanar graph: a cycle with non-crossing chords,
/// built as a 2-necklace, keeping every degree at most `cap`.
inline NecklaceSpec random_outerplanar_spec(int n, int cap, std::mt19937_64& rng) {
    NecklaceSpec spec = random_necklace_spec(n, 2, rng);
    std::vector<int> degree(n, 2);
    std::vector<VertexSet> kept;
    for (const auto& c : spec.cliques) {
        const int a = c[0], b = c[1];
        const bool cycle_edge = (a + 1) % n == b || (b + 1) % n == a;
        if (cycle_edge) {
            kept.push_back(c);
            continue;
        }
        if (degree[a] < cap && degree[b] < cap) {
            ++degree[a];
            ++degree[b];
            kept.push_back(c);
        }
    }
    spec.cliques = std::move(kept);
    return spec;
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<Vertex> perm(n);
    for (int i = 0; i < n; ++i)
        perm[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[below(rng, i + 1)]);
    return perm;
}

} // namespace clustered::testing
