#include "clustered/vortex.hpp"

#include <functional>

#include <gtest/gtest.h>

#include "clustered/error.hpp"
#include "clustered/generators.hpp"
#include "support.hpp"

namespace clustered {
namespace {

// Independent oracle: list every simple path from a source to a sink that
// touches the sink set only at its last vertex, then find the largest family
// of pairwise vertex-disjoint ones by exhaustive search.
int disjoint_paths_oracle(const Graph& g, const VertexSet& sources, const VertexSet& sinks) {
    const int n = g.vertex_count();
    std::vector<char> is_sink(n, 0);
    for (Vertex t : sinks)
        is_sink[t] = 1;
    std::vector<std::uint32_t> paths;
    std::function<void(Vertex, std::uint32_t)> extend = [&](Vertex v, std::uint32_t used) {
        if (is_sink[v]) {
            paths.push_back(used);
            return;
        }
        for (Vertex w : g.neighbors(v))
            if (!(used >> w & 1u))
                extend(w, used | (1u << w));
    };
    for (Vertex s : sources)
        extend(s, 1u << s);
    int best = 0;
    std::function<void(std::size_t, std::uint32_t, int)> choose = [&](std::size_t i, std::uint32_t used, int count) {
        best = std::max(best, count);
        for (std::size_t j = i; j < paths.size(); ++j)
            if (!(paths[j] & used))
                choose(j + 1, used | paths[j], count + 1);
    };
    choose(0, 0, 0);
    return best;
}

bool paths_are_valid(const Graph& g, const std::vector<VertexSet>& paths, const VertexSet& sources,
                     const VertexSet& sinks) {
    std::vector<char> used(g.vertex_count(), 0);
    auto in = [](const VertexSet& s, Vertex v) { return std::find(s.begin(), s.end(), v) != s.end(); };
    for (const auto& p : paths) {
        if (p.empty() || !in(sources, p.front()) || !in(sinks, p.back()))
            return false;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (used[p[i]])
                return false;
            used[p[i]] = 1;
            if (i > 0 && !g.has_edge(p[i - 1], p[i]))
                return false;
        }
    }
    return true;
}

TEST(DisjointPaths, MatchesExhaustiveOracle) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + testing::below(rng, 8);
        Graph g = testing::random_graph(n, 0.4, n, rng);
        VertexSet sources, sinks;
        for (int v = 0; v < n; ++v) {
            int r = testing::below(rng, 4);
            if (r == 0)
                sources.push_back(v);
            else if (r == 1)
                sinks.push_back(v);
        }
        auto flow = max_vertex_disjoint_paths(g, sources, sinks, n + 1);
        EXPECT_EQ(flow.count, disjoint_paths_oracle(g, sources, sinks)) << "trial " << trial;
        EXPECT_EQ(static_cast<int>(flow.paths.size()), flow.count);
        EXPECT_TRUE(paths_are_valid(g, flow.paths, sources, sinks)) << "trial " << trial;
    }
}

TEST(DisjointPaths, SharedVertexCountsOnce) {
    // 1 is both a source and a sink; 0 - 2 goes around it.
    Graph g(3, {{0, 1}, {1, 2}, {0, 2}});
    auto flow = max_vertex_disjoint_paths(g, VertexSet{0, 1}, VertexSet{1, 2}, 10);
    EXPECT_EQ(flow.count, 2);
    EXPECT_TRUE(paths_are_valid(g, flow.paths, {0, 1}, {1, 2}));
}

TEST(VortexCheck, PathWithEndsOnBoundary) {
    Society s{path_graph(3), {0, 2}};
    EXPECT_TRUE(vortex_order_check(s, 1).is_vortex);
    auto r = vortex_order_check(s, 0);
    EXPECT_FALSE(r.is_vortex);
    ASSERT_TRUE(r.witness.has_value());
    ASSERT_EQ(r.witness->paths.size(), 1u);
    EXPECT_EQ(r.witness->paths[0], (VertexSet{0, 1, 2}));
}

TEST(VortexCheck, CompleteFourOnBoundary) {
    Society s{complete_graph(4), {0, 1, 2, 3}};
    auto r = vortex_order_check(s, 1);
    EXPECT_FALSE(r.is_vortex);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->paths.size(), 2u);
    EXPECT_TRUE(vortex_order_check(s, 2).is_vortex);
}

TEST(VortexCheck, Errors) {
    EXPECT_THROW(vortex_order_check(Society{path_graph(3), {1}}, 1), InvalidArgument);
    EXPECT_THROW(vortex_order_check(Society{path_graph(3), {1, 1}}, 1), InvalidArgument);
    EXPECT_THROW(vortex_order_check(Society{path_graph(3), {0, 7}}, 1), InvalidArgument);
}

TEST(VortexCheck, MonotoneInRho) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + testing::below(rng, 8);
        Graph g = testing::random_graph(n, 0.35, n, rng);
        auto perm = testing::random_permutation(n, rng);
        VertexSet omega(perm.begin(), perm.begin() + 2 + testing::below(rng, n - 1));
        Society s{g, omega};
        bool previous = false;
        for (int rho = 0; rho <= 4; ++rho) {
            const bool now = vortex_order_check(s, rho).is_vortex;
            if (previous)
                EXPECT_TRUE(now) << "trial " << trial << " rho " << rho;
            previous = now;
        }
    }
}

TEST(ValidateVortical, Examples) {
    Society edgeless{Graph(3, {}), {0, 1, 2}};
    EXPECT_TRUE(validate_vortical(edgeless, {{{0}, {1}, {2}}}, 0).empty());

    Society path{path_graph(3), {0, 2}};
    VorticalDecomposition vd{{{0, 1}, {1, 2}}};
    EXPECT_TRUE(validate_vortical(path, vd, 1).empty());
    EXPECT_EQ(adhesion(as_tree_decomposition(vd)), 1);

    auto swapped = validate_vortical(path, {{{1, 2}, {0, 1}}}, 1);
    ASSERT_FALSE(swapped.empty());
    EXPECT_EQ(swapped[0].kind, ViolationKind::BoundaryNotInBag);

    auto tight = validate_vortical(path, vd, 0);
    ASSERT_EQ(tight.size(), 1u);
    EXPECT_EQ(tight[0].kind, ViolationKind::AdhesionTooLarge);

    auto count = validate_vortical(path, {{{0, 1, 2}}}, 3);
    ASSERT_EQ(count.size(), 1u);
    EXPECT_EQ(count[0].kind, ViolationKind::MalformedTree);
}

} // namespace
} // namespace clustered
