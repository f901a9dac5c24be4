#include "clustered/coloring.hpp"

#include <gtest/gtest.h>

#include "clustered/error.hpp"
#include "clustered/generators.hpp"
#include "clustered/necklace.hpp"
#include "support.hpp"

namespace clustered {
namespace {

Coloring random_coloring(int n, int k, std::mt19937_64& rng) {
    Coloring c{k, std::vector<int>(n)};
    for (auto& x : c.colors)
        x = 1 + testing::below(rng, k);
    return c;
}

TEST(MonoComponents, SingleColor) {
    Graph g = cycle_graph(7);
    auto r = mono_components(g, Coloring{1, std::vector<int>(7, 1)});
    ASSERT_EQ(r.components.size(), 1u);
    EXPECT_EQ(r.max_size, 7);
    EXPECT_EQ(r.max_diameter, 3);
}

TEST(MonoComponents, ProperColoringOfEvenCycle) {
    Coloring c{2, {1, 2, 1, 2, 1, 2}};
    auto r = mono_components(cycle_graph(6), c);
    EXPECT_EQ(r.components.size(), 6u);
    EXPECT_EQ(r.max_size, 1);
}

TEST(MonoComponents, PathSplitByColors) {
    auto r = mono_components(path_graph(3), Coloring{2, {1, 2, 1}});
    EXPECT_EQ(r.components.size(), 3u);
    EXPECT_EQ(r.max_size, 1);
    EXPECT_EQ(r.components[1].color, 2);
}

TEST(MonoComponents, RejectsPartialOrOutOfRange) {
    EXPECT_THROW(mono_components(path_graph(3), Coloring{2, {1, 2}}), InvalidArgument);
    EXPECT_THROW(mono_components(path_graph(3), Coloring{2, {1, 3, 1}}), InvalidArgument);
    EXPECT_THROW(mono_components(path_graph(3), Coloring{2, {0, 1, 1}}), InvalidArgument);
}

TEST(MonoComponents, PartitionAndConnectivityProperty) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + testing::below(rng, 40);
        Graph g = testing::random_graph(n, 0.15, 5, rng);
        Coloring c = random_coloring(n, 1 + testing::below(rng, 3), rng);
        auto r = mono_components(g, c);
        std::vector<int> hits(n, 0);
        for (const auto& comp : r.components) {
            for (Vertex v : comp.vertices) {
                ++hits[v];
                EXPECT_EQ(c.colors[v], comp.color);
            }
            EXPECT_EQ(component_diameter(g, comp.vertices), comp.diameter);
            // Maximality: no neighbour outside the component has the same color.
            for (Vertex v : comp.vertices)
                for (Vertex w : g.neighbors(v))
                    if (c.colors[w] == comp.color)
                        EXPECT_TRUE(std::binary_search(comp.vertices.begin(), comp.vertices.end(), w));
        }
        for (int h : hits)
            EXPECT_EQ(h, 1);
    }
}

TEST(RecolorBound, EmptyZ) {
    Graph g = cycle_graph(6);
    Coloring c{2, {1, 2, 1, 2, 1, 2}};
    auto r = check_recolor_bound(g, c, 1, {}, c);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.budget, 0);
    EXPECT_EQ(r.union_size, 0);
    EXPECT_EQ(r.max_disjoint, 1);
}

TEST(RecolorBound, BudgetFormula) {
    // Δ = 3 (Petersen), k = 4, |Z| = 2: 2·(3·4 + 1) = 26.
    Graph g = petersen_graph();
    Coloring c{2, {1, 1, 2, 2, 1, 2, 2, 1, 1, 2}};
    ASSERT_LE(mono_components(g, c).max_size, 4);
    Coloring d = c;
    d.colors[0] = 2;
    d.colors[5] = 1;
    auto r = check_recolor_bound(g, c, 4, VertexSet{0, 5}, d);
    EXPECT_EQ(r.max_degree, 3);
    EXPECT_EQ(r.budget, 26);
    EXPECT_TRUE(r.pass);
}

TEST(RecolorBound, PreconditionsAreErrors) {
    Graph g = path_graph(4);
    Coloring base{2, {1, 2, 1, 2}};
    Coloring changed_outside{2, {2, 2, 1, 2}};
    EXPECT_THROW(check_recolor_bound(g, base, 1, VertexSet{3}, changed_outside), InvalidArgument);
    Coloring big{2, {1, 1, 1, 2}};
    EXPECT_THROW(check_recolor_bound(g, big, 2, VertexSet{}, big), InvalidArgument);
    EXPECT_THROW(check_recolor_bound(g, base, 1, VertexSet{9}, base), InvalidArgument);
}

TEST(RecolorBound, HoldsOnRandomInstances) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + testing::below(rng, 39);
        Graph g = testing::random_graph(n, 0.2, 1 + testing::below(rng, 5), rng);
        const int k = 2 + testing::below(rng, 2);
        Coloring base = random_coloring(n, k, rng);
        const int k_size = mono_components(g, base).max_size;
        auto perm = testing::random_permutation(n, rng);
        VertexSet z(perm.begin(), perm.begin() + std::min(n, testing::below(rng, 6)));
        Coloring recolored = base;
        for (Vertex v : z)
            recolored.colors[v] = 1 + testing::below(rng, k);
        auto r = check_recolor_bound(g, base, k_size, z, recolored);
        EXPECT_TRUE(r.pass) << "trial " << trial;
    }
}

TEST(TwoColoring, PathWithWidthOneDecomposition) {
    Graph p = path_graph(30);
    std::vector<VertexSet> bags;
    std::vector<Edge> tree;
    for (int i = 0; i + 1 < 30; ++i) {
        bags.push_back({i, i + 1});
        if (i > 0)
            tree.emplace_back(i - 1, i);
    }
    auto r = td_two_coloring(p, TreeDecomposition{Graph(29, tree), bags});
    EXPECT_EQ(r.width, 1);
    EXPECT_EQ(r.max_degree, 2);
    EXPECT_EQ(r.bound, 48);
    EXPECT_TRUE(r.within_bound);
    // Both ends of the root bag share depth 0, so some edge is monochromatic.
    EXPECT_EQ(r.max_component, 2);
    EXPECT_NO_THROW(validate_coloring(p, r.coloring));
}

TEST(TwoColoring, CycleTwenty) {
    NecklaceSpec spec{20, 2, {}};
    auto r = td_two_coloring(cycle_graph(20), necklace_td(spec));
    EXPECT_EQ(r.bound, 96);
    EXPECT_TRUE(r.within_bound);
    EXPECT_EQ(r.coloring.k, 2);
}

TEST(TwoColoring, RandomTreesAndOuterplanar) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + testing::below(rng, 198);
        Graph t = testing::random_tree_capped(n, 4, rng);
        auto rt = td_two_coloring(t, min_degree_decomposition(t));
        EXPECT_TRUE(rt.within_bound);
        NecklaceSpec spec = testing::random_outerplanar_spec(n, 4, rng);
        Graph o = necklace_graph(spec);
        ASSERT_LE(max_degree(o), 4);
        auto ro = td_two_coloring(o, necklace_td(spec));
        EXPECT_TRUE(ro.within_bound);
        EXPECT_NO_THROW(validate_coloring(o, ro.coloring));
    }
}

TEST(TwoColoring, Errors) {
    TreeDecomposition bad{Graph(1, {}), {{0, 1}}};
    EXPECT_THROW(td_two_coloring(path_graph(3), bad), InvalidArgument);
    TreeDecomposition single{Graph(1, {}), {{0}}};
    EXPECT_THROW(td_two_coloring(Graph(1, {}), single), InvalidArgument);
}

} // namespace
} // namespace clustered
