#include "clustered/necklace.hpp"

#include <gtest/gtest.h>

#include "clustered/error.hpp"
#include "clustered/treewidth.hpp"
#include "support.hpp"

namespace clustered {
namespace {

int necklace_cap(int q) { return std::max(q - 1, 2); }

TEST(NecklaceTd, PlainCycle) {
    NecklaceSpec spec{4, 2, {}};
    auto td = necklace_td(spec);
    EXPECT_TRUE(validate_td(necklace_graph(spec), td).empty());
    EXPECT_LE(width(td), 2);
}

TEST(NecklaceTd, HexagonWithTriangle) {
    NecklaceSpec spec{6, 3, {{0, 2, 4}}};
    Graph g = necklace_graph(spec);
    auto td = necklace_td(spec);
    EXPECT_TRUE(validate_td(g, td).empty());
    EXPECT_LE(width(td), 2);
    EXPECT_LE(exact_treewidth(g).treewidth, width(td));
}

TEST(NecklaceTd, TwoFourCliques) {
    // {0,2,4,6} and {6,7,8,9} touch at 6 and do not cross.
    NecklaceSpec spec{10, 4, {{0, 2, 4, 6}, {6, 7, 8, 9}}};
    Graph g = necklace_graph(spec);
    auto td = necklace_td(spec);
    EXPECT_TRUE(validate_td(g, td).empty());
    EXPECT_LE(width(td), 3);
    EXPECT_LE(exact_treewidth(g).treewidth, 3);
}

TEST(NecklaceTd, TinyChains) {
    for (int n = 1; n <= 3; ++n) {
        NecklaceSpec spec{n, 2, {}};
        auto td = necklace_td(spec);
        EXPECT_TRUE(validate_td(necklace_graph(spec), td).empty()) << n;
    }
}

TEST(NecklaceTd, NestedCliquesUseCentralBag) {
    // Outer triangle, and a 4-clique nested inside the segment 2..6.
    NecklaceSpec spec{12, 4, {{0, 2, 6}, {2, 3, 4, 5}, {6, 8, 10, 11}}};
    auto td = necklace_td(spec);
    EXPECT_TRUE(validate_td(necklace_graph(spec), td).empty());
    EXPECT_LE(width(td), 3);
    // The first node is the hub for the clique holding chain position 0.
    EXPECT_EQ(td.bags[0], (VertexSet{0, 2, 6}));
}

TEST(NecklaceTd, RejectsInvalidSpec) {
    EXPECT_THROW(necklace_td({5, 2, {{0, 2}, {1, 3}}}), InvalidArgument);
}

TEST(NecklaceTd, PropertyWidthBound) {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 400; ++trial) {
        const int q = 2 + testing::below(rng, 4);
        const int n = 3 + testing::below(rng, 38);
        NecklaceSpec spec = random_necklace_spec(n, q, rng);
        Graph g = necklace_graph(spec);
        auto td = necklace_td(spec);
        ASSERT_TRUE(validate_td(g, td).empty()) << "trial " << trial;
        EXPECT_LE(width(td), necklace_cap(q)) << "trial " << trial;
        if (n <= 15)
            EXPECT_LE(exact_treewidth(g).treewidth, width(td));
    }
}

// Vortical decomposition whose i-th bag is {omega_i} plus a window of extra
// vertices; extras are shared by consecutive bags so traces stay intervals.
struct VortexFixture {
    Society society;
    VorticalDecomposition vd;
};

VortexFixture banded_vortex(int n, int extra_width, std::mt19937_64& rng) {
    // Boundary vertices 0..n-1; interior vertices n..n+n-1, one per bag slot.
    const int interior = extra_width > 0 ? n : 0;
    std::vector<VertexSet> bags(n);
    for (int i = 0; i < n; ++i) {
        bags[i].push_back(i);
        for (int j = 0; j < extra_width; ++j)
            if (i - j >= 0)
                bags[i].push_back(n + i - j);
    }
    std::vector<Edge> edges;
    for (const auto& bag : bags)
        for (std::size_t a = 0; a < bag.size(); ++a)
            for (std::size_t b = a + 1; b < bag.size(); ++b)
                if (testing::below(rng, 2) == 0)
                    edges.emplace_back(bag[a], bag[b]);
    VertexSet omega(n);
    for (int i = 0; i < n; ++i)
        omega[i] = i;
    return {Society{Graph(n + interior, edges), omega}, VorticalDecomposition{bags}};
}

TEST(Combine, SingletonBagsLeaveWidthUnchanged) {
    NecklaceSpec spec{6, 3, {{0, 2, 4}}};
    Graph h = necklace_graph(spec);
    auto htd = necklace_td(spec);
    Society s{Graph(6, {}), {0, 1, 2, 3, 4, 5}};
    VorticalDecomposition vd{{{0}, {1}, {2}, {3}, {4}, {5}}};
    auto out = combine_necklace_vortex(h, htd, 3, s, vd);
    EXPECT_EQ(out.graph, h);
    EXPECT_EQ(out.td.bags, htd.bags);
    EXPECT_EQ(width(out.td), width(htd));
}

TEST(Combine, WidthOneVortexOnHexagon) {
    std::mt19937_64 rng(7);
    NecklaceSpec spec{6, 3, {{0, 2, 4}}};
    auto fx = banded_vortex(6, 1, rng);
    ASSERT_EQ(width(as_tree_decomposition(fx.vd)), 1);
    auto out = combine_necklace_vortex(necklace_graph(spec), necklace_td(spec), 3, fx.society, fx.vd);
    EXPECT_EQ(out.graph.vertex_count(), 12);
    EXPECT_TRUE(validate_td(out.graph, out.td).empty());
    EXPECT_LE(width(out.td), 5);
    EXPECT_LE(exact_treewidth(out.graph).treewidth, width(out.td));
}

TEST(Combine, Errors) {
    NecklaceSpec spec5{5, 3, {}};
    Society s4{Graph(4, {}), {0, 1, 2, 3}};
    VorticalDecomposition vd4{{{0}, {1}, {2}, {3}}};
    EXPECT_THROW(combine_necklace_vortex(necklace_graph(spec5), necklace_td(spec5), 3, s4, vd4), InvalidArgument);

    NecklaceSpec spec4{4, 2, {}};
    EXPECT_THROW(combine_necklace_vortex(necklace_graph(spec4), necklace_td(spec4), 2, s4, vd4), InvalidArgument);

    VorticalDecomposition broken{{{1}, {0}, {2}, {3}}};
    Society s4e{Graph(4, {{0, 3}}), {0, 1, 2, 3}};
    EXPECT_THROW(combine_necklace_vortex(necklace_graph(spec4), necklace_td(spec4), 3, s4e, broken), InvalidArgument);
}

TEST(Combine, PropertyWidthBound) {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 150; ++trial) {
        const int q = 3 + testing::below(rng, 3);
        const int n = 3 + testing::below(rng, 20);
        const int w = testing::below(rng, 3);
        NecklaceSpec spec = random_necklace_spec(n, q, rng);
        auto fx = banded_vortex(n, w, rng);
        const int vortex_width = width(as_tree_decomposition(fx.vd));
        auto out = combine_necklace_vortex(necklace_graph(spec), necklace_td(spec), q, fx.society, fx.vd);
        ASSERT_TRUE(validate_td(out.graph, out.td).empty()) << "trial " << trial;
        EXPECT_LE(width(out.td), q * (vortex_width + 1) - 1) << "trial " << trial;
    }
}

} // namespace
} // namespace clustered
