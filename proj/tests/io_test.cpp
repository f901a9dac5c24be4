#include "clustered/io.hpp"

#include <gtest/gtest.h>

#include "clustered/error.hpp"
#include "clustered/generators.hpp"
#include "clustered/treewidth.hpp"
#include "support.hpp"

namespace clustered {
namespace {

TEST(GraphJson, ExactBytes) {
    Graph g(3, {{2, 1}, {0, 1}});
    EXPECT_EQ(io::graph_to_json(g), "{\"edges\":[[0,1],[1,2]],\"n\":3}\n");
}

TEST(GraphJson, RoundTripOnRandomGraphs) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = testing::random_graph(1 + testing::below(rng, 30), 0.2, 8, rng);
        const auto text = io::graph_to_json(g);
        Graph back = io::graph_from_json(text);
        EXPECT_EQ(back, g);
        EXPECT_EQ(io::graph_to_json(back), text);
    }
}

TEST(GraphJson, RejectsMalformed) {
    EXPECT_THROW(io::graph_from_json("{\"n\":2"), InvalidArgument);
    EXPECT_THROW(io::graph_from_json("{\"n\":2,\"edges\":[[0,2]]}"), InvalidArgument);
    EXPECT_THROW(io::graph_from_json("{\"n\":2,\"edges\":[[0]]}"), InvalidArgument);
    EXPECT_THROW(io::graph_from_json("{\"edges\":[]}"), InvalidArgument);
}

TEST(GraphDot, Deterministic) {
    EXPECT_EQ(io::graph_to_dot(path_graph(3)), "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n");
}

TEST(DecompositionJson, NumericKeyOrderAndRoundTrip) {
    auto td = exact_treewidth(cycle_graph(12)).witness;
    const auto text = io::decomposition_to_json(td);
    EXPECT_NE(text.find("\"bags\":{\"0\":"), std::string::npos);
    EXPECT_LT(text.find("\"9\":"), text.find("\"10\":"));
    auto back = io::decomposition_from_json(text);
    EXPECT_EQ(back.tree, td.tree);
    EXPECT_EQ(back.bags, td.bags);
    EXPECT_EQ(io::decomposition_to_json(back), text);
}

TEST(DecompositionJson, ArbitraryNodeIds) {
    auto td = io::decomposition_from_json(
        R"({"nodes":[10,20],"tree_edges":[[10,20]],"bags":{"10":[0,1],"20":[1,2]}})");
    EXPECT_EQ(td.node_count(), 2);
    EXPECT_EQ(td.bags[1], (VertexSet{1, 2}));
    EXPECT_THROW(io::decomposition_from_json(R"({"nodes":[0],"tree_edges":[[0,1]],"bags":{}})"), InvalidArgument);
    EXPECT_THROW(io::decomposition_from_json(R"({"nodes":[0],"tree_edges":[],"bags":{"x":[0]}})"), InvalidArgument);
}

TEST(OtherFormats, RoundTrips) {
    Coloring c{3, {1, 2, 3, 1}};
    EXPECT_EQ(io::coloring_to_json(c), "{\"colors\":[1,2,3,1],\"k\":3}\n");
    EXPECT_EQ(io::coloring_from_json(io::coloring_to_json(c)), c);

    NecklaceSpec spec{6, 3, {{0, 2, 4}}};
    auto back = io::necklace_spec_from_json(io::necklace_spec_to_json(spec));
    EXPECT_EQ(back.n, 6);
    EXPECT_EQ(back.q, 3);
    EXPECT_EQ(back.cliques, spec.cliques);

    Society s{path_graph(3), {0, 2}};
    auto s2 = io::society_from_json(io::society_to_json(s));
    EXPECT_EQ(s2.graph, s.graph);
    EXPECT_EQ(s2.omega, s.omega);
    EXPECT_THROW(io::society_from_json(R"({"graph":{"n":2,"edges":[]},"omega":[0,0]})"), InvalidArgument);

    VorticalDecomposition vd{{{0, 1}, {1, 2}}};
    EXPECT_EQ(io::vortical_from_json(io::vortical_to_json(vd)).bags, vd.bags);
}

TEST(MonoReportJson, Shape) {
    MonoReport r{{{1, {0, 1}, 1}, {2, {2}, 0}}, 2, 1};
    EXPECT_EQ(io::mono_report_to_json(r),
              "{\"components\":[{\"color\":1,\"diameter\":1,\"size\":2,\"vertices\":[0,1]},"
              "{\"color\":2,\"diameter\":0,\"size\":1,\"vertices\":[2]}],\"max_diameter\":1,\"max_size\":2}\n");
}

} // namespace
} // namespace clustered
