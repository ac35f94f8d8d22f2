#include <gtest/gtest.h>

#include "cyclepair/corpus.hpp"
#include "cyclepair/isomorphism.hpp"
#include "cyclepair/multigraph.hpp"
#include "cyclepair/sampling.hpp"

#include "support.hpp"

using namespace cyclepair;

TEST(Multigraph, ValidateRejectsBadEndpoints) {
    EXPECT_THROW(validate(Multigraph(2, {{0, 2}})), Error);
    EXPECT_THROW(validate(Multigraph(0, {})), Error);
    EXPECT_THROW(validate(PointedGraph{cycle_graph(3), 3}), Error);
    EXPECT_NO_THROW(validate(PointedGraph{cycle_graph(3), 2}));
}

TEST(Multigraph, PreconditionKinds) {
    try {
        require_connected(Multigraph(2, {{0, 0}, {1, 1}}));
        FAIL() << "expected NotConnected";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotConnected);
    }
    try {
        require_bridgeless(Multigraph(2, {{0, 0}, {0, 1}, {1, 1}}));
        FAIL() << "expected HasBridge";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::HasBridge);
        EXPECT_NE(std::string(e.what()).find("edge 1"), std::string::npos);
    }
}

TEST(Multigraph, BridgesMatchDeletionOracle) {
    Rng rng(11);
    for (int t = 0; t < 300; ++t) {
        int n = uniform(rng, 1, 5);
        Multigraph g(n, {});
        int m = uniform(rng, n - 1, n + 3);
        for (int e = 0; e < m; ++e) g.edges.push_back({uniform(rng, 0, n - 1), uniform(rng, 0, n - 1)});
        if (!is_connected(g)) continue;
        EXPECT_EQ(bridges(g), oracle::brute_bridges(g));
    }
}

TEST(Multigraph, CycleGraphsAndJoins) {
    EXPECT_TRUE(is_cycle_graph(cycle_graph(1)));
    EXPECT_TRUE(is_cycle_graph(cycle_graph(5)));
    EXPECT_FALSE(is_cycle_graph(theta_graph()));
    auto j = vertex_join(cycle_graph(3), cycle_graph(4), 0, 0);
    EXPECT_EQ(j.vertex_count, 6);
    EXPECT_EQ(j.edge_count(), 7);
    EXPECT_TRUE(is_bridgeless(j));
    EXPECT_THROW(vertex_join(theta_graph(), cycle_graph(2), 0, 0), Error);
}

TEST(Multigraph, ContractKeepsChosenEdges) {
    auto g = theta_graph(3);
    auto r = contract(g, edge_mask(g, {0}));
    EXPECT_EQ(r.graph.vertex_count, 1);
    EXPECT_EQ(r.graph.edge_count(), 1);
    EXPECT_EQ(r.edge_map[0], 0);
    EXPECT_EQ(r.edge_map[1], -1);
    EXPECT_TRUE(r.graph.edges[0].is_loop());
}

TEST(Multigraph, CycleSubgraphs) {
    auto g = vertex_join(cycle_graph(2), cycle_graph(2), 0, 0);
    EXPECT_TRUE(is_cycle_subgraph(g, {0, 1}));
    EXPECT_FALSE(is_cycle_subgraph(g, {0, 1, 2, 3}));
    EXPECT_FALSE(is_cycle_subgraph(g, {0, 2}));
}

TEST(Isomorphism, RelabelingIsFound) {
    Rng rng(5);
    for (const auto& pg : oracle::pointed_corpus()) {
        auto r = random_relabeling(pg, rng);
        auto iso = isomorphic(pg, r.graph);
        ASSERT_TRUE(iso.has_value());
        EXPECT_EQ(iso->vertex_map[pg.basepoint], r.graph.basepoint);
    }
}

TEST(Isomorphism, PointedAgreesWithPermutationOracle) {
    auto pts = oracle::pointed_corpus();
    for (std::size_t i = 0; i < pts.size(); i += 3)
        for (std::size_t j = 0; j < pts.size(); j += 2)
            EXPECT_EQ(isomorphic(pts[i], pts[j]).has_value(), oracle::brute_pointed_isomorphic(pts[i], pts[j])) << i << " " << j;
}

TEST(Corpus, CountsByEdgeNumber) {
    const auto& graphs = oracle::corpus();
    std::vector<int> by_m(6, 0);
    for (const auto& g : graphs) ++by_m.at(g.edge_count());
    EXPECT_EQ(by_m, (std::vector<int>{1, 1, 2, 4, 9, 21}));
}

TEST(Corpus, MembersAreDistinctAndBridgeless) {
    const auto& graphs = oracle::corpus();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        EXPECT_TRUE(is_connected(graphs[i]));
        EXPECT_TRUE(oracle::brute_bridges(graphs[i]).empty());
        for (std::size_t j = i + 1; j < graphs.size(); ++j) EXPECT_FALSE(isomorphic(graphs[i], graphs[j])) << i << " " << j;
    }
}

TEST(Corpus, RandomSmallGraphsAreCovered) {
    Rng rng(3);
    const auto& graphs = oracle::corpus();
    for (int t = 0; t < 200; ++t) {
        int n = uniform(rng, 1, 4);
        int m = uniform(rng, n, 5);
        auto g = random_bridgeless_graph(n, m, rng);
        bool found = false;
        for (const auto& h : graphs) found = found || isomorphic(g, h).has_value();
        EXPECT_TRUE(found);
    }
}

TEST(Corpus, FixtureMatchesEnumeration) {
    auto fresh = enumerate_bridgeless_graphs(5);
    ASSERT_EQ(fresh.size(), oracle::corpus().size());
    for (std::size_t i = 0; i < fresh.size(); ++i) EXPECT_EQ(fresh[i].edges, oracle::corpus()[i].edges);
}
