#include <gtest/gtest.h>

#include "cyclepair/sampling.hpp"
#include "cyclepair/truncated_algebra.hpp"

#include "support.hpp"

using namespace cyclepair;

TEST(Word2, BacktrackCancels) {
    EdgeWord w{{0, 1}, {0, -1}};
    EXPECT_EQ(word2_expand(w, 2), TruncatedFreeElement::one(2));
    EXPECT_TRUE(reduce_check({{1, 1}, {0, 1}, {0, -1}}, {{1, 1}}, 2));
}

TEST(Word2, InverseLetterExpansion) {
    auto x = word2_expand({{0, -1}}, 1);
    EXPECT_EQ(x.deg1[0], -1);
    EXPECT_EQ(x.deg2(0, 0), 1);
}

TEST(Word2, StrictlyOrderedPairs) {
    // e1 e2 e3 once each: deg2 counts ordered pairs e < f in word order
    auto x = word2_expand({{0, 1}, {1, 1}, {2, 1}}, 3);
    EXPECT_EQ(x.deg2(0, 1), 1);
    EXPECT_EQ(x.deg2(0, 2), 1);
    EXPECT_EQ(x.deg2(1, 2), 1);
    EXPECT_EQ(x.deg2(1, 0), 0);
    EXPECT_EQ(x.deg2(0, 0), 0);
}

TEST(Word2, AntipodeIsInverse) {
    Rng rng(8);
    for (int t = 0; t < 100; ++t) {
        EdgeWord w;
        for (int i = 0; i < uniform(rng, 0, 8); ++i) w.push_back({uniform(rng, 0, 3), uniform(rng, 0, 1) ? 1 : -1});
        auto x = word2_expand(w, 4);
        EXPECT_EQ(x * antipode_expand(x), TruncatedFreeElement::one(4));
        EXPECT_EQ(antipode_expand(x), word2_expand(inverse_word(w), 4));
    }
}

TEST(Word2, AntipodeNeedsGroupLike) { EXPECT_THROW(antipode_expand(TruncatedFreeElement::zero(2)), Error); }

TEST(Truncated, CoordinatesRoundTrip) {
    auto x = word2_expand({{0, 1}, {1, -1}, {0, 1}}, 2);
    EXPECT_EQ(TruncatedFreeElement::from_coordinates(2, x.coordinates()), x);
    EXPECT_EQ(x.coordinates().size(), 7u);
}

TEST(LoopToPi1, HomologyClassAndEmbedding) {
    Rng rng(21);
    for (const auto& pg : oracle::pointed_corpus()) {
        const auto& g = pg.graph;
        auto cb = cycle_basis(g);
        if (cb.genus() == 0) continue;
        auto gens = tree_generators(g, cb, pg.basepoint);
        for (int t = 0; t < 5; ++t) {
            auto w = random_loop(g, cb, pg.basepoint, uniform(rng, 1, 7), rng);
            auto x = loop_to_pi1(g, cb, w, pg.basepoint);
            EXPECT_EQ(cb.to_chain(homology_class(x)), chain_of_word(w, g.edge_count()));
            EXPECT_EQ(word2_map(x, gens, g.edge_count()), word2_expand(w, g.edge_count()));
        }
    }
}

TEST(LoopToPi1, GeneratorsMapToThemselves) {
    auto g = theta_graph(3);
    auto cb = cycle_basis(g);
    auto gens = tree_generators(g, cb, 1);
    for (std::size_t i = 0; i < gens.loops.size(); ++i)
        EXPECT_EQ(loop_to_pi1(g, cb, gens.loops[i], 1), TruncatedLoopElement::one(2) + TruncatedLoopElement::generator(2, i));
}

TEST(LoopToPi1, RejectsNonLoops) {
    auto g = cycle_graph(3);
    auto cb = cycle_basis(g);
    EXPECT_THROW(loop_to_pi1(g, cb, {{0, 1}}, 0), Error);
}

TEST(MinimalGenerators, ConstantsOnC3JoinC4) {
    auto g = vertex_join(cycle_graph(3), cycle_graph(4), 0, 0);
    // vertex 0 is the join; 1, 2 lie on C3; 3, 4, 5 on C4
    std::vector<std::pair<int, int>> expect{{0, 0}, {0, 2}, {0, 1}, {3, 0}, {2, 0}, {1, 0}};
    for (int v = 0; v < g.vertex_count; ++v) {
        auto mg = minimal_generators({g, v});
        EXPECT_EQ(mg.join_vertex, 0);
        EXPECT_EQ(std::make_pair(mg.c1, mg.c2), expect[v]) << "basepoint " << v;
        for (const auto& w : mg.gens.loops) EXPECT_TRUE(is_loop_at(g, w, v));
    }
}

TEST(MinimalGenerators, Preconditions) {
    EXPECT_THROW(minimal_generators({theta_graph(3), 0}), Error);
    auto g = vertex_join(cycle_graph(3), cycle_graph(3), 0, 0);
    g.edges[1] = {g.edges[1].head, g.edges[1].tail};
    try {
        minimal_generators({g, 0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotCyclicallyOriented);
    }
}
