#include <gtest/gtest.h>

#include "cyclepair/sampling.hpp"
#include "cyclepair/unipotent.hpp"

#include "support.hpp"

using namespace cyclepair;

namespace {

PointedGraph c3_join_c4(int basepoint) { return {vertex_join(cycle_graph(3), cycle_graph(4), 0, 0), basepoint}; }

} // namespace

TEST(RecoverCyclicOrder, FromGeneratorWord) {
    auto g = cycle_graph(5);
    EdgeWord w{{2, 1}, {3, 1}, {4, 1}, {0, 1}, {1, 1}};
    EXPECT_EQ(recover_cyclic_order(word2_expand(w, 5)), (std::vector<int>{2, 3, 4, 0, 1}));
    EXPECT_THROW(recover_cyclic_order(word2_expand(concat(w, w), 5)), Error);
}

TEST(WalkClass, OrderFromBasepoint) {
    auto g = c3_join_c4(2).graph;
    auto part = concyclicity(g);
    auto walk = detail::walk_class(g, part.classes[0], 2);
    EXPECT_EQ(walk.order.size(), 3u);
}

TEST(CanonicalPhi, IdentityIsIntegral) {
    for (const auto& pg : oracle::pointed_corpus()) {
        auto d = make_pointed_data(pg);
        auto phi = canonical_phi(d, d, IntMatrix::identity(d.genus()));
        EXPECT_TRUE(is_integral(phi));
        EXPECT_EQ(phi.matrix, RationalMatrix::identity(phi.matrix.rows()));
    }
}

TEST(CanonicalPhi, MatchesFullTensorSolve) {
    auto a = c3_join_c4(0), b = c3_join_c4(0);
    auto da = make_pointed_data(a), db = make_pointed_data(b);
    for (const auto& m : enumerate_isometries(da.cb.gram, db.cb.gram).isometries)
        EXPECT_EQ(canonical_phi(da, db, m).matrix, canonical_phi_full(a, b, m));
}

TEST(Decide, IdenticalGraphs) {
    auto res = decide_pointed_isomorphism(c3_join_c4(4), c3_join_c4(4));
    ASSERT_TRUE(res.certificate);
    EXPECT_EQ(res.certificate->word2_residual, 0);
    EXPECT_TRUE(res.anomalies.empty());
}

TEST(Decide, DifferentCycleLengths) {
    EXPECT_FALSE(decide_pointed_isomorphism(PointedGraph{cycle_graph(3), 0}, PointedGraph{cycle_graph(4), 0}).certificate);
}

TEST(Decide, JoinVersusOffJoin) {
    auto res = decide_pointed_isomorphism(c3_join_c4(0), c3_join_c4(1));
    EXPECT_FALSE(res.certificate);
    EXPECT_GT(res.graphic, 0u);
    EXPECT_EQ(res.integral, 0u);
}

TEST(Decide, BasepointsOnTheSameCycle) {
    // 1 and 2 are swapped by reflecting C3, 3 and 5 by reflecting C4
    EXPECT_TRUE(decide_pointed_isomorphism(c3_join_c4(1), c3_join_c4(2)).certificate);
    EXPECT_TRUE(decide_pointed_isomorphism(c3_join_c4(3), c3_join_c4(5)).certificate);
    EXPECT_FALSE(decide_pointed_isomorphism(c3_join_c4(3), c3_join_c4(4)).certificate);
}

TEST(Decide, JobCountDoesNotChangeTheResult) {
    auto a = make_pointed_data(c3_join_c4(3)), b = make_pointed_data(c3_join_c4(5));
    DecideOptions one, four;
    four.jobs = 4;
    auto r1 = decide_pointed_isomorphism(a, b, one, true), r4 = decide_pointed_isomorphism(a, b, four, true);
    ASSERT_TRUE(r1.certificate && r4.certificate);
    EXPECT_EQ(r1.certificate->edge_map, r4.certificate->edge_map);
    EXPECT_EQ(r1.certificate->vertex_map, r4.certificate->vertex_map);
    EXPECT_EQ(r1.all.size(), r4.all.size());
    EXPECT_EQ(r1.integral, r4.integral);
}

TEST(Decide, CertificateIsAGraphIsomorphism) {
    Rng rng(99);
    for (const auto& pg : oracle::pointed_corpus()) {
        auto rl = random_relabeling(pg, rng);
        auto res = decide_pointed_isomorphism(pg, rl.graph);
        ASSERT_TRUE(res.certificate) << graph_json(pg).dump();
        const auto& c = *res.certificate;
        EXPECT_EQ(c.vertex_map[pg.basepoint], rl.graph.basepoint);
        for (int e = 0; e < pg.graph.edge_count(); ++e) {
            Edge src = pg.graph.edges[e];
            Edge dst = rl.graph.graph.edges[c.edge_map[e]];
            if (c.edge_sign[e] < 0) std::swap(dst.tail, dst.head);
            EXPECT_EQ(c.vertex_map[src.tail], dst.tail);
            EXPECT_EQ(c.vertex_map[src.head], dst.head);
        }
    }
}

TEST(JointContraction, InjectiveOnCorpus) {
    for (const auto& pg : oracle::pointed_corpus()) EXPECT_TRUE(joint_contraction_injectivity(make_pointed_data(pg)));
}

TEST(Decide, GenusMismatchIsImmediateNegative) {
    auto res = decide_pointed_isomorphism(PointedGraph{bouquet(2), 0}, PointedGraph{cycle_graph(3), 0});
    EXPECT_FALSE(res.certificate);
    EXPECT_EQ(res.isometries, 0u);
}
