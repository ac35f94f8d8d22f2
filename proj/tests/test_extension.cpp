#include <gtest/gtest.h>

#include "cyclepair/extension.hpp"
#include "cyclepair/sampling.hpp"

#include "support.hpp"

using namespace cyclepair;

TEST(J2, FigureEightIsTrivial) {
    auto j = j2_group(cycle_basis(bouquet(2)));
    EXPECT_TRUE(j.invariant_factors().empty());
    EXPECT_EQ(j.order(), 1);
}

TEST(J2, C3IsZ9) {
    auto j = j2_group(cycle_basis(cycle_graph(3)));
    EXPECT_EQ(j.invariant_factors(), (std::vector<Integer>{9}));
    EXPECT_EQ(j.free_rank(), 0u);
}

TEST(J2, OrderMatchesDeterminant) {
    for (const auto& g : oracle::corpus()) {
        auto cb = cycle_basis(g);
        if (cb.genus() == 0 || cb.genus() > 3) continue;
        auto j = j2_group(cb);
        EXPECT_EQ(j.free_rank(), 0u);
        // |coker(G (x) G)| = det(G)^(2g), raised to the g-th power
        Integer det = determinant(convert<Integer>(cb.gram));
        Integer expect = 1;
        for (std::size_t k = 0; k < 2 * cb.genus() * cb.genus(); ++k) expect *= det;
        EXPECT_EQ(j.order(), expect);
    }
}

TEST(J2, ThetaSmithForm) {
    auto cb = cycle_basis(theta_graph(3));
    auto j = j2_group(cb);
    auto s = smith_normal_form(kronecker(convert<Integer>(cb.gram), convert<Integer>(cb.gram)));
    std::vector<Integer> twice = s.invariant_factors();
    std::vector<Integer> once = twice;
    twice.insert(twice.end(), once.begin(), once.end());
    EXPECT_EQ(j.invariant_factors(), twice);
    EXPECT_EQ(once, (std::vector<Integer>{3, 3, 9}));
}

TEST(HarmonicVolume, C3IsThreeModNine) {
    for (int v = 0; v < 3; ++v) {
        auto h = harmonic_volume(PointedGraph{cycle_graph(3), v});
        EXPECT_EQ(h.mu(0, 0), 3);
        EXPECT_EQ(h.normal_form, (std::vector<Integer>{3}));
    }
}

TEST(HarmonicVolume, FigureEightIsZero) {
    auto h = harmonic_volume(PointedGraph{bouquet(2), 0});
    EXPECT_TRUE(h.mu.is_zero());
    EXPECT_TRUE(h.normal_form.empty());
}

TEST(HarmonicVolume, IntegralityOnCorpus) {
    for (const auto& pg : oracle::pointed_corpus()) {
        auto cb = cycle_basis(pg.graph);
        auto gens = tree_generators(pg.graph, cb, pg.basepoint);
        EXPECT_EQ(convert<Rational>(harmonic_mu(pg.graph, cb, gens)), harmonic_mu_rational(pg.graph, cb, gens));
    }
}

TEST(HarmonicVolume, C3JoinC4DependsOnBasepoint) {
    auto g = vertex_join(cycle_graph(3), cycle_graph(4), 0, 0);
    std::vector<std::vector<Integer>> forms;
    for (int v = 0; v < g.vertex_count; ++v) forms.push_back(harmonic_volume(PointedGraph{g, v}).normal_form);
    EXPECT_NE(forms[0], forms[1]);
    EXPECT_NE(forms[0], forms[3]);
}

TEST(SectionAmbiguity, SameAndConjugatedGenerators) {
    auto g = cycle_graph(3);
    auto cb = cycle_basis(g);
    auto gens = tree_generators(g, cb, 0);
    EXPECT_TRUE(section_ambiguity_check(g, gens, gens));
    auto conj = gens;
    conj.loops[0] = concat(concat(gens.loops[0], gens.loops[0]), inverse_word(gens.loops[0]));
    EXPECT_TRUE(section_ambiguity_check(g, gens, conj));
}

TEST(SectionAmbiguity, RandomResections) {
    Rng rng(17);
    auto g = vertex_join(cycle_graph(3), cycle_graph(4), 0, 0);
    auto cb = cycle_basis(g);
    for (int v = 0; v < g.vertex_count; ++v) {
        auto gens = tree_generators(g, cb, v);
        for (int t = 0; t < 5; ++t) EXPECT_TRUE(section_ambiguity_check(g, gens, random_resection(g, cb, gens, rng)));
    }
}

TEST(NuExperiment, C3SingleValue) {
    auto rep = nu_injectivity_experiment(cycle_graph(3), 2);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.distinct_values, 1u);
    EXPECT_EQ(rep.members.size(), 3u);
}

TEST(NuExperiment, FigureEightVacuous) {
    auto rep = nu_injectivity_experiment(bouquet(2), 2);
    EXPECT_TRUE(rep.ok());
    EXPECT_TRUE(rep.invariant_factors.empty());
    EXPECT_EQ(rep.members.size(), 1u);
}

TEST(NuExperiment, C3JoinC4SeparatesPointings) {
    auto rep = nu_injectivity_experiment(vertex_join(cycle_graph(3), cycle_graph(4), 0, 0), 4);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.distinct_values, 4u); // join, C3 side, C4 near side, C4 far vertex
}

TEST(Transport, IdentityIsNoOp) {
    auto g = theta_graph(3);
    auto cb = cycle_basis(g);
    auto mu = harmonic_mu(g, cb, tree_generators(g, cb, 0));
    EXPECT_EQ(transport_mu(mu, cb, IntMatrix::identity(2), std::vector<int>(3, 1)), mu);
}
