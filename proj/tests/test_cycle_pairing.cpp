#include <gtest/gtest.h>

#include "cyclepair/cycle_pairing.hpp"
#include "cyclepair/sampling.hpp"

#include "support.hpp"

using namespace cyclepair;

namespace {

const EdgeWord c3_loop{{0, 1}, {1, 1}, {2, 1}};

} // namespace

TEST(Pairing, C3Examples) {
    auto cb = cycle_basis(cycle_graph(3));
    EXPECT_EQ(integrate_word(c3_loop, {{1}, {1}}, cb), ratio(9, 2));
    EXPECT_EQ(integrate_word(c3_loop, {}, cb), 1);
    EXPECT_EQ(integrate_word(c3_loop, {{1}}, cb), 3);
    EXPECT_EQ(integrate_word(inverse_word(c3_loop), {{1}}, cb), -3);
    EXPECT_EQ(integrate_word({}, {{1}}, cb), 0);
}

TEST(Pairing, BacktrackInvariance) {
    auto cb = cycle_basis(cycle_graph(3));
    EdgeWord noisy{{0, 1}, {0, -1}, {0, 1}, {1, 1}, {2, 1}};
    EXPECT_EQ(integrate_word(noisy, {{1}, {1}}, cb), integrate_word(c3_loop, {{1}, {1}}, cb));
}

TEST(Pairing, TensorLengthLimit) {
    auto cb = cycle_basis(cycle_graph(3));
    PairingOptions opt;
    opt.k_max = 2;
    try {
        integrate_word(c3_loop, {{1}, {1}, {1}}, cb, opt);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::KTooLarge);
    }
}

TEST(Pairing, BasisLengthMismatch) {
    auto cb = cycle_basis(cycle_graph(3));
    EXPECT_THROW(integrate_word(c3_loop, {{1, 0}}, cb), Error);
}

TEST(Pairing, AgreesWithChenOracle) {
    Rng rng(2024);
    const auto& graphs = oracle::corpus();
    int checked = 0;
    for (int t = 0; t < 400; ++t) {
        const auto& g = graphs[uniform(rng, 1, static_cast<int>(graphs.size()) - 1)];
        auto cb = cycle_basis(g);
        int v = uniform(rng, 0, g.vertex_count - 1);
        auto w = random_loop(g, cb, v, uniform(rng, 1, 8), rng);
        auto omega = random_tensor(cb.genus(), uniform(rng, 0, 5), rng);
        EXPECT_EQ(integrate_word(w, omega, cb), oracle::chen_pairing(w, omega, cb)) << format_word(w);
        EXPECT_EQ(integrate_word_inductive(w, omega, cb), oracle::chen_pairing(w, omega, cb));
        ++checked;
    }
    EXPECT_EQ(checked, 400);
}

TEST(Pairing, CompositionCount) {
    int count = 0;
    for_each_composition(3, 4, [&](const std::vector<int>& n) {
        EXPECT_EQ(n.size(), 4u);
        EXPECT_EQ(n[0] + n[1] + n[2] + n[3], 3);
        ++count;
    });
    EXPECT_EQ(count, 20); // C(6, 3)
}

TEST(PairingTensor, C3Exact) {
    auto p = pairing_tensor(PointedGraph{cycle_graph(3), 0});
    EXPECT_EQ(p.matrix, RationalMatrix::from_rows({{3, ratio(9, 2)}, {0, 9}}));
}

TEST(PairingTensor, InvertibleOnCorpus) {
    for (const auto& pg : oracle::pointed_corpus()) EXPECT_NO_THROW(pairing_tensor(pg));
}

TEST(Hopf, IdentitiesOnTheta) {
    auto g = theta_graph(3);
    auto cb = cycle_basis(g);
    EdgeWord a{{0, 1}, {1, -1}}, b{{2, 1}, {0, -1}};
    std::vector<IntVector> left{{1, 0}, {0, 1}}, right{{1, -1}};
    auto omega = left;
    omega.insert(omega.end(), right.begin(), right.end());
    EXPECT_TRUE(check_shuffle(a, left, right, cb));
    EXPECT_TRUE(check_coproduct(a, b, omega, cb));
    EXPECT_TRUE(check_antipode(a, omega, cb));
    EXPECT_TRUE(check_symmetrization(a, omega, cb));
    EXPECT_TRUE(check_iterated_coproduct({a, b, a}, omega, cb));
    EXPECT_TRUE(check_conjugation(a, b, {1, 0}, {2, -1}, cb));
}

TEST(Hopf, SignMutationBreaksAntipode) {
    auto cb = cycle_basis(cycle_graph(3));
    PairingOptions bad;
    bad.inverse_sign = 1;
    EXPECT_TRUE(check_antipode(c3_loop, {{1}}, cb));
    EXPECT_FALSE(check_antipode(c3_loop, {{1}}, cb, bad));
    EXPECT_NE(integrate_word({{0, 1}, {0, -1}}, {{1}}, cb, bad), 0);
}

TEST(Nilpotence, AugmentationProducts) {
    auto g = theta_graph(3);
    auto cb = cycle_basis(g);
    EdgeWord a{{0, 1}, {1, -1}}, b{{2, 1}, {0, -1}};
    EXPECT_EQ(integrate_augmentation_product({a, b}, {{1, 0}}, cb), 0);
    EXPECT_EQ(integrate_augmentation_product({a, b}, {}, cb), 0);
    // r = k: product of inner products
    Int ia = inner_product(cb.to_chain({1, 0}), chain_of_word(a, 3));
    Int ib = inner_product(cb.to_chain({0, 1}), chain_of_word(b, 3));
    EXPECT_EQ(integrate_augmentation_product({a, b}, {{1, 0}, {0, 1}}, cb), Rational(static_cast<long>(ia * ib)));
}
