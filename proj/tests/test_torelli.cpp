#include <gtest/gtest.h>

#include <functional>

#include "cyclepair/torelli.hpp"
#include "cyclepair/two_moves.hpp"

#include "support.hpp"

using namespace cyclepair;

namespace {

// Every integer matrix with entries in [-bound, bound] preserving the form.
std::size_t brute_isometry_count(const IntMatrix& G, const IntMatrix& G2, Int bound) {
    const std::size_t n = G.rows();
    IntMatrix m(n, n);
    std::size_t count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == n * n) {
            if (m.transpose() * G2 * m == G) ++count;
            return;
        }
        for (Int x = -bound; x <= bound; ++x) {
            m(idx / n, idx % n) = x;
            rec(idx + 1);
        }
    };
    rec(0);
    return count;
}

} // namespace

TEST(Isometries, MatchBruteForceForSmallGenus) {
    for (const auto& g : oracle::corpus()) {
        auto cb = cycle_basis(g);
        if (cb.genus() == 0 || cb.genus() > 2) continue;
        auto list = enumerate_isometries(cb.gram, cb.gram);
        EXPECT_FALSE(list.truncated);
        EXPECT_EQ(list.isometries.size(), brute_isometry_count(cb.gram, cb.gram, 3));
        for (const auto& m : list.isometries) EXPECT_EQ(m.transpose() * cb.gram * m, cb.gram);
    }
}

TEST(Isometries, BetweenDifferentBases) {
    auto a = cycle_basis(theta_graph(3));
    auto b = cycle_basis(Multigraph(2, {{1, 0}, {0, 1}, {0, 1}}));
    auto list = enumerate_isometries(a.gram, b.gram);
    EXPECT_EQ(list.isometries.size(), 12u); // |Aut(A2)|
}

TEST(Isometries, LimitTruncates) {
    auto cb = cycle_basis(bouquet(3));
    auto list = enumerate_isometries(cb.gram, cb.gram, 5);
    EXPECT_TRUE(list.truncated);
    EXPECT_EQ(list.isometries.size(), 5u);
}

TEST(ClassBijection, IdentityAndNegation) {
    for (const auto& g : oracle::corpus()) {
        auto cb = cycle_basis(g);
        if (cb.genus() == 0) continue;
        auto part = concyclicity(g, cb);
        auto id = class_bijection_from_isometry(IntMatrix::identity(cb.genus()), part, part);
        ASSERT_TRUE(id);
        for (std::size_t c = 0; c < part.classes.size(); ++c) {
            EXPECT_EQ(id->target[c], static_cast<int>(c));
            EXPECT_EQ(id->sign[c], 1);
        }
        IntMatrix neg = IntMatrix::identity(cb.genus());
        for (std::size_t i = 0; i < cb.genus(); ++i) neg(i, i) = -1;
        auto n = class_bijection_from_isometry(neg, part, part);
        ASSERT_TRUE(n);
        for (int s : n->sign) EXPECT_EQ(s, -1);
    }
}

TEST(ClassBijection, ThetaFourAllGraphic) {
    // H1 is the A3 root lattice; its isometries permute the four edge functionals up to sign
    auto g = theta_graph(4);
    auto cb = cycle_basis(g);
    auto part = concyclicity(g, cb);
    auto list = enumerate_isometries(cb.gram, cb.gram);
    std::size_t graphic = 0;
    for (const auto& m : list.isometries) graphic += class_bijection_from_isometry(m, part, part).has_value();
    EXPECT_EQ(list.isometries.size(), 48u);
    EXPECT_EQ(graphic, 48u);
}

TEST(SimpleCycles, SurvivingIsometriesPreserveThem) {
    for (const auto& g : oracle::corpus()) {
        auto cb = cycle_basis(g);
        if (cb.genus() == 0 || cb.genus() > 3) continue;
        auto part = concyclicity(g, cb);
        auto cycles = simple_cycles(g, cb);
        EXPECT_EQ(cycles.size(), 2 * oracle::brute_cycle_subgraphs(g).size());
        for (const auto& m : enumerate_isometries(cb.gram, cb.gram).isometries)
            if (class_bijection_from_isometry(m, part, part)) {
                EXPECT_TRUE(simple_cycle_check(m, cycles, part));
            }
    }
}

TEST(TwoCycles, IntersectExactlyInTheClass) {
    for (const auto& g : oracle::corpus()) {
        auto cb = cycle_basis(g);
        if (cb.genus() == 0) continue;
        auto part = concyclicity(g, cb);
        for (const auto& cls : part.classes) {
            auto tc = concyclic_two_cycles(g, cls);
            EXPECT_TRUE(is_cycle_subgraph(g, tc.first));
            EXPECT_TRUE(is_cycle_subgraph(g, tc.second));
            if (tc.degenerate) {
                EXPECT_EQ(tc.first, tc.second);
                continue;
            }
            std::vector<int> common;
            std::set_intersection(tc.first.begin(), tc.first.end(), tc.second.begin(), tc.second.end(), std::back_inserter(common));
            EXPECT_EQ(common, cls);
            // multiplicity-free intersection: #common = |<a1, a2>|
            IntVector a1(g.edge_count(), 0), a2(g.edge_count(), 0);
            auto orient = [&](const std::vector<int>& ids, IntVector& out) {
                // walk the cycle to fix consistent signs
                std::vector<bool> used(g.edges.size(), false);
                int start = g.edges[ids.front()].tail, cur = start;
                do {
                    for (int e : ids)
                        if (!used[e] && (g.edges[e].tail == cur || g.edges[e].head == cur)) {
                            used[e] = true;
                            out[e] = g.edges[e].tail == cur ? 1 : -1;
                            cur = g.edges[e].other(cur);
                            break;
                        }
                } while (cur != start);
            };
            orient(tc.first, a1);
            orient(tc.second, a2);
            Int ip = inner_product(a1, a2);
            EXPECT_EQ(static_cast<Int>(common.size()), ip < 0 ? -ip : ip);
        }
    }
}

TEST(TwoCycles, DegenerateOnCycleGraph) {
    auto tc = concyclic_two_cycles(cycle_graph(4), {0, 1, 2, 3});
    EXPECT_TRUE(tc.degenerate);
}

TEST(RepresentingEdgeMap, InducesTheIsometry) {
    for (const auto& g : oracle::corpus()) {
        auto cb = cycle_basis(g);
        if (cb.genus() == 0 || cb.genus() > 3) continue;
        auto part = concyclicity(g, cb);
        for (const auto& m : enumerate_isometries(cb.gram, cb.gram).isometries) {
            auto cbij = class_bijection_from_isometry(m, part, part);
            if (!cbij) continue;
            auto rep = representing_edge_map(*cbij, part, part);
            auto induced = two_isomorphism_from_edge_bijection(g, cb, g, cb, rep.edge_map, rep.edge_sign);
            // a signed class bijection always yields an isometry with the same action on classes
            ASSERT_TRUE(induced.has_value());
            EXPECT_EQ(class_bijection_from_isometry(*induced, part, part), cbij);
        }
    }
}

TEST(TwoMoves, OrbitMembersAre2Isomorphic) {
    for (const auto& g : oracle::corpus()) {
        auto orbit = enumerate_two_move_orbit(g, 3);
        auto cb = cycle_basis(g);
        std::vector<int> id(g.edges.size());
        std::iota(id.begin(), id.end(), 0);
        for (const auto& m : orbit) {
            EXPECT_TRUE(is_bridgeless(m.graph));
            EXPECT_TRUE(two_isomorphism_from_edge_bijection(m.graph, cycle_basis(m.graph), g, cb, id, m.edge_sign).has_value());
            EXPECT_EQ(static_cast<int>(m.moves.size()), m.depth);
        }
    }
}

TEST(TwoMoves, CleavingOrbits) {
    // re-gluing a two-cycle join gives an isomorphic graph
    auto orbit = enumerate_two_move_orbit(vertex_join(cycle_graph(2), cycle_graph(3), 0, 0), 4);
    EXPECT_EQ(orbit.size(), 1u);
    // three cycles in a chain
    Multigraph chain = vertex_join(cycle_graph(3), cycle_graph(2), 1, 0);
    chain.vertex_count += 1;
    chain.edges.push_back({0, 4});
    chain.edges.push_back({4, 0});
    auto members = enumerate_two_move_orbit(chain, 4);
    EXPECT_EQ(members.size(), 3u);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) EXPECT_FALSE(isomorphic(members[i].graph, members[j].graph));
}
