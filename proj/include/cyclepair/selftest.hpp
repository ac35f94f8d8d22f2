#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cycle_pairing.hpp"
#include "extension.hpp"
#include "homology.hpp"
#include "json_io.hpp"
#include "sampling.hpp"
#include "unipotent.hpp"

namespace cyclepair {

struct SelftestConfig {
    std::uint64_t seed = 1;
    int cases = 100;         // random samples per pairing invariant
    int random_graphs = 8;   // seeded graphs added to the corpus
    int relabelings = 20;
    PairingOptions pairing;  // inverse_sign = +1 injects the sign mutation
    std::vector<Multigraph> corpus;
};

struct InvariantResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string first_failure;
};

struct SelftestReport {
    std::vector<InvariantResult> results;
    std::vector<std::string> warnings;
    std::size_t graphs = 0;

    bool ok() const {
        for (const auto& r : results)
            if (r.failed) return false;
        return true;
    }
    std::vector<std::string> failed_invariants() const {
        std::vector<std::string> out;
        for (const auto& r : results)
            if (r.failed) out.push_back(r.name);
        return out;
    }
};

namespace detail {

// Spanning trees by brute force over (n-1)-subsets of non-loop edges.
inline std::size_t spanning_tree_count(const Multigraph& g) {
    std::vector<int> candidates;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!g.edges[e].is_loop()) candidates.push_back(e);
    const int need = g.vertex_count - 1;
    std::size_t count = 0;
    std::vector<int> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(pick.size()) == need) {
            UnionFind uf(g.vertex_count);
            for (int e : pick)
                if (!uf.unite(g.edges[e].tail, g.edges[e].head)) return;
            ++count;
            return;
        }
        for (std::size_t i = from; i < candidates.size(); ++i) {
            pick.push_back(candidates[i]);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return count;
}

} // namespace detail

inline SelftestReport run_selftest(const SelftestConfig& cfg) {
    SelftestReport rep;
    Rng rng(cfg.seed);
    std::vector<Multigraph> graphs = cfg.corpus;
    for (int i = 0; i < cfg.random_graphs; ++i) {
        int n = uniform(rng, 1, 4);
        int m = uniform(rng, n, n + 3);
        graphs.push_back(random_bridgeless_graph(n, m, rng));
    }
    rep.graphs = graphs.size();
    if (graphs.empty()) {
        rep.warnings.push_back("corpus is empty; no invariant was exercised");
        return rep;
    }

    std::vector<InvariantResult> results;
    auto slot = [&](const std::string& name) -> InvariantResult& {
        for (auto& r : results)
            if (r.name == name) return r;
        results.push_back({name, 0, 0, {}});
        return results.back();
    };
    auto record = [&](const std::string& name, bool ok, const std::string& what) {
        auto& r = slot(name);
        ++r.checked;
        if (!ok) {
            if (!r.failed) r.first_failure = what;
            ++r.failed;
        }
    };
    const PairingOptions& opt = cfg.pairing;

    // graphs with cycles drive the pairing families
    std::vector<std::size_t> cyclic;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        if (graphs[i].edge_count() - graphs[i].vertex_count + 1 > 0) cyclic.push_back(i);

    for (int c = 0; c < cfg.cases && !cyclic.empty(); ++c) {
        const auto& g = graphs[cyclic[uniform(rng, 0, static_cast<int>(cyclic.size()) - 1)]];
        auto cb = cycle_basis(g);
        const std::size_t n = cb.genus();
        int v = uniform(rng, 0, g.vertex_count - 1);
        auto alpha = random_loop(g, cb, v, uniform(rng, 1, 6), rng);
        auto beta = random_loop(g, cb, v, uniform(rng, 1, 6), rng);
        int k = uniform(rng, 0, 3), l = uniform(rng, 0, 6 - k);
        auto left = random_tensor(n, k, rng), right = random_tensor(n, l, rng);
        auto omega = left;
        omega.insert(omega.end(), right.begin(), right.end());
        std::string tag = "graph " + graph_json(g).dump() + " loop " + format_word(alpha);

        record("pairing.inductive_definition",
               integrate_word(alpha, omega, cb, opt) == integrate_word_inductive(alpha, omega, cb, opt), tag);
        record("pairing.shuffle", check_shuffle(alpha, left, right, cb, opt), tag);
        record("pairing.coproduct", check_coproduct(alpha, beta, omega, cb, opt), tag);
        record("pairing.antipode", check_antipode(alpha, omega, cb, opt), tag);
        if (omega.size() <= 5) record("pairing.symmetrization", check_symmetrization(alpha, omega, cb, opt), tag);
        record("pairing.iterated_coproduct", check_iterated_coproduct({alpha, beta, alpha}, omega, cb, opt), tag);
        auto w1 = random_vector(n, rng), w2 = random_vector(n, rng);
        record("pairing.conjugation", check_conjugation(alpha, beta, w1, w2, cb, opt), tag);

        auto noisy = insert_backtracks(g, alpha, v, uniform(rng, 1, 3), rng);
        record("pairing.well_defined", integrate_word(noisy, omega, cb, opt) == integrate_word(reduce_word(noisy), omega, cb, opt), tag);

        int r = uniform(rng, 1, 3);
        std::vector<EdgeWord> factors;
        for (int j = 0; j < r; ++j) factors.push_back(random_loop(g, cb, v, uniform(rng, 1, 5), rng));
        int kk = uniform(rng, 0, r - 1);
        record("pairing.nilpotence", integrate_augmentation_product(factors, random_tensor(n, kk, rng), cb, opt) == 0, tag);
        auto top = random_tensor(n, r, rng);
        Rational prod = 1;
        for (int j = 0; j < r; ++j) prod *= static_cast<long>(inner_product(cb.to_chain(top[j]), chain_of_word(factors[j], cb.edge_count)));
        record("pairing.nilpotence_top_degree", integrate_augmentation_product(factors, top, cb, opt) == prod, tag);

        auto wa = word2_expand(alpha, g.edge_count()), wb = word2_expand(beta, g.edge_count());
        record("algebra.word2_multiplicative", word2_expand(concat(alpha, beta), g.edge_count()) == wa * wb, tag);
        record("algebra.abelianization", wa.deg1 == chain_of_word(alpha, g.edge_count()), tag);
        auto gens = tree_generators(g, cb, v);
        auto x = loop_to_pi1(g, cb, alpha, v);
        record("algebra.word2_embedding", word2_map(x, gens, g.edge_count()) == wa, tag);
    }

    for (const auto& g : graphs) {
        std::string tag = graph_json(g).dump();
        auto cb = cycle_basis(g);
        auto part = concyclicity(g, cb);
        record("homology.matrix_tree", determinant(convert<Integer>(cb.gram)) == static_cast<unsigned long>(detail::spanning_tree_count(g)), tag);
        auto st = check_concyclicity_structure(g, part);
        record("homology.concyclicity_structure", st.failures.empty(), tag + (st.failures.empty() ? "" : " " + st.failures.front()));
        auto oriented = cyclic_orientation(g).graph;
        record("homology.cyclic_orientation", is_cyclically_oriented(oriented, concyclicity(oriented)), tag);
        for (int v = 0; v < g.vertex_count; ++v) {
            bool invertible = true;
            try {
                pairing_tensor(PointedGraph{g, v});
            } catch (const Error&) {
                invertible = false;
            }
            record("duality.pairing_invertible", invertible, tag);
            auto gens = tree_generators(g, cb, v);
            record("extension.integrality",
                   convert<Rational>(harmonic_mu(g, cb, gens)) == harmonic_mu_rational(g, cb, gens), tag);
        }
    }

    // decide against the oracle on relabelled copies and on other basepoints
    for (int c = 0; c < cfg.relabelings; ++c) {
        const auto& g = graphs[uniform(rng, 0, static_cast<int>(graphs.size()) - 1)];
        PointedGraph pg{g, uniform(rng, 0, g.vertex_count - 1)};
        auto rl = random_relabeling(pg, rng);
        auto res = decide_pointed_isomorphism(pg, rl.graph);
        record("unipotent.relabeling_found", res.certificate.has_value() && res.anomalies.empty(), graph_json(pg).dump());
        PointedGraph other{g, uniform(rng, 0, g.vertex_count - 1)};
        bool oracle = isomorphic(pg, other).has_value();
        auto res2 = decide_pointed_isomorphism(pg, other);
        record("unipotent.oracle_agreement", res2.certificate.has_value() == oracle && res2.anomalies.empty(),
               graph_json(pg).dump() + " vs basepoint " + std::to_string(other.basepoint));
    }
    rep.results = std::move(results);
    return rep;
}

} // namespace cyclepair
