#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "homology.hpp"
#include "isomorphism.hpp"
#include "multigraph.hpp"
#include "truncated_algebra.hpp"
#include "words.hpp"

namespace cyclepair {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Random walk of `steps` letters from v, closed up along the spanning tree.
inline EdgeWord random_loop(const Multigraph& g, const CycleBasis& cb, int v, int steps, Rng& rng) {
    auto inc = incidence(g);
    EdgeWord w;
    int cur = v;
    for (int s = 0; s < steps && !inc[cur].empty(); ++s) {
        int e = inc[cur][uniform(rng, 0, static_cast<int>(inc[cur].size()) - 1)];
        const auto& ed = g.edges[e];
        int sign = ed.tail == cur ? 1 : -1;
        if (ed.is_loop()) sign = uniform(rng, 0, 1) ? 1 : -1;
        w.push_back({e, sign});
        cur = letter_end(g, w.back());
    }
    return concat(w, cb.tree.path(g, cur, v));
}

inline IntVector random_vector(std::size_t n, Rng& rng, int range = 2) {
    IntVector v(n);
    for (auto& x : v) x = uniform(rng, -range, range);
    return v;
}

inline std::vector<IntVector> random_tensor(std::size_t genus, int k, Rng& rng, int range = 2) {
    std::vector<IntVector> t;
    for (int i = 0; i < k; ++i) t.push_back(random_vector(genus, rng, range));
    return t;
}

/// Insert `count` backtracks e^s e^-s at random positions of a path.
inline EdgeWord insert_backtracks(const Multigraph& g, EdgeWord w, int start, int count, Rng& rng) {
    auto inc = incidence(g);
    for (int c = 0; c < count; ++c) {
        int pos = uniform(rng, 0, static_cast<int>(w.size()));
        int at = pos == 0 ? start : letter_end(g, w[pos - 1]);
        if (inc[at].empty()) continue;
        int e = inc[at][uniform(rng, 0, static_cast<int>(inc[at].size()) - 1)];
        int s = g.edges[e].tail == at ? 1 : -1;
        w.insert(w.begin() + pos, {{e, s}, {e, -s}});
    }
    return w;
}

struct Relabeling {
    PointedGraph graph;
    std::vector<int> vertex_map;
    std::vector<int> edge_map;
    std::vector<int> edge_sign;
};

inline Relabeling random_relabeling(const PointedGraph& pg, Rng& rng) {
    Relabeling r;
    const auto& g = pg.graph;
    r.vertex_map.resize(g.vertex_count);
    r.edge_map.resize(g.edges.size());
    std::iota(r.vertex_map.begin(), r.vertex_map.end(), 0);
    std::iota(r.edge_map.begin(), r.edge_map.end(), 0);
    std::shuffle(r.vertex_map.begin(), r.vertex_map.end(), rng);
    std::shuffle(r.edge_map.begin(), r.edge_map.end(), rng);
    r.edge_sign.assign(g.edges.size(), 1);
    for (auto& s : r.edge_sign) s = uniform(rng, 0, 1) ? 1 : -1;
    r.graph = {relabel(g, r.vertex_map, r.edge_map, r.edge_sign), r.vertex_map[pg.basepoint]};
    return r;
}

/// Same homology classes, different loops: conjugate each generator by a
/// random loop and multiply in a random commutator.
inline Generators random_resection(const Multigraph& g, const CycleBasis& cb, const Generators& gens, Rng& rng) {
    Generators out = gens;
    const int v = gens.basepoint;
    for (auto& loop : out.loops) {
        EdgeWord conj = random_loop(g, cb, v, uniform(rng, 0, 4), rng);
        EdgeWord a = random_loop(g, cb, v, uniform(rng, 1, 4), rng);
        EdgeWord b = random_loop(g, cb, v, uniform(rng, 1, 4), rng);
        EdgeWord comm = concat(concat(a, b), concat(inverse_word(a), inverse_word(b)));
        EdgeWord w = concat(concat(conj, loop), inverse_word(conj));
        loop = uniform(rng, 0, 1) ? concat(w, comm) : concat(comm, w);
    }
    out.minimal = false;
    return out;
}

/// Connected bridgeless multigraph on `n` vertices with `m` edges, by
/// rejection sampling.
inline Multigraph random_bridgeless_graph(int n, int m, Rng& rng, int tries = 1000) {
    Multigraph g;
    for (int t = 0; t < tries; ++t) {
        g = Multigraph(n, {});
        for (int e = 0; e < m; ++e) g.edges.push_back({uniform(rng, 0, n - 1), uniform(rng, 0, n - 1)});
        if (is_connected(g) && bridges(g).empty()) return g;
    }
    throw Error(ErrorKind::InvalidGraph, "no bridgeless sample found");
}

} // namespace cyclepair
