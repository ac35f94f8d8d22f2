#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "cyclepair/corpus.hpp"
#include "cyclepair/cycle_pairing.hpp"
#include "cyclepair/homology.hpp"
#include "cyclepair/matrix.hpp"
#include "cyclepair/multigraph.hpp"

namespace oracle {

using namespace cyclepair;

inline const std::vector<Multigraph>& corpus() {
    static const std::vector<Multigraph> graphs = load_corpus(default_corpus_path());
    return graphs;
}

inline std::vector<PointedGraph> pointed_corpus() {
    std::vector<PointedGraph> out;
    for (const auto& g : corpus())
        for (int v = 0; v < g.vertex_count; ++v) out.push_back({g, v});
    return out;
}

inline bool connected_without(const Multigraph& g, int skip) {
    std::vector<std::vector<int>> adj(g.vertex_count);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (e == skip) continue;
        adj[g.edges[e].tail].push_back(g.edges[e].head);
        adj[g.edges[e].head].push_back(g.edges[e].tail);
    }
    std::vector<bool> seen(g.vertex_count, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// An edge is a bridge iff deleting it disconnects the graph.
inline std::vector<int> brute_bridges(const Multigraph& g) {
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!connected_without(g, e)) out.push_back(e);
    return out;
}

// Kirchhoff: spanning trees = any cofactor of the Laplacian.
inline Integer kirchhoff_tree_count(const Multigraph& g) {
    const int n = g.vertex_count;
    if (n == 1) return 1;
    RationalMatrix lap(n - 1, n - 1);
    for (const auto& e : g.edges) {
        if (e.is_loop()) continue;
        int u = e.tail, v = e.head;
        if (u < n - 1) lap(u, u) += 1;
        if (v < n - 1) lap(v, v) += 1;
        if (u < n - 1 && v < n - 1) {
            lap(u, v) -= 1;
            lap(v, u) -= 1;
        }
    }
    // Gaussian elimination over Q
    Rational det = 1;
    for (int c = 0; c < n - 1; ++c) {
        int p = c;
        while (p < n - 1 && lap(p, c) == 0) ++p;
        if (p == n - 1) return 0;
        if (p != c) {
            for (int j = 0; j < n - 1; ++j) std::swap(lap(p, j), lap(c, j));
            det = -det;
        }
        det *= lap(c, c);
        for (int r = c + 1; r < n - 1; ++r) {
            Rational f = lap(r, c) / lap(c, c);
            for (int j = c; j < n - 1; ++j) lap(r, j) -= f * lap(c, j);
        }
    }
    return Integer(det.get_num());
}

// Edge sets of every cycle subgraph, by subset enumeration.
inline std::vector<std::vector<int>> brute_cycle_subgraphs(const Multigraph& g) {
    std::vector<std::vector<int>> out;
    const int m = g.edge_count();
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> ids;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1u) ids.push_back(e);
        if (is_cycle_subgraph(g, ids)) out.push_back(ids);
    }
    return out;
}

// Concyclicity by definition: same set of cycle subgraphs.
inline std::vector<int> brute_concyclic_labels(const Multigraph& g) {
    auto cycles = brute_cycle_subgraphs(g);
    std::vector<std::vector<bool>> member(g.edge_count(), std::vector<bool>(cycles.size(), false));
    for (std::size_t c = 0; c < cycles.size(); ++c)
        for (int e : cycles[c]) member[e][c] = true;
    std::vector<int> label(g.edge_count(), -1);
    int next = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (label[e] >= 0) continue;
        label[e] = next;
        for (int f = e + 1; f < g.edge_count(); ++f)
            if (member[f] == member[e]) label[f] = next;
        ++next;
    }
    return label;
}

// Pointed isomorphism by vertex permutation and adjacency counts.
inline bool brute_pointed_isomorphic(const PointedGraph& a, const PointedGraph& b) {
    const auto& ga = a.graph;
    const auto& gb = b.graph;
    if (ga.vertex_count != gb.vertex_count || ga.edge_count() != gb.edge_count()) return false;
    const int n = ga.vertex_count;
    auto counts = [n](const Multigraph& g) {
        std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
        for (const auto& e : g.edges) {
            ++c[e.tail][e.head];
            if (!e.is_loop()) ++c[e.head][e.tail];
        }
        return c;
    };
    auto ca = counts(ga), cb = counts(gb);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        if (p[a.basepoint] != b.basepoint) continue;
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = 0; v < n && ok; ++v) ok = ca[u][v] == cb[p[u]][p[v]];
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// Chen's identity: walk the loop edge by edge, each straight segment
// contributing exp(value) to the running iterated integrals.
inline Rational chen_pairing(const EdgeWord& alpha, const std::vector<IntVector>& omega, const CycleBasis& cb) {
    const std::size_t k = omega.size();
    std::vector<IntVector> chains;
    for (const auto& w : omega) chains.push_back(cb.to_chain(w));
    std::vector<Rational> state(k + 1, 0);
    state[0] = 1;
    for (const auto& l : alpha) {
        std::vector<Rational> a(k + 1, 0);
        for (std::size_t t = 1; t <= k; ++t) a[t] = Rational(static_cast<long>(l.sign * chains[t - 1][l.edge]));
        std::vector<Rational> next(k + 1, 0);
        for (std::size_t j = 0; j <= k; ++j)
            for (std::size_t i = 0; i <= j; ++i) {
                Rational term = state[i];
                for (std::size_t t = i + 1; t <= j; ++t) term *= a[t];
                Rational fact = 1;
                for (std::size_t t = 2; t <= j - i; ++t) fact *= static_cast<long>(t);
                next[j] += term / fact;
            }
        state = next;
    }
    return state[k];
}

} // namespace oracle
