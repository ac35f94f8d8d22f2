#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "multigraph.hpp"

namespace cyclepair {

struct GraphIsomorphism {
    std::vector<int> vertex_map;
    std::vector<int> edge_map;
    std::vector<int> edge_sign; // +1 when tail goes to tail
};

struct IsoOptions {
    bool pointed = false;
    int basepoint_a = 0;
    int basepoint_b = 0;
    bool respect_orientation = false;
};

namespace detail {

// count[u][v] = number of edges between u and v (symmetric unless directed).
inline std::vector<std::vector<int>> adjacency_counts(const Multigraph& g, bool directed) {
    std::vector<std::vector<int>> c(g.vertex_count, std::vector<int>(g.vertex_count, 0));
    for (const auto& e : g.edges) {
        ++c[e.tail][e.head];
        if (!directed && !e.is_loop()) ++c[e.head][e.tail];
    }
    return c;
}

inline GraphIsomorphism edge_correspondence(const Multigraph& a, const Multigraph& b, const std::vector<int>& pi, bool directed) {
    GraphIsomorphism iso;
    iso.vertex_map = pi;
    iso.edge_map.assign(a.edges.size(), -1);
    iso.edge_sign.assign(a.edges.size(), 1);
    std::map<std::pair<int, int>, std::vector<int>> bucket;
    auto key = [&](int u, int v) { return directed ? std::make_pair(u, v) : std::make_pair(std::min(u, v), std::max(u, v)); };
    for (int f = 0; f < b.edge_count(); ++f) bucket[key(b.edges[f].tail, b.edges[f].head)].push_back(f);
    std::map<std::pair<int, int>, std::size_t> used;
    for (int e = 0; e < a.edge_count(); ++e) {
        const auto& ed = a.edges[e];
        auto k = key(pi[ed.tail], pi[ed.head]);
        int f = bucket[k][used[k]++];
        iso.edge_map[e] = f;
        if (!ed.is_loop() && b.edges[f].tail != pi[ed.tail]) iso.edge_sign[e] = -1;
    }
    return iso;
}

} // namespace detail

/// Brute-force isomorphism search with degree pruning. Calls `visit` for
/// every isomorphism found; stop early by returning false.
inline void for_each_isomorphism(const Multigraph& a, const Multigraph& b, const IsoOptions& opt,
                                 const std::function<bool(const GraphIsomorphism&)>& visit) {
    if (a.vertex_count != b.vertex_count || a.edge_count() != b.edge_count()) return;
    const int n = a.vertex_count;
    const bool dir = opt.respect_orientation;
    auto ca = detail::adjacency_counts(a, dir);
    auto cb = detail::adjacency_counts(b, dir);
    auto da = degrees(a), db = degrees(b);
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return;
    }
    if (opt.pointed && da[opt.basepoint_a] != db[opt.basepoint_b]) return;

    // assign high-degree vertices first, basepoint before everything
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return da[x] > da[y]; });
    if (opt.pointed) {
        order.erase(std::find(order.begin(), order.end(), opt.basepoint_a));
        order.insert(order.begin(), opt.basepoint_a);
    }

    std::vector<int> pi(n, -1);
    std::vector<bool> taken(n, false);
    bool stop = false;
    std::function<void(int)> rec = [&](int depth) {
        if (stop) return;
        if (depth == n) {
            if (!visit(detail::edge_correspondence(a, b, pi, dir))) stop = true;
            return;
        }
        int u = order[depth];
        for (int w = 0; w < n && !stop; ++w) {
            if (taken[w] || da[u] != db[w]) continue;
            if (opt.pointed && depth == 0 && w != opt.basepoint_b) continue;
            if (ca[u][u] != cb[w][w]) continue;
            bool ok = true;
            for (int k = 0; k < depth && ok; ++k) {
                int x = order[k];
                if (ca[u][x] != cb[w][pi[x]]) ok = false;
                if (dir && ca[x][u] != cb[pi[x]][w]) ok = false;
            }
            if (!ok) continue;
            pi[u] = w;
            taken[w] = true;
            rec(depth + 1);
            taken[w] = false;
            pi[u] = -1;
        }
    };
    rec(0);
}

inline std::optional<GraphIsomorphism> isomorphic(const Multigraph& a, const Multigraph& b, bool respect_orientation = false) {
    std::optional<GraphIsomorphism> out;
    IsoOptions opt;
    opt.respect_orientation = respect_orientation;
    for_each_isomorphism(a, b, opt, [&](const GraphIsomorphism& iso) {
        out = iso;
        return false;
    });
    return out;
}

inline std::optional<GraphIsomorphism> isomorphic(const PointedGraph& a, const PointedGraph& b, bool respect_orientation = false) {
    std::optional<GraphIsomorphism> out;
    IsoOptions opt{true, a.basepoint, b.basepoint, respect_orientation};
    for_each_isomorphism(a.graph, b.graph, opt, [&](const GraphIsomorphism& iso) {
        out = iso;
        return false;
    });
    return out;
}

// Vertex permutations fixing the basepoint that are graph automorphisms.
inline std::size_t pointed_vertex_automorphism_count(const PointedGraph& pg) {
    std::size_t count = 0;
    IsoOptions opt{true, pg.basepoint, pg.basepoint, false};
    for_each_isomorphism(pg.graph, pg.graph, opt, [&](const GraphIsomorphism&) {
        ++count;
        return true;
    });
    return count;
}

/// Relabel vertices by `vperm`, reorder edges so that old edge e becomes
/// edge eperm[e], and flip edges with flip[e] = -1.
inline Multigraph relabel(const Multigraph& g, const std::vector<int>& vperm, const std::vector<int>& eperm,
                          const std::vector<int>& flip) {
    Multigraph out;
    out.vertex_count = g.vertex_count;
    out.edges.resize(g.edges.size());
    for (int e = 0; e < g.edge_count(); ++e) {
        Edge ed{vperm[g.edges[e].tail], vperm[g.edges[e].head]};
        if (flip[e] < 0) std::swap(ed.tail, ed.head);
        out.edges[eperm[e]] = ed;
    }
    return out;
}

} // namespace cyclepair
