#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "isomorphism.hpp"
#include "multigraph.hpp"

namespace cyclepair {

enum class MoveKind { VertexCleaving, WhitneyTwist };

struct TwoMove {
    MoveKind kind = MoveKind::VertexCleaving;
    std::vector<int> separators; // 1 vertex for cleaving, 2 for a twist
    std::vector<int> side;       // edge ids moved
    int reattach_from = -1;      // cleaving only: vertex of the detached side ...
    int reattach_to = -1;        // ... glued to this vertex of the rest
};

/// Result of a move. Edge ids are preserved; edge_sign records the induced
/// 2-isomorphism (identity on edges, -1 where a twist reverses the side).
struct MoveResult {
    Multigraph graph;
    std::vector<int> edge_sign;
};

namespace detail {

// Pieces of g after removing the vertices in `cut`: one per component of the
// remaining vertices (with every edge touching it) plus one per edge whose
// endpoints all lie in `cut`.
inline std::vector<std::vector<int>> pieces(const Multigraph& g, const std::vector<int>& cut) {
    std::vector<bool> removed(g.vertex_count, false);
    for (int v : cut) removed[v] = true;
    UnionFind uf(g.vertex_count);
    for (const auto& e : g.edges)
        if (!removed[e.tail] && !removed[e.head]) uf.unite(e.tail, e.head);
    std::map<int, std::vector<int>> by_root;
    std::vector<std::vector<int>> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edges[e];
        int inner = !removed[ed.tail] ? ed.tail : (!removed[ed.head] ? ed.head : -1);
        if (inner < 0) out.push_back({e});
        else by_root[uf.find(inner)].push_back(e);
    }
    for (auto& [r, es] : by_root) out.push_back(es);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

/// Detach `side` at w (it receives a private copy of w) and glue vertex
/// `from` of the detached part to vertex `to` of the rest.
inline Multigraph apply_cleaving(const Multigraph& g, int w, const std::vector<int>& side, int from, int to) {
    const int copy = g.vertex_count;
    Multigraph h(g.vertex_count + 1, g.edges);
    for (int e : side) {
        if (h.edges[e].tail == w) h.edges[e].tail = copy;
        if (h.edges[e].head == w) h.edges[e].head = copy;
    }
    // identify `from` (a side vertex, possibly the copy) with `to`
    for (auto& e : h.edges) {
        if (e.tail == from) e.tail = to;
        if (e.head == from) e.head = to;
    }
    return compact_vertices(h);
}

inline Multigraph apply_twist(const Multigraph& g, int u, int w, const std::vector<int>& side) {
    Multigraph h = g;
    auto swap_end = [&](int& x) {
        if (x == u) x = w;
        else if (x == w) x = u;
    };
    for (int e : side) {
        swap_end(h.edges[e].tail);
        swap_end(h.edges[e].head);
    }
    return h;
}

/// Every single 2-move applicable to g, with its result.
inline std::vector<std::pair<TwoMove, MoveResult>> all_two_moves(const Multigraph& g) {
    std::vector<std::pair<TwoMove, MoveResult>> out;
    const int n = g.vertex_count;
    for (int w = 0; w < n; ++w) {
        auto ps = detail::pieces(g, {w});
        if (ps.size() < 2) continue;
        for (const auto& side : ps) {
            std::set<int> side_vertices{n}; // n stands for the copy of w
            for (int e : side)
                for (int x : {g.edges[e].tail, g.edges[e].head})
                    if (x != w) side_vertices.insert(x);
            std::set<int> rest_vertices;
            std::vector<bool> in_side = edge_mask(g, side);
            for (int e = 0; e < g.edge_count(); ++e)
                if (!in_side[e]) {
                    rest_vertices.insert(g.edges[e].tail);
                    rest_vertices.insert(g.edges[e].head);
                }
            for (int from : side_vertices)
                for (int to : rest_vertices) {
                    TwoMove mv{MoveKind::VertexCleaving, {w}, side, from, to};
                    MoveResult r{apply_cleaving(g, w, side, from, to), std::vector<int>(g.edges.size(), 1)};
                    out.emplace_back(mv, r);
                }
        }
    }
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) {
            auto ps = detail::pieces(g, {u, w});
            if (ps.size() < 2) continue;
            for (const auto& side : ps) {
                // a twist only makes sense for a side meeting both u and w
                bool meets_u = false, meets_w = false;
                for (int e : side)
                    for (int x : {g.edges[e].tail, g.edges[e].head}) {
                        meets_u |= x == u;
                        meets_w |= x == w;
                    }
                if (!meets_u || !meets_w) continue;
                TwoMove mv{MoveKind::WhitneyTwist, {u, w}, side, -1, -1};
                MoveResult r{apply_twist(g, u, w, side), std::vector<int>(g.edges.size(), 1)};
                for (int e : side) r.edge_sign[e] = -1;
                out.emplace_back(mv, r);
            }
        }
    return out;
}

struct OrbitMember {
    Multigraph graph;
    std::vector<int> edge_sign; // cumulative signs of the identity edge map from the start graph
    std::vector<TwoMove> moves; // recorded sequence
    int depth = 0;
};

/// Breadth-first 2-move orbit up to `budget` moves, deduplicated by
/// unpointed isomorphism. The first member is g itself.
inline std::vector<OrbitMember> enumerate_two_move_orbit(const Multigraph& g, int budget) {
    std::vector<OrbitMember> orbit{{g, std::vector<int>(g.edges.size(), 1), {}, 0}};
    std::deque<std::size_t> frontier{0};
    while (!frontier.empty()) {
        std::size_t idx = frontier.front();
        frontier.pop_front();
        if (orbit[idx].depth >= budget) continue;
        auto moves = all_two_moves(orbit[idx].graph);
        for (auto& [mv, res] : moves) {
            bool seen = false;
            for (const auto& m : orbit)
                if (isomorphic(m.graph, res.graph)) {
                    seen = true;
                    break;
                }
            if (seen) continue;
            OrbitMember next;
            next.graph = res.graph;
            next.edge_sign = orbit[idx].edge_sign;
            for (std::size_t e = 0; e < next.edge_sign.size(); ++e) next.edge_sign[e] *= res.edge_sign[e];
            next.moves = orbit[idx].moves;
            next.moves.push_back(mv);
            next.depth = orbit[idx].depth + 1;
            orbit.push_back(std::move(next));
            frontier.push_back(orbit.size() - 1);
        }
    }
    return orbit;
}

} // namespace cyclepair
