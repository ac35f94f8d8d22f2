#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "isomorphism.hpp"
#include "json_io.hpp"
#include "multigraph.hpp"

namespace cyclepair {

namespace detail {

// Cheap isomorphism invariant used to bucket candidates before the oracle.
inline std::vector<int> graph_signature(const Multigraph& g) {
    std::vector<int> sig{g.vertex_count, g.edge_count()};
    auto d = degrees(g);
    std::sort(d.begin(), d.end());
    sig.insert(sig.end(), d.begin(), d.end());
    std::vector<int> loops(g.vertex_count, 0);
    for (const auto& e : g.edges)
        if (e.is_loop()) ++loops[e.tail];
    std::sort(loops.begin(), loops.end());
    sig.insert(sig.end(), loops.begin(), loops.end());
    return sig;
}

} // namespace detail

/// Every connected bridgeless multigraph with at most `max_edges` edges, one
/// per isomorphism class, ordered by (edges, vertices) then discovery order.
/// Edges are stored with tail <= head.
inline std::vector<Multigraph> enumerate_bridgeless_graphs(int max_edges) {
    std::vector<Multigraph> out;
    for (int m = 0; m <= max_edges; ++m)
        for (int n = 1; n <= std::max(1, m); ++n) {
            std::vector<Edge> slots;
            for (int u = 0; u < n; ++u)
                for (int v = u; v < n; ++v) slots.push_back({u, v});
            std::map<std::vector<int>, std::vector<std::size_t>> buckets;
            std::vector<Edge> chosen;
            std::function<void(std::size_t)> rec = [&](std::size_t from) {
                if (static_cast<int>(chosen.size()) == m) {
                    Multigraph g(n, chosen);
                    if (!is_connected(g) || !bridges(g).empty()) return;
                    auto& bucket = buckets[detail::graph_signature(g)];
                    for (std::size_t idx : bucket)
                        if (isomorphic(out[idx], g)) return;
                    bucket.push_back(out.size());
                    out.push_back(g);
                    return;
                }
                for (std::size_t s = from; s < slots.size(); ++s) {
                    chosen.push_back(slots[s]);
                    rec(s);
                    chosen.pop_back();
                }
            };
            rec(0);
        }
    return out;
}

inline json corpus_json(const std::vector<Multigraph>& graphs, int max_edges) {
    json list = json::array();
    for (const auto& g : graphs) list.push_back(graph_json(g));
    return json{{"max_edges", max_edges}, {"count", graphs.size()}, {"graphs", list}};
}

inline std::vector<Multigraph> corpus_from_json(const json& j) {
    std::vector<Multigraph> out;
    if (!j.contains("graphs") || !j.at("graphs").is_array()) throw Error(ErrorKind::Parse, "corpus needs a \"graphs\" array");
    for (const auto& g : j.at("graphs")) out.push_back(graph_from_json(g).graph);
    return out;
}

inline std::vector<Multigraph> load_corpus(const std::string& path) { return corpus_from_json(read_json_file(path)); }

#ifdef CYCLEPAIR_FIXTURES_DIR
inline std::string default_corpus_path() { return std::string(CYCLEPAIR_FIXTURES_DIR) + "/corpus.json"; }
#endif

} // namespace cyclepair
