#pragma once

#include <string>
#include <vector>

#include "matrix.hpp"
#include "multigraph.hpp"

namespace cyclepair {

struct Letter {
    int edge = 0;
    int sign = 1;
    friend bool operator==(const Letter&, const Letter&) = default;
};

// Left-to-right traversal order.
using EdgeWord = std::vector<Letter>;

inline int letter_start(const Multigraph& g, const Letter& l) {
    return l.sign > 0 ? g.edges[l.edge].tail : g.edges[l.edge].head;
}
inline int letter_end(const Multigraph& g, const Letter& l) {
    return l.sign > 0 ? g.edges[l.edge].head : g.edges[l.edge].tail;
}

inline bool is_path(const Multigraph& g, const EdgeWord& w) {
    for (const auto& l : w)
        if (l.edge < 0 || l.edge >= g.edge_count() || (l.sign != 1 && l.sign != -1)) return false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (letter_end(g, w[i]) != letter_start(g, w[i + 1])) return false;
    return true;
}

inline bool is_loop_at(const Multigraph& g, const EdgeWord& w, int v) {
    if (!is_path(g, w)) return false;
    if (w.empty()) return true;
    return letter_start(g, w.front()) == v && letter_end(g, w.back()) == v;
}

inline void require_loop_at(const Multigraph& g, const EdgeWord& w, int v) {
    if (!is_loop_at(g, w, v)) throw Error(ErrorKind::NotALoop, "word is not a loop at vertex " + std::to_string(v));
}

inline EdgeWord inverse_word(const EdgeWord& w) {
    EdgeWord out(w.rbegin(), w.rend());
    for (auto& l : out) l.sign = -l.sign;
    return out;
}

inline EdgeWord concat(EdgeWord a, const EdgeWord& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Free reduction: cancel adjacent e e^-1 until none remain.
inline EdgeWord reduce_word(const EdgeWord& w) {
    EdgeWord out;
    for (const auto& l : w) {
        if (!out.empty() && out.back().edge == l.edge && out.back().sign == -l.sign) out.pop_back();
        else out.push_back(l);
    }
    return out;
}

inline IntVector chain_of_word(const EdgeWord& w, int edge_count) {
    IntVector c(edge_count, 0);
    for (const auto& l : w) c[l.edge] += l.sign;
    return c;
}

// "e1+,e2-" style, 1-based edge names.
inline std::string format_word(const EdgeWord& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += 'e' + std::to_string(w[i].edge + 1) + (w[i].sign > 0 ? '+' : '-');
    }
    return s;
}

} // namespace cyclepair
