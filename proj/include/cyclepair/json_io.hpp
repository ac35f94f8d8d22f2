#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "multigraph.hpp"
#include "truncated_algebra.hpp"
#include "unipotent.hpp"
#include "words.hpp"

namespace cyclepair {

using json = nlohmann::json;

inline std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}
inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(Int x) { return std::to_string(x); }

template <typename T>
json matrix_json(const Matrix<T>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

template <typename T>
json vector_json(const std::vector<T>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

inline Int parse_int(const json& j) {
    if (j.is_number_integer()) return j.get<Int>();
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        std::size_t pos = 0;
        Int v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == s.size() && pos > 0) return v;
    }
    throw Error(ErrorKind::Parse, "expected an integer, got " + j.dump());
}

inline IntMatrix int_matrix_from_json(const json& j) {
    if (!j.is_array()) throw Error(ErrorKind::Parse, "matrix must be an array of rows");
    std::vector<std::vector<Int>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw Error(ErrorKind::Parse, "matrix row must be an array");
        std::vector<Int> row;
        for (const auto& x : r) row.push_back(parse_int(x));
        rows.push_back(row);
    }
    if (rows.empty()) return IntMatrix();
    return IntMatrix::from_rows(rows);
}

// {"vertices": n, "edges": [[tail, head], ...], "basepoint": v}
inline json graph_json(const Multigraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back({e.tail, e.head});
    return json{{"vertices", g.vertex_count}, {"edges", edges}};
}

inline json graph_json(const PointedGraph& pg) {
    json j = graph_json(pg.graph);
    j["basepoint"] = pg.basepoint;
    return j;
}

inline PointedGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw Error(ErrorKind::Parse, "graph needs \"vertices\" and \"edges\"");
    PointedGraph pg;
    pg.graph.vertex_count = static_cast<int>(parse_int(j.at("vertices")));
    const auto& edges = j.at("edges");
    if (!edges.is_array()) throw Error(ErrorKind::Parse, "\"edges\" must be an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::Parse, "edge " + std::to_string(i) + " must be [tail, head]");
        pg.graph.edges.push_back({static_cast<int>(parse_int(e[0])), static_cast<int>(parse_int(e[1]))});
    }
    if (j.contains("basepoint")) pg.basepoint = static_cast<int>(parse_int(j.at("basepoint")));
    validate(pg);
    return pg;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, path + ": " + e.what());
    }
}

inline PointedGraph load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

namespace detail {

inline Error spec_error(const std::string& what, std::size_t pos, const std::string& spec) {
    return Error(ErrorKind::Parse, what + " at position " + std::to_string(pos + 1) + " in \"" + spec + "\"");
}

inline void skip_space(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline Int read_number(const std::string& s, std::size_t& i) {
    std::size_t start = i;
    Int v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        if (v > 1000000000) throw spec_error("number too large", start, s);
        ++i;
    }
    if (i == start) throw spec_error("expected a number", start, s);
    return v;
}

} // namespace detail

/// "e1+,e2-,e3+": 1-based edge ids with a direction. An empty string is the
/// empty word.
inline EdgeWord parse_loop_spec(const std::string& spec, int edge_count) {
    EdgeWord w;
    std::size_t i = 0;
    detail::skip_space(spec, i);
    if (i == spec.size()) return w;
    while (true) {
        detail::skip_space(spec, i);
        if (i >= spec.size() || spec[i] != 'e') throw detail::spec_error("expected 'e'", i, spec);
        ++i;
        std::size_t at = i;
        Int id = detail::read_number(spec, i);
        if (id < 1 || id > edge_count) throw detail::spec_error("edge id out of range", at, spec);
        if (i >= spec.size() || (spec[i] != '+' && spec[i] != '-')) throw detail::spec_error("expected '+' or '-'", i, spec);
        w.push_back({static_cast<int>(id - 1), spec[i] == '+' ? 1 : -1});
        ++i;
        detail::skip_space(spec, i);
        if (i == spec.size()) break;
        if (spec[i] != ',') throw detail::spec_error("expected ','", i, spec);
        ++i;
    }
    return w;
}

/// "[b1-2b2],[b2]": each bracket is an integer combination of the 1-based
/// basis cycles b1..bg. An empty string is the empty tensor.
inline std::vector<IntVector> parse_tensor_spec(const std::string& spec, std::size_t genus) {
    std::vector<IntVector> out;
    std::size_t i = 0;
    detail::skip_space(spec, i);
    if (i == spec.size()) return out;
    while (true) {
        detail::skip_space(spec, i);
        if (i >= spec.size() || spec[i] != '[') throw detail::spec_error("expected '['", i, spec);
        ++i;
        IntVector v(genus, 0);
        bool first = true;
        while (true) {
            detail::skip_space(spec, i);
            if (i < spec.size() && spec[i] == ']') {
                if (first) throw detail::spec_error("empty factor", i, spec);
                ++i;
                break;
            }
            Int sign = 1;
            if (i < spec.size() && (spec[i] == '+' || spec[i] == '-')) {
                sign = spec[i] == '-' ? -1 : 1;
                ++i;
            } else if (!first) {
                throw detail::spec_error("expected '+', '-' or ']'", i, spec);
            }
            detail::skip_space(spec, i);
            Int coeff = 1;
            if (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) coeff = detail::read_number(spec, i);
            if (i >= spec.size() || spec[i] != 'b') throw detail::spec_error("expected 'b'", i, spec);
            ++i;
            std::size_t at = i;
            Int idx = detail::read_number(spec, i);
            if (idx < 1 || idx > static_cast<Int>(genus)) throw detail::spec_error("basis index out of range", at, spec);
            v[idx - 1] += sign * coeff;
            first = false;
        }
        out.push_back(v);
        detail::skip_space(spec, i);
        if (i == spec.size()) break;
        if (spec[i] != ',') throw detail::spec_error("expected ','", i, spec);
        ++i;
    }
    return out;
}

template <typename B>
json truncated_json(const Truncated<B>& x) {
    return json{{"c0", to_string(x.c0)}, {"deg1", vector_json(x.deg1)}, {"deg2", matrix_json(x.deg2)}};
}

inline json certificate_json(const ReconstructionCertificate& c) {
    json joins = json::array();
    for (const auto& j : c.join_constants) joins.push_back({{"classes", {j[0], j[1]}}, {"c1", j[2]}, {"c2", j[3]}});
    return json{{"edge_map", c.edge_map},
                {"edge_sign", c.edge_sign},
                {"vertex_map", c.vertex_map},
                {"class_target", c.class_target},
                {"class_sign", c.class_sign},
                {"source_orders", c.source_orders},
                {"target_orders", c.target_orders},
                {"join_constants", joins},
                {"isometry", matrix_json(c.isometry)},
                {"word2_residual", c.word2_residual}};
}

} // namespace cyclepair
