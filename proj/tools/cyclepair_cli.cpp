#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cyclepair/corpus.hpp"
#include "cyclepair/extension.hpp"
#include "cyclepair/json_io.hpp"
#include "cyclepair/selftest.hpp"
#include "cyclepair/torelli.hpp"
#include "cyclepair/two_moves.hpp"
#include "cyclepair/unipotent.hpp"

using namespace cyclepair;

namespace {

struct Config {
    int k_max = 6;
    std::size_t isometry_limit = 10000;
    int budget = 4;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

PointedGraph load_bridgeless(const std::string& path) {
    auto pg = load_graph(path);
    require_connected(pg.graph);
    require_bridgeless(pg.graph);
    return pg;
}

json isometry_json(const IntMatrix& m, const ConcyclicityPartition& a, const ConcyclicityPartition& b) {
    json out{{"matrix", matrix_json(m)}};
    if (auto cb = class_bijection_from_isometry(m, a, b))
        out["class_bijection"] = {{"target", cb->target}, {"sign", cb->sign}};
    else
        out["class_bijection"] = nullptr;
    return out;
}

json moves_json(const std::vector<TwoMove>& moves) {
    json out = json::array();
    for (const auto& mv : moves) {
        json j{{"kind", mv.kind == MoveKind::VertexCleaving ? "cleaving" : "twist"},
               {"separators", mv.separators},
               {"side", mv.side}};
        if (mv.kind == MoveKind::VertexCleaving) {
            j["reattach_from"] = mv.reattach_from;
            j["reattach_to"] = mv.reattach_to;
        }
        out.push_back(j);
    }
    return out;
}

json nu_json(const NuReport& r) {
    json members = json::array();
    for (const auto& m : r.members)
        members.push_back({{"orbit_index", m.orbit_index},
                           {"basepoint", m.basepoint},
                           {"graph", graph_json(m.graph)},
                           {"mu", matrix_json(m.mu)},
                           {"nu", vector_json(m.key)}});
    auto pairs = [](const std::vector<std::pair<int, int>>& v) {
        json out = json::array();
        for (auto [a, b] : v) out.push_back({a, b});
        return out;
    };
    return json{{"base", graph_json(r.base)},
                {"invariant_factors", vector_json(r.invariant_factors)},
                {"orbit_size", r.orbit_size},
                {"automorphisms", r.automorphisms},
                {"members", members},
                {"pairs", r.pairs},
                {"equal_nu", r.equal_nu},
                {"isomorphic_pairs", r.isomorphic_pairs},
                {"distinct_values", r.distinct_values},
                {"collisions", pairs(r.collisions)},
                {"missed", pairs(r.missed)},
                {"ok", r.ok()}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Higher cycle pairing and pointed graph reconstruction"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--k-max", cfg.k_max, "largest tensor length accepted by the pairing")->check(CLI::PositiveNumber);
    app.add_option("--isometry-limit", cfg.isometry_limit, "cap on enumerated isometries")->check(CLI::PositiveNumber);
    app.add_option("--budget", cfg.budget, "2-move orbit depth")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", cfg.seed, "seed for randomized suites (CYCLEPAIR_SEED overrides)");
    app.add_option("--jobs", cfg.jobs, "worker threads for candidate checking")->check(CLI::PositiveNumber);

    std::string graph_path, a_path, b_path, loop_spec, tensor_spec, out_path, corpus_path, mutate;
    int basepoint = -1, max_edges = 5, cases = 100, random_graphs = 8, relabelings = 20;

    auto* pairing = app.add_subcommand("pairing", "integrate a tensor along a loop");
    pairing->add_option("--graph", graph_path)->required();
    pairing->add_option("--loop", loop_spec, "signed edges, e.g. e1+,e2-")->required();
    pairing->add_option("--tensor", tensor_spec, "basis cycle factors, e.g. [b1],[b1-b2]")->required();

    auto* conc = app.add_subcommand("concyclicity", "concyclicity classes, functionals and Gram matrix");
    conc->add_option("--graph", graph_path)->required();

    auto* isos = app.add_subcommand("isometries", "isometries of H1 and their class bijections");
    isos->add_option("--a", a_path)->required();
    isos->add_option("--b", b_path)->required();

    auto* decide = app.add_subcommand("decide", "decide pointed isomorphism; exit 0 iff isomorphic");
    decide->add_option("--a", a_path)->required();
    decide->add_option("--b", b_path)->required();

    auto* recon = app.add_subcommand("reconstruct", "every reconstruction certificate between two pointed graphs");
    recon->add_option("--a", a_path)->required();
    recon->add_option("--b", b_path)->required();

    auto* hv = app.add_subcommand("harmonic-volume", "harmonic volume and its class in J2");
    hv->add_option("--graph", graph_path)->required();
    hv->add_option("--basepoint", basepoint, "overrides the file's basepoint");

    auto* nu = app.add_subcommand("nu-experiment", "injectivity of the harmonic volume over the 2-move orbit");
    nu->add_option("--graph", graph_path)->required();

    auto* orbit = app.add_subcommand("orbit", "2-move orbit with recorded move sequences");
    orbit->add_option("--graph", graph_path)->required();

    auto* self = app.add_subcommand("selftest", "invariant suite over the corpus and seeded random graphs");
    self->add_option("--corpus", corpus_path, "corpus JSON (default: shipped fixture)");
    self->add_option("--cases", cases)->check(CLI::NonNegativeNumber);
    self->add_option("--random-graphs", random_graphs)->check(CLI::NonNegativeNumber);
    self->add_option("--relabelings", relabelings)->check(CLI::NonNegativeNumber);
    self->add_option("--mutate", mutate, "inject a known bug")->check(CLI::IsMember({"sign"}));

    auto* corpus = app.add_subcommand("corpus", "enumerate connected bridgeless multigraphs");
    corpus->add_option("--max-edges", max_edges)->check(CLI::Range(0, 7));
    corpus->add_option("--out", out_path, "write to a file instead of stdout");

    CLI11_PARSE(app, argc, argv);
    if (const char* env = std::getenv("CYCLEPAIR_SEED")) {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: CYCLEPAIR_SEED is not an unsigned integer\n";
            return 2;
        }
    }
    PairingOptions popt;
    popt.k_max = cfg.k_max;
    DecideOptions dopt;
    dopt.isometry_limit = cfg.isometry_limit;
    dopt.jobs = cfg.jobs;

    try {
        if (*pairing) {
            auto pg = load_graph(graph_path);
            require_connected(pg.graph);
            auto cb = cycle_basis(pg.graph);
            auto w = parse_loop_spec(loop_spec, pg.graph.edge_count());
            require_loop_at(pg.graph, w, pg.basepoint);
            auto omega = parse_tensor_spec(tensor_spec, cb.genus());
            std::cout << to_string(integrate_word(w, omega, cb, popt)) << '\n';
        } else if (*conc) {
            auto pg = load_bridgeless(graph_path);
            auto cb = cycle_basis(pg.graph);
            auto part = concyclicity(pg.graph, cb);
            auto orient = cyclic_orientation(pg.graph);
            json functionals = json::array();
            for (const auto& f : part.functional) functionals.push_back(vector_json(f));
            emit({{"classes", part.classes},
                  {"functionals", functionals},
                  {"edge_sign", part.edge_sign},
                  {"orientation_signs", orient.signs},
                  {"gram", matrix_json(cb.gram)},
                  {"jacobian", vector_json(jacobian(cb))}});
        } else if (*isos) {
            auto a = load_bridgeless(a_path), b = load_bridgeless(b_path);
            auto ca = cycle_basis(a.graph), cb = cycle_basis(b.graph);
            if (ca.genus() != cb.genus()) {
                emit({{"isometries", json::array()}, {"truncated", false}});
                return 0;
            }
            auto pa = concyclicity(a.graph, ca), pb = concyclicity(b.graph, cb);
            auto list = enumerate_isometries(ca.gram, cb.gram, cfg.isometry_limit);
            json out = json::array();
            for (const auto& m : list.isometries) out.push_back(isometry_json(m, pa, pb));
            emit({{"isometries", out}, {"truncated", list.truncated}});
        } else if (*decide) {
            auto a = load_bridgeless(a_path), b = load_bridgeless(b_path);
            auto res = decide_pointed_isomorphism(a, b, dopt);
            if (!res.anomalies.empty())
                for (const auto& x : res.anomalies) std::cerr << "anomaly: " << x << '\n';
            if (res.certificate) {
                emit({{"isomorphic", true}, {"certificate", certificate_json(*res.certificate)}});
                return 0;
            }
            emit({{"isomorphic", false}, {"isometries", res.isometries}, {"graphic", res.graphic}, {"integral", res.integral}});
            return 1;
        } else if (*recon) {
            auto a = load_bridgeless(a_path), b = load_bridgeless(b_path);
            auto res = decide_pointed_isomorphism(make_pointed_data(a), make_pointed_data(b), dopt, true);
            json certs = json::array();
            for (const auto& c : res.all) certs.push_back(certificate_json(c));
            emit({{"isometries", res.isometries},
                  {"graphic", res.graphic},
                  {"integral", res.integral},
                  {"certificates", certs},
                  {"anomalies", res.anomalies},
                  {"truncated", res.truncated}});
        } else if (*hv) {
            auto pg = load_bridgeless(graph_path);
            if (basepoint >= 0) pg.basepoint = basepoint;
            validate(pg);
            auto cb = cycle_basis(pg.graph);
            auto j = j2_group(cb);
            auto h = harmonic_volume(pg);
            emit({{"mu", matrix_json(h.mu)}, {"invariant_factors", vector_json(j.invariant_factors())}, {"normal_form", vector_json(h.normal_form)}});
        } else if (*nu) {
            auto pg = load_bridgeless(graph_path);
            auto rep = nu_injectivity_experiment(pg.graph, cfg.budget);
            emit(nu_json(rep));
            return rep.ok() ? 0 : 1;
        } else if (*orbit) {
            auto pg = load_bridgeless(graph_path);
            json out = json::array();
            for (const auto& m : enumerate_two_move_orbit(pg.graph, cfg.budget))
                out.push_back({{"graph", graph_json(m.graph)}, {"edge_sign", m.edge_sign}, {"depth", m.depth}, {"moves", moves_json(m.moves)}});
            emit({{"budget", cfg.budget}, {"members", out}});
        } else if (*self) {
            SelftestConfig sc;
            sc.seed = cfg.seed;
            sc.cases = cases;
            sc.random_graphs = random_graphs;
            sc.relabelings = relabelings;
            sc.pairing = popt;
            if (mutate == "sign") sc.pairing.inverse_sign = 1;
            sc.corpus = load_corpus(corpus_path.empty() ? default_corpus_path() : corpus_path);
            auto rep = run_selftest(sc);
            for (const auto& w : rep.warnings) std::cerr << "warning: " << w << '\n';
            for (const auto& r : rep.results) {
                std::cout << (r.failed ? "FAIL " : "ok   ") << r.name << "  " << r.checked - r.failed << "/" << r.checked;
                if (r.failed) std::cout << "  first: " << r.first_failure;
                std::cout << '\n';
            }
            std::cout << (rep.ok() ? "selftest passed" : "selftest FAILED") << " on " << rep.graphs << " graphs, seed " << sc.seed << '\n';
            return rep.ok() ? 0 : 1;
        } else if (*corpus) {
            auto graphs = enumerate_bridgeless_graphs(max_edges);
            auto j = corpus_json(graphs, max_edges);
            if (out_path.empty()) {
                emit(j);
            } else {
                std::ofstream out(out_path);
                if (!out) throw Error(ErrorKind::Parse, "cannot write " + out_path);
                out << j.dump(1) << '\n';
                std::cerr << graphs.size() << " graphs written to " << out_path << '\n';
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
