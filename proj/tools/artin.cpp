// Command-line surface: graph analysis, hierarchy search, dihedral normal
// forms, Deligne ball dumps, intersection-graph audits, Farey balls and the
// verification suite. Exit codes: 0 ok, 1 check failure, 2 input error,
// 3 budget or size exhaustion.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "artin/deligne.hpp"
#include "artin/dihedral.hpp"
#include "artin/farey.hpp"
#include "artin/graph.hpp"
#include "artin/hierarchy.hpp"
#include "artin/intersection.hpp"
#include "artin/oracle.hpp"
#include "artin/verify.hpp"

using namespace artin;

namespace {

DefiningGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string vertex_list(const std::vector<int>& vs, const DefiningGraph& g) {
    if (vs.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < vs.size(); i++) {
        if (i) out += ",";
        out += g.names[vs[i]];
    }
    return out;
}

int cmd_analyze(const std::string& path) {
    DefiningGraph g = load_graph(path);
    auto r = classify(g);
    auto rigidity = is_star_rigid(g);
    auto autos = label_automorphisms(g);
    std::cout << "vertices: " << g.n() << "\n"
              << "edges: " << g.edges().size() << "\n"
              << "connected: " << (r.connected ? "true" : "false") << "\n"
              << "large_type: " << (r.large_type ? "true" : "false") << "\n"
              << "xxxl: " << (r.xxxl ? "true" : "false") << "\n"
              << "triangle_free: " << (r.triangle_free ? "true" : "false") << "\n"
              << "two_dimensional: " << (r.two_dimensional ? "true" : "false") << "\n"
              << "hyperbolic_type: " << (r.hyperbolic_type ? "true" : "false") << "\n";
    std::cout << "twistless: " << (r.twistless ? "true" : "false");
    if (!r.separating_vertices.empty())
        std::cout << " (separating vertex " << vertex_list(r.separating_vertices, g) << ")";
    if (!r.separating_edges.empty()) {
        std::cout << " (separating edge";
        for (auto [u, v] : r.separating_edges) std::cout << " " << g.names[u] << "-" << g.names[v];
        std::cout << ")";
    }
    std::cout << "\n";
    std::cout << "leaf_vertices: " << vertex_list(r.leaf_vertices, g) << "\n"
              << "isolated_vertices: " << vertex_list(r.isolated_vertices, g) << "\n"
              << "large_generators: " << vertex_list(r.large_generators, g) << "\n"
              << "label_automorphisms: " << autos.size() << "\n";
    std::cout << "star_rigid: " << (rigidity.rigid ? "true" : "false");
    if (!rigidity.rigid) {
        std::cout << " (witness star " << g.names[rigidity.vertex] << ", swap";
        for (int i = 0; i < g.n(); i++)
            if (rigidity.automorphism[i] != i && i < rigidity.automorphism[i])
                std::cout << " " << g.names[i] << "<->" << g.names[rigidity.automorphism[i]];
        std::cout << ")";
    }
    std::cout << "\n";
    return 0;
}

int cmd_hierarchy(const std::string& path) {
    DefiningGraph g = load_graph(path);
    auto tree = hierarchy::find_twistless_hierarchy(g);
    if (!tree) {
        std::cout << "none\n";
        return 0;
    }
    std::string reason;
    if (!hierarchy::check_hierarchy(g, **tree, &reason)) {
        std::cerr << "internal error: found hierarchy fails verification: " << reason << "\n";
        return 1;
    }
    std::cout << hierarchy::serialize(**tree, g);
    return 0;
}

int cmd_dihedral(const std::string& op, int m, const std::vector<std::string>& words) {
    auto print = [](const dihedral::Element& e) {
        std::cout << "D^" << e.k << " * " << (e.tail.empty() ? "e" : e.tail) << "\n";
    };
    if (op == "nf") {
        print(dihedral::nf(words.at(0) == "1" ? "" : words.at(0), m));
    } else if (op == "eq") {
        bool eq = dihedral::nf(words.at(0) == "1" ? "" : words.at(0), m) ==
                  dihedral::nf(words.at(1) == "1" ? "" : words.at(1), m);
        std::cout << (eq ? "equal" : "distinct") << "\n";
        return eq ? 0 : 1;
    } else if (op == "center") {
        print(dihedral::center_generator(m));
    } else {
        throw ParseError(0, "dihedral op must be nf, eq or center");
    }
    return 0;
}

int cmd_deligne(const std::string& path, int depth, int radius) {
    DefiningGraph g = load_graph(path);
    auto ball = deligne::develop_ball(g, depth, radius);
    std::cout << ball.dump();
    return 0;
}

int cmd_igraph(const std::string& path, int depth, int radius) {
    DefiningGraph g = load_graph(path);
    auto ball = deligne::develop_ball(g, depth, radius);
    auto iball = intersection::build_td_ball(ball);
    std::cout << "vertices " << iball.vertices.size() << " (T "
              << iball.kind_count(intersection::Kind::T) << ", D "
              << iball.kind_count(intersection::Kind::D) << ")\n";
    std::cout << "edges " << iball.graph.edge_count() << "\n";
    std::cout << "bipartite " << (iball.graph.is_bipartite() ? "true" : "false") << "\n";
    auto girth = iball.graph.girth();
    std::cout << "girth " << (girth ? std::to_string(*girth) : "none") << "\n";
    auto audit = intersection::six_cycle_audit(iball, ball);
    std::cout << "six_cycles total " << audit.total << " unique " << audit.unique << " multiple "
              << audit.multiple << " inconclusive " << audit.inconclusive << "\n";
    return audit.multiple == 0 ? 0 : 1;
}

int cmd_farey(long long qmax, long long window_factor) {
    auto ball = farey::farey_ball(qmax, window_factor);
    for (size_t i = 0; i < ball.vertices.size(); i++)
        for (int j : ball.graph.adj[(int)i])
            if ((int)i < j)
                std::cout << ball.vertices[i].str() << " " << ball.vertices[j].str() << "\n";
    return 0;
}

int cmd_verify(const std::string& path, const verify::Config& cfg, const std::string& out_path) {
    DefiningGraph g = load_graph(path);
    auto results = verify::run_checks(g, cfg);
    std::string report = verify::format_report(results);
    std::cout << report;
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << report;
    }
    if (verify::any_failed(results)) return 1;
    if (verify::any_budget_exhausted(results)) return 3;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"computations in large-type Artin groups"};
    app.require_subcommand(1);

    std::string path, out_path, dihedral_op;
    int depth = 1, radius = 3, m = 3;
    long long qmax = 8, window = 2;
    size_t budget = 60000;
    std::vector<std::string> words, checks;

    auto* analyze = app.add_subcommand("analyze", "classify a defining graph");
    analyze->add_option("file", path)->required();

    auto* hier = app.add_subcommand("hierarchy", "search for a twistless hierarchy");
    hier->add_option("file", path)->required();

    auto* dih = app.add_subcommand("dihedral", "rank-2 normal forms (words over a,b,A,B)");
    dih->add_option("op", dihedral_op, "nf | eq | center")->required();
    dih->add_option("--m", m, "edge coefficient")->required();
    dih->add_option("words", words, "input words ('1' for the empty word)");

    auto* del = app.add_subcommand("deligne", "develop and dump a Deligne ball");
    del->add_option("file", path)->required();
    del->add_option("--depth", depth);
    del->add_option("--residue-radius", radius);

    auto* ig = app.add_subcommand("igraph", "T/D intersection ball and audits");
    ig->add_option("file", path)->required();
    ig->add_option("--depth", depth);
    ig->add_option("--residue-radius", radius);

    auto* far = app.add_subcommand("farey", "emit a Farey ball edge list");
    far->add_option("--qmax", qmax);
    far->add_option("--window", window);

    auto* ver = app.add_subcommand("verify", "run the structural verification suite");
    ver->add_option("file", path)->required();
    ver->add_option("--depth", depth);
    ver->add_option("--residue-radius", radius);
    ver->add_option("--budget", budget, "search budget in visited words");
    ver->add_option("--checks", checks, "subset of checks to run")->delimiter(',');
    ver->add_option("--out", out_path, "also write the report to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(path);
        if (app.got_subcommand(hier)) return cmd_hierarchy(path);
        if (app.got_subcommand(dih)) return cmd_dihedral(dihedral_op, m, words);
        if (app.got_subcommand(del)) return cmd_deligne(path, depth, radius);
        if (app.got_subcommand(ig)) return cmd_igraph(path, depth, radius);
        if (app.got_subcommand(far)) return cmd_farey(qmax, window);
        if (app.got_subcommand(ver)) {
            verify::Config cfg;
            cfg.depth = depth;
            cfg.residue_radius = radius;
            cfg.budget.search_words = budget;
            cfg.checks = checks;
            return cmd_verify(path, cfg, out_path);
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const SizeError& e) {
        std::cerr << "size cap: " << e.what() << "\n";
        return 3;
    } catch (const BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const UnresolvedBallError& e) {
        std::cerr << "unresolved identifications: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
