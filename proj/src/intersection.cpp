#include "artin/intersection.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace artin {
namespace intersection {

int IntersectionBall::kind_count(Kind k) const {
    int c = 0;
    for (const auto& v : vertices)
        if (v.kind == k) c++;
    return c;
}

namespace {

struct SliceSeed {
    GroupWord rep; // representative of the seed chamber
    int vertex;    // seed generator
};

SliceSeed slice_seed(const deligne::DeligneBall& ball, const deligne::TreeSlice& slice) {
    int cls = slice.seed_type1;
    int chamber = ball.type1[cls].members.front();
    return {ball.chambers[chamber].rep, ball.type1[cls].vertex};
}

GroupWord conjugated_generator(const SliceSeed& seed, int sign) {
    GroupWord w = seed.rep;
    w.push_back(letter(seed.vertex, sign));
    return free_reduce(concat(w, inverse(seed.rep)));
}

// Two slices carry the same tree iff h v1 h^-1 = v2^{+-1} for h = g2^-1 g1;
// transporting by h keeps the words short enough for the exact routes.
oracle::Verdict same_tree(const SliceSeed& s1, const SliceSeed& s2, const DefiningGraph& g,
                          const oracle::Budget& budget) {
    GroupWord h = free_reduce(concat(inverse(s2.rep), s1.rep));
    bool unknown = false;
    for (int sign : {1, -1}) {
        GroupWord lhs = h;
        lhs.push_back(letter(s1.vertex, 1));
        GroupWord rhs{letter(s2.vertex, sign)};
        rhs = concat(rhs, h);
        auto res = oracle::artin_equal(lhs, rhs, g, budget);
        if (res.equal()) return oracle::Verdict::Equal;
        if (res.verdict == oracle::Verdict::Unknown) unknown = true;
    }
    return unknown ? oracle::Verdict::Unknown : oracle::Verdict::Distinct;
}

} // namespace

IntersectionBall build_td_ball(const deligne::DeligneBall& ball, const oracle::Budget& budget) {
    if (!ball.unresolved.empty())
        throw UnresolvedBallError("ball has unresolved chamber identifications; raise oracle budgets");

    const DefiningGraph& g = ball.graph;
    IntersectionBall out;

    // D-vertices: every type-2 class
    for (int k = 0; k < (int)ball.type2.size(); k++) {
        int id = (int)out.vertices.size();
        out.d_vertex_of_type2[k] = id;
        out.vertices.push_back(
            {Kind::D, k, "D[" + g.names[ball.type2[k].u] + g.names[ball.type2[k].v] + "]"});
    }

    // slices through every unclaimed infinite-tree seed
    std::vector<deligne::TreeSlice> slices;
    std::set<int> claimed;
    for (int cls = 0; cls < (int)ball.type1.size(); cls++) {
        if (claimed.count(cls)) continue;
        if (!deligne::is_standard_tree_infinite(g, ball.type1[cls].vertex)) continue;
        deligne::TreeSlice slice = deligne::standard_tree_slice(ball, cls);
        if (!slice.acyclic) throw Error("standard tree slice closed a cycle");
        for (int c1 : slice.type1_classes) {
            if (claimed.count(c1)) throw Error("two tree slices share a type-1 vertex");
            claimed.insert(c1);
        }
        slices.push_back(std::move(slice));
    }

    // a tree split by truncation would show up as two slices with conjugate
    // descriptors; bucket by the Coxeter image of the descriptor so only
    // plausible pairs get the full comparison
    std::map<std::string, std::vector<int>> by_image;
    std::vector<std::string> key_pos(slices.size()), key_neg(slices.size());
    for (size_t i = 0; i < slices.size(); i++) {
        SliceSeed seed = slice_seed(ball, slices[i]);
        key_pos[i] =
            oracle::reflection_cocycle_key(conjugated_generator(seed, 1), g, budget.closure_words);
        key_neg[i] =
            oracle::reflection_cocycle_key(conjugated_generator(seed, -1), g, budget.closure_words);
        by_image[key_pos[i]].push_back((int)i);
    }
    std::vector<int> slice_owner(slices.size());
    for (size_t i = 0; i < slices.size(); i++) slice_owner[i] = (int)i;
    std::function<int(int)> own = [&](int x) {
        while (slice_owner[x] != x) x = slice_owner[x] = slice_owner[slice_owner[x]];
        return x;
    };
    for (size_t i = 0; i < slices.size(); i++) {
        std::set<int> partners;
        for (const auto& key : {key_pos[i], key_neg[i]}) {
            auto it = by_image.find(key);
            if (it == by_image.end()) continue;
            for (int j : it->second)
                if ((size_t)j > i) partners.insert(j);
        }
        for (int j : partners) {
            auto verdict = same_tree(slice_seed(ball, slices[i]), slice_seed(ball, slices[j]), g,
                                     budget);
            if (verdict == oracle::Verdict::Unknown)
                throw UnresolvedBallError("tree descriptor comparison exhausted its budget");
            if (verdict == oracle::Verdict::Equal) slice_owner[own((int)i)] = own(j);
        }
    }

    // one T-vertex per owner; merged slices pool their incidences
    std::map<int, int> vertex_of_owner;
    for (size_t i = 0; i < slices.size(); i++) {
        int root = own((int)i);
        auto it = vertex_of_owner.find(root);
        int id;
        if (it == vertex_of_owner.end()) {
            id = (int)out.vertices.size();
            vertex_of_owner[root] = id;
            int sidx = (int)out.slices.size();
            out.vertices.push_back(
                {Kind::T, sidx,
                 "T[" + g.names[ball.type1[slices[i].seed_type1].vertex] + "]"});
            out.slices.push_back(slices[i]);
        } else {
            id = it->second;
            auto& target = out.slices[out.vertices[id].ref];
            for (int c : slices[i].type1_classes) target.type1_classes.push_back(c);
            for (int c : slices[i].type2_classes) target.type2_classes.push_back(c);
            for (auto e : slices[i].edges) target.edges.push_back(e);
            std::sort(target.type1_classes.begin(), target.type1_classes.end());
            std::sort(target.type2_classes.begin(), target.type2_classes.end());
        }
        for (int c1 : slices[i].type1_classes) out.t_vertex_of_type1[c1] = id;
    }

    out.graph = Graph((int)out.vertices.size());
    for (int v = 0; v < (int)out.vertices.size(); v++) {
        if (out.vertices[v].kind != Kind::T) continue;
        for (int cls : out.slices[out.vertices[v].ref].type2_classes)
            out.graph.add_edge(v, out.d_vertex_of_type2.at(cls));
    }
    if (!out.graph.is_bipartite()) throw Error("T/D ball is not bipartite");
    return out;
}

PentagonReport exotic_pentagon(const DefiningGraph& g, int a, int b, int c) {
    for (auto [u, v] : {std::pair(a, b), std::pair(a, c), std::pair(b, c)})
        if (!g.adjacent(u, v) || g.m(u, v) != 3)
            throw PreconditionError("exotic pentagon needs a (3,3,3) triangle");

    auto word = [&](std::initializer_list<int> vs) {
        GroupWord w;
        for (int v : vs) w.push_back(letter(v, 1));
        return w;
    };
    GroupWord za = word({a, b, a, b, a, b});        // z_ab = Delta_ab^2
    GroupWord e1 = word({a, b, c, a, b, c});        // abcabc
    GroupWord e2 = word({b, a, c, b, a, c});        // bacbac
    GroupWord ga = word({a}), gb = word({b});

    PentagonReport report;
    report.vertices = {{Kind::T, a, "T[" + g.names[a] + "]"},
                       {Kind::D, -1, "D[z_" + g.names[a] + g.names[b] + "]"},
                       {Kind::T, b, "T[" + g.names[b] + "]"},
                       {Kind::E, -1, "E[" + g.names[a] + g.names[b] + g.names[c] + "...]"},
                       {Kind::E, -1, "E[" + g.names[b] + g.names[a] + g.names[c] + "...]"}};
    report.fragment = Graph(5);
    for (int i = 0; i < 5; i++) report.fragment.add_edge(i, (i + 1) % 5);

    std::vector<std::pair<GroupWord, GroupWord>> pairs = {
        {ga, za}, // a with the centre of A_ab
        {za, gb}, // the centre with b
        {gb, e1}, // b with abcabc
        {e1, e2}, // abcabc with bacbac
        {e2, ga}, // bacbac with a
    };
    report.all_certified = true;
    for (auto& [x, y] : pairs) {
        bool ok = oracle::positive_equal(concat(x, y), concat(y, x), g);
        report.certified.push_back(ok);
        report.edge_certificates.push_back(format_word(x, g) + " * " + format_word(y, g) + " = " +
                                           format_word(y, g) + " * " + format_word(x, g));
        if (!ok) report.all_certified = false;
    }
    if (!report.all_certified) throw CertificationError("pentagon commutation failed");
    return report;
}

namespace {

struct IsoSearch {
    const Graph& pattern;
    const std::vector<Kind>& pkind;
    const Graph& host;
    const std::vector<IVertex>& hvertices;
    size_t budget;
    bool stop_at_first;
    size_t steps = 0;
    std::vector<int> order;      // pattern vertices, connectivity-first
    std::vector<int> assignment; // pattern vertex -> host vertex
    std::vector<char> used;
    std::vector<std::vector<int>> results;

    void prepare() {
        int n = pattern.n;
        std::vector<char> placed(n, 0);
        // BFS order from the highest-degree vertex, so each vertex after the
        // first has a placed neighbour and the anchor is most constrained
        std::vector<int> roots(n);
        for (int i = 0; i < n; i++) roots[i] = i;
        std::sort(roots.begin(), roots.end(),
                  [&](int x, int y) { return pattern.degree(x) > pattern.degree(y); });
        for (int s : roots) {
            if (placed[s]) continue;
            std::vector<int> queue{s};
            placed[s] = 1;
            for (size_t q = 0; q < queue.size(); q++) {
                order.push_back(queue[q]);
                for (int w : pattern.adj[queue[q]])
                    if (!placed[w]) {
                        placed[w] = 1;
                        queue.push_back(w);
                    }
            }
        }
        assignment.assign(n, -1);
        used.assign(host.n, 0);
    }

    bool compatible(int pv, int hv) {
        if (used[hv]) return false;
        if (pkind[pv] != hvertices[hv].kind) return false;
        if (host.degree(hv) < pattern.degree(pv)) return false;
        for (int pw : pattern.adj[pv]) {
            if (assignment[pw] == -1) continue;
            if (!host.has_edge(hv, assignment[pw])) return false;
        }
        return true;
    }

    void run(size_t at) {
        if (++steps > budget) throw SizeError("subgraph search exceeded its node budget");
        if (at == order.size()) {
            results.push_back(assignment);
            return;
        }
        int pv = order[at];
        // candidates come from the host neighbourhood of an already placed
        // pattern neighbour whenever one exists
        const std::vector<int>* candidates = nullptr;
        std::vector<int> all;
        for (int pw : pattern.adj[pv])
            if (assignment[pw] != -1) {
                candidates = &host.adj[assignment[pw]];
                break;
            }
        if (!candidates) {
            all.resize(host.n);
            for (int i = 0; i < host.n; i++) all[i] = i;
            candidates = &all;
        }
        for (int hv : *candidates) {
            if (!compatible(pv, hv)) continue;
            assignment[pv] = hv;
            used[hv] = 1;
            run(at + 1);
            used[hv] = 0;
            assignment[pv] = -1;
            if (stop_at_first && !results.empty()) return;
        }
    }
};

} // namespace

std::vector<std::vector<int>> typed_subgraph_embeddings(const TypedPattern& pattern,
                                                        const IntersectionBall& iball,
                                                        size_t node_budget, bool stop_at_first) {
    IsoSearch search{pattern.graph, pattern.kinds, iball.graph, iball.vertices,
                     node_budget,   stop_at_first};
    search.prepare();
    search.run(0);
    return search.results;
}

std::vector<Embedding> find_characteristic_subgraphs(const IntersectionBall& iball,
                                                     const DefiningGraph& gprime,
                                                     size_t node_budget) {
    BarycentricGraph bar = barycentric_subdivision(gprime);
    TypedPattern pattern;
    pattern.graph = bar.graph;
    pattern.kinds.assign(bar.size(), Kind::D);
    for (int v = 0; v < bar.n_vertex; v++) pattern.kinds[v] = Kind::T;

    std::vector<Embedding> out;
    for (const auto& map : typed_subgraph_embeddings(pattern, iball, node_budget, false)) {
        Embedding e;
        for (int v = 0; v < bar.n_vertex; v++) e.t_vertices.push_back(map[v]);
        for (int i = 0; i < (int)bar.edge_vertices.size(); i++)
            e.d_vertices.push_back(map[bar.e_vertex(i)]);
        out.push_back(std::move(e));
    }
    return out;
}

Witness fundamentality_witness(const IntersectionBall& iball, const Embedding& embedding,
                               const deligne::DeligneBall& ball) {
    const DefiningGraph& g = ball.graph;
    auto edge_count = (int)g.edges().size();

    Witness w;
    for (int c = 0; c < (int)ball.chambers.size(); c++) {
        std::set<int> chamber_classes;
        for (int e = 0; e < edge_count; e++) {
            auto it = ball.type2_of.find({c, e});
            if (it != ball.type2_of.end()) chamber_classes.insert(it->second);
        }
        bool ok = true;
        for (int dv : embedding.d_vertices) {
            int cls = iball.vertices[dv].ref;
            if (!chamber_classes.count(cls)) {
                ok = false;
                break;
            }
        }
        for (size_t i = 0; ok && i < embedding.t_vertices.size(); i++) {
            const auto& slice = iball.slices[iball.vertices[embedding.t_vertices[i]].ref];
            bool touches = false;
            for (int v = 0; v < g.n() && !touches; v++) {
                auto it = ball.type1_of.find({c, v});
                if (it == ball.type1_of.end()) continue;
                if (std::binary_search(slice.type1_classes.begin(), slice.type1_classes.end(),
                                       it->second))
                    touches = true;
            }
            if (!touches) ok = false;
        }
        if (ok) {
            w.count++;
            if (w.chamber == -1) w.chamber = c;
        }
    }
    w.kind = (w.count == 0)   ? Witness::Kind::None
             : (w.count == 1) ? Witness::Kind::Unique
                              : Witness::Kind::Multiple;
    return w;
}

SixCycleReport six_cycle_audit(const IntersectionBall& iball, const deligne::DeligneBall& ball) {
    SixCycleReport report;
    for (const auto& cycle : iball.graph.embedded_cycles(6)) {
        report.total++;
        Embedding e;
        for (int v : cycle) {
            if (iball.vertices[v].kind == Kind::T)
                e.t_vertices.push_back(v);
            else
                e.d_vertices.push_back(v);
        }
        Witness w = fundamentality_witness(iball, e, ball);
        switch (w.kind) {
            case Witness::Kind::Unique: report.unique++; break;
            case Witness::Kind::Multiple: report.multiple++; break;
            case Witness::Kind::None: report.inconclusive++; break;
        }
    }
    return report;
}

TypedPattern g1_pattern(int n) {
    // n hexagons fanned cyclically around a central D-vertex: consecutive
    // hexagons share the spoke trees
    TypedPattern p;
    // 0 = central D; 1..n = spoke T; then per hexagon (d, u, d) privates
    int total = 1 + n + 3 * n;
    p.graph = Graph(total);
    p.kinds.assign(total, Kind::T);
    p.kinds[0] = Kind::D;
    auto spoke = [&](int i) { return 1 + ((i % n) + n) % n; };
    int next = 1 + n;
    for (int i = 0; i < n; i++) {
        int d1 = next++, u = next++, d2 = next++;
        p.kinds[d1] = Kind::D;
        p.kinds[d2] = Kind::D;
        p.graph.add_edge(spoke(i), 0);
        p.graph.add_edge(spoke(i), d1);
        p.graph.add_edge(d1, u);
        p.graph.add_edge(u, d2);
        p.graph.add_edge(d2, spoke(i + 1));
    }
    return p;
}

TypedPattern g2_pattern(int n) {
    // n hexagons around a central T-vertex; the fan closes across the spoke
    // D-vertex, leaving the two outer trees at the seam distinct
    TypedPattern p;
    // 0 = central T; spokes d_0..d_{n-1}; outer t_0..t_n; privates w_1..w_n
    int total = 1 + n + (n + 1) + n;
    p.graph = Graph(total);
    p.kinds.assign(total, Kind::T);
    auto spoke_d = [&](int i) { return 1 + ((i % n) + n) % n; };
    auto outer_t = [&](int i) { return 1 + n + i; };
    auto private_d = [&](int i) { return 1 + n + (n + 1) + i - 1; };
    for (int i = 0; i < n; i++) p.kinds[spoke_d(i)] = Kind::D;
    for (int i = 1; i <= n; i++) p.kinds[private_d(i)] = Kind::D;
    for (int i = 1; i <= n; i++) {
        p.graph.add_edge(0, spoke_d(i - 1));
        p.graph.add_edge(spoke_d(i - 1), outer_t(i - 1));
        p.graph.add_edge(outer_t(i - 1), private_d(i));
        p.graph.add_edge(private_d(i), outer_t(i));
        p.graph.add_edge(outer_t(i), spoke_d(i % n));
    }
    return p;
}

ProbeReport g1_g2_probe(const IntersectionBall& iball, const deligne::DeligneBall& ball, int a,
                        int b, int c, size_t node_budget) {
    const DefiningGraph& g = ball.graph;
    for (auto [u, v] : {std::pair(a, b), std::pair(a, c), std::pair(b, c)})
        if (!g.adjacent(u, v)) throw PreconditionError("probe needs a triangle");
    int n = g.m(a, b);

    ProbeReport report;
    report.n = n;

    // explicit Y: prefixes of the Garside element along the <a,b> residue,
    // prefix_i = first i letters of the Delta spelling that starts with a
    int eab = ball.edge_index(a, b);
    int base_ab = ball.type2_of.at({0, eab});
    const auto& K = ball.type2[base_ab];
    std::vector<int> y_chambers;
    std::vector<dihedral::Element> prefixes;
    {
        char a_char = (a == K.u) ? 'a' : 'b';
        std::string delta = dihedral::delta_word(g.m(a, b), a_char);
        for (int i = 0; i < n; i++)
            prefixes.push_back(dihedral::nf(delta.substr(0, i), g.m(a, b)));
    }
    bool y_ok = true;
    for (const auto& e : prefixes) {
        int found = -1;
        for (const auto& [chamber, off] : K.offset)
            if (off == e) found = chamber;
        if (found < 0) {
            y_ok = false;
            break;
        }
        y_chambers.push_back(found);
    }
    if (y_ok) {
        // the hexagons of consecutive Y chambers must share the central
        // D-vertex and pairwise spoke trees; verify all hexagon edges exist
        std::set<std::pair<int, int>> need;
        for (int i = 0; i < n && y_ok; i++) {
            int chamber = y_chambers[i];
            std::vector<int> ds, ts;
            for (auto [u, v] : g.edges()) {
                auto it = ball.type2_of.find({chamber, ball.edge_index(u, v)});
                if (it == ball.type2_of.end()) {
                    y_ok = false;
                    break;
                }
                ds.push_back(iball.d_vertex_of_type2.at(it->second));
            }
            for (int v : {a, b, c}) {
                auto it = ball.type1_of.find({chamber, v});
                if (it == ball.type1_of.end() || !iball.t_vertex_of_type1.count(it->second)) {
                    y_ok = false;
                    break;
                }
                ts.push_back(iball.t_vertex_of_type1.at(it->second));
            }
            if (!y_ok) break;
            // chamber hexagon: every type-1 vertex lies on both its residues
            for (int v : {a, b, c})
                for (int u : {a, b, c}) {
                    if (u == v || !g.adjacent(u, v)) continue;
                    int t = iball.t_vertex_of_type1.at(ball.type1_of.at({chamber, v}));
                    int d = iball.d_vertex_of_type2.at(
                        ball.type2_of.at({chamber, ball.edge_index(u, v)}));
                    need.insert({t, d});
                }
        }
        for (auto [t, d] : need)
            if (!iball.graph.has_edge(t, d)) y_ok = false;
    }
    report.y_construction_found = y_ok;

    report.g1_embeddings =
        typed_subgraph_embeddings(g1_pattern(n), iball, node_budget, true).size();
    report.g2_embeddings =
        typed_subgraph_embeddings(g2_pattern(n), iball, node_budget, false).size();
    return report;
}

} // namespace intersection
} // namespace artin
