#include "artin/deligne.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace artin {
namespace deligne {

Fraction Fraction::of(long long n, long long d) {
    if (d == 0) throw PreconditionError("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(std::llabs(n), d);
    if (g == 0) g = 1;
    return {n / g, d / g};
}

Fraction Fraction::operator+(const Fraction& o) const {
    return of(num * o.den + o.num * den, den * o.den);
}

std::string Fraction::str() const {
    if (den == 1) return std::to_string(num) + " pi";
    return std::to_string(num) + "/" + std::to_string(den) + " pi";
}

FundamentalDomain fundamental_domain(const DefiningGraph& g) {
    auto report = classify(g);
    if (!report.two_dimensional)
        throw PreconditionError("some triangle violates 1/m + 1/m' + 1/m'' <= 1");
    FundamentalDomain fd{g, barycentric_subdivision(g), {}};
    for (auto [u, v] : g.edges()) {
        int m = g.m(u, v);
        TriangleShape s;
        s.m = m;
        s.type1_angle = Fraction::of(1, 2);
        s.type2_angle = Fraction::of(1, 2 * m);
        s.apex_angle = Fraction::of(m - 1, 2 * m); // angles sum to pi
        double corner = M_PI / (2 * m);
        s.apex_to_type1 = 1.0;
        s.type1_to_type2 = 1.0 / std::tan(corner);
        s.apex_to_type2 = 1.0 / std::sin(corner);
        fd.shapes.push_back(s);
    }
    return fd;
}

std::optional<Fraction> apex_link_distance(const DefiningGraph& g, int u, int v) {
    BarycentricGraph bar = barycentric_subdivision(g);
    int n = bar.size();
    // edge (v_s, v_st) has length (1/2 - 1/2m) pi; Bellman-Ford over exact
    // fractions, the graphs are tiny
    std::vector<std::optional<Fraction>> dist(n);
    dist[bar.v_vertex(u)] = Fraction::of(0, 1);
    for (int round = 0; round < n + 1; round++) {
        bool changed = false;
        for (int e = 0; e < (int)bar.edge_vertices.size(); e++) {
            auto [a, b] = bar.edge_vertices[e];
            int m = g.m(a, b);
            Fraction w = Fraction::of(m - 1, 2 * m);
            for (int end : {a, b}) {
                int x = bar.v_vertex(end), y = bar.e_vertex(e);
                for (auto [from, to] : {std::pair(x, y), std::pair(y, x)}) {
                    if (!dist[from]) continue;
                    Fraction cand = *dist[from] + w;
                    if (!dist[to] || cand < *dist[to]) {
                        dist[to] = cand;
                        changed = true;
                    }
                }
            }
        }
        if (!changed) break;
    }
    return dist[bar.v_vertex(v)];
}

namespace {

std::vector<int> word_support(const GroupWord& w) {
    std::vector<int> out;
    for (int l : w) out.push_back(letter_vertex(l));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

dihedral::Element to_dihedral(const GroupWord& w, int u, int m) {
    std::string s;
    for (int l : w) {
        char c = (letter_vertex(l) == u) ? 'a' : 'b';
        if (letter_sign(l) < 0) c = (char)std::toupper(c);
        s += c;
    }
    return dihedral::nf(s, m);
}

GroupWord dihedral_to_word(const std::string& s, int u, int v) {
    GroupWord out;
    for (char c : s) {
        int vert = (c == 'a' || c == 'A') ? u : v;
        out.push_back(letter(vert, std::isupper((unsigned char)c) ? -1 : 1));
    }
    return out;
}

// Decide w in A_{uv} and return the dihedral value, for words supported on a
// single vertex or a single edge; nullopt = not a member (or undecided for
// larger support, which callers treat as "keep separate").
std::optional<dihedral::Element> edge_group_membership(const GroupWord& w0, int eu, int ev,
                                                       const DefiningGraph& g) {
    GroupWord w = free_reduce(w0);
    int m = g.m(eu, ev);
    if (w.empty()) return dihedral::identity(m);
    auto supp = word_support(w);
    bool inside = true;
    for (int s : supp)
        if (s != eu && s != ev) inside = false;
    if (inside) return to_dihedral(w, eu, m);

    if (supp.size() == 1) return std::nullopt; // <x> meets A_e trivially for x outside e
    if (supp.size() == 2) {
        int s0 = supp[0], s1 = supp[1];
        if (!g.adjacent(s0, s1)) return std::nullopt; // free product, no overlap beyond 1
        dihedral::Element d = to_dihedral(w, s0, g.m(s0, s1));
        if (d.is_identity()) return dihedral::identity(m);
        int shared = -1;
        for (int x : {s0, s1})
            if (x == eu || x == ev) shared = x;
        if (shared < 0) return std::nullopt;
        char in_prime = (shared == s0) ? 'a' : 'b';
        auto t = dihedral::generator_power_exponent(d, in_prime);
        if (!t) return std::nullopt;
        char in_e = (shared == eu) ? 'a' : 'b';
        return dihedral::generator_power(m, in_e, *t);
    }
    return std::nullopt;
}

// Suffixes after the longest common prefix of two free-reduced words; the
// product rep1^-1 rep2 free-reduces exactly to inverse(s1) s2.
std::pair<GroupWord, GroupWord> reduced_suffixes(const GroupWord& a, const GroupWord& b) {
    size_t p = 0;
    while (p < a.size() && p < b.size() && a[p] == b[p]) p++;
    return {GroupWord(a.begin() + p, a.end()), GroupWord(b.begin() + p, b.end())};
}

// Canonical key of the coset h<gen> in a dihedral group.
std::string dihedral_coset_key(const dihedral::Element& h, char gen) {
    dihedral::Element c = dihedral::coset_normal_form(h, gen);
    return std::to_string(c.k) + "#" + c.tail;
}

struct Builder {
    const DefiningGraph& g;
    int depth_limit;
    int radius;
    oracle::Budget budget;

    std::vector<std::pair<int, int>> edge_list;
    std::vector<DeligneBall::Chamber> chambers;
    std::map<std::string, std::vector<int>> by_key;
    std::deque<int> queue;

    struct ClassData {
        int u = -1, v = -1;
        int base = -1;
        bool expanded = false;
        std::map<int, dihedral::Element> offset;
    };
    std::vector<int> cls_parent;
    std::vector<ClassData> cls_data;
    std::map<std::pair<int, int>, int> t2_of; // (chamber, edge idx) -> class id
    std::vector<std::pair<int, int>> unresolved;
    size_t unknowns = 0;

    int cls_find(int x) {
        while (cls_parent[x] != x) x = cls_parent[x] = cls_parent[cls_parent[x]];
        return x;
    }

    int edge_index(int u, int v) const {
        for (int i = 0; i < (int)edge_list.size(); i++)
            if (edge_list[i] == std::pair(std::min(u, v), std::max(u, v))) return i;
        throw PreconditionError("no such edge");
    }

    // chambers equal in the group agree on the abelianisation and on the
    // Coxeter image, so bucketing by both is sound and collapses the scan
    std::string chamber_key(const GroupWord& rep) {
        std::string key;
        for (long long s : oracle::abelianization(rep, g)) key += std::to_string(s) + ",";
        key += "#";
        try {
            key += oracle::coxeter_key(rep, g, budget.closure_words);
        } catch (const BudgetError&) {
            key += "?"; // oversized image: all such words share one bucket
        }
        return key;
    }

    int new_chamber(GroupWord rep, int depth, int parent, int via, const std::string& off) {
        int id = (int)chambers.size();
        by_key[chamber_key(rep)].push_back(id);
        chambers.push_back({std::move(rep), depth, parent, via, off});
        queue.push_back(id);
        return id;
    }

    // Oracle-backed identification against existing chambers; same-expansion
    // candidates are distinct by dihedral normal form and are skipped.
    int find_or_create(const GroupWord& rep0, int depth, int parent, int via,
                       const std::string& off, const std::set<int>& skip) {
        GroupWord rep = free_reduce(rep0);
        std::string key = chamber_key(rep);
        std::vector<int> unknown_partners;
        auto it = by_key.find(key);
        if (it != by_key.end()) {
            for (int id : it->second) {
                if (skip.count(id)) continue;
                if (chambers[id].rep == rep) return id;
                auto res = oracle::artin_equal(rep, chambers[id].rep, g, budget);
                if (res.equal()) return id;
                if (res.verdict == oracle::Verdict::Unknown) {
                    unknown_partners.push_back(id);
                    unknowns++;
                }
            }
        }
        int id = (int)chambers.size();
        by_key[key].push_back(id);
        chambers.push_back({std::move(rep), depth, parent, via, off});
        queue.push_back(id);
        for (int p : unknown_partners) unresolved.push_back({p, id});
        return id;
    }

    // chamber joins class A with the given offset; merges classes when the
    // chamber already carries a class at this edge
    void attach(int a_id, int chamber, int eidx, const dihedral::Element& off) {
        int a = cls_find(a_id);
        auto key = std::pair(chamber, eidx);
        auto it = t2_of.find(key);
        if (it == t2_of.end()) {
            t2_of[key] = a;
            auto ins = cls_data[a].offset.emplace(chamber, off);
            if (!ins.second && !(ins.first->second == off))
                throw Error("inconsistent residue offsets");
            return;
        }
        int b = cls_find(it->second);
        if (b == a) {
            auto ins = cls_data[a].offset.emplace(chamber, off);
            if (!ins.second && !(ins.first->second == off))
                throw Error("inconsistent residue offsets");
            return;
        }
        // base_b = base_a * t with t = off * off_b(chamber)^-1
        dihedral::Element t = dihedral::mult(off, dihedral::inv(cls_data[b].offset.at(chamber)));
        for (auto& [c, h] : cls_data[b].offset) {
            dihedral::Element rebased = dihedral::mult(t, h);
            auto ins = cls_data[a].offset.emplace(c, rebased);
            if (!ins.second && !(ins.first->second == rebased))
                throw Error("inconsistent residue offsets after merge");
            t2_of[{c, eidx}] = a;
        }
        cls_data[a].expanded = cls_data[a].expanded || cls_data[b].expanded;
        cls_parent[b] = a;
    }

    int ensure_class(int chamber, int eidx) {
        auto key = std::pair(chamber, eidx);
        auto it = t2_of.find(key);
        if (it != t2_of.end()) return cls_find(it->second);
        auto [u, v] = edge_list[eidx];
        // try to join an existing class of this edge via exact membership;
        // the suffix pre-screen avoids materialising most differences
        for (int k = 0; k < (int)cls_data.size(); k++) {
            if (cls_parent[k] != k || cls_data[k].u != u || cls_data[k].v != v) continue;
            auto [s1, s2] = reduced_suffixes(chambers[cls_data[k].base].rep, chambers[chamber].rep);
            std::set<int> supp;
            for (int l : s1) supp.insert(letter_vertex(l));
            for (int l : s2) supp.insert(letter_vertex(l));
            if (supp.size() > 2) continue;
            GroupWord diff = concat(inverse(s1), s2);
            auto off = edge_group_membership(diff, u, v, g);
            if (off) {
                attach(k, chamber, eidx, *off);
                return cls_find(k);
            }
        }
        int id = (int)cls_data.size();
        cls_parent.push_back(id);
        cls_data.push_back({u, v, chamber, false, {{chamber, dihedral::identity(g.m(u, v))}}});
        t2_of[key] = id;
        return id;
    }

    void expand(int cls_id) {
        int a = cls_find(cls_id);
        ClassData& K = cls_data[a];
        if (K.expanded) return;
        int u = K.u, v = K.v, m = g.m(u, v);
        int eidx = edge_index(u, v);
        int base = K.base;
        auto dball = dihedral::ball(m, radius);
        std::set<int> created{base};
        for (const auto& [elem, word] : dball.elements) {
            if (elem.is_identity()) continue;
            GroupWord rep = concat(chambers[base].rep, dihedral_to_word(word, u, v));
            int id = find_or_create(rep, chambers[base].gallery_depth + 1, base, eidx, word,
                                    created);
            created.insert(id);
            attach(a, id, eidx, elem);
            a = cls_find(a); // attach may have merged
        }
        cls_data[a].expanded = true;
    }

    DeligneBall run() {
        auto report = classify(g);
        if (!report.large_type) throw PreconditionError("defining graph is not large-type");
        if (!report.connected) throw PreconditionError("defining graph is not connected");
        for (auto e : g.edges()) edge_list.push_back(e);

        new_chamber({}, 0, -1, -1, "");
        while (!queue.empty()) {
            int c = queue.front();
            queue.pop_front();
            for (int e = 0; e < (int)edge_list.size(); e++) ensure_class(c, e);
            if (chambers[c].gallery_depth < depth_limit)
                for (int e = 0; e < (int)edge_list.size(); e++) expand(cls_find(t2_of[{c, e}]));
        }
        return finalize();
    }

    DeligneBall finalize() {
        DeligneBall ball;
        ball.graph = g;
        ball.depth = depth_limit;
        ball.residue_radius = radius;
        ball.chambers = chambers;
        ball.unresolved = unresolved;
        ball.oracle_unknowns = unknowns;

        // depth lookup per coefficient for member_depth
        std::map<int, dihedral::Ball> balls;
        for (auto [u, v] : edge_list)
            if (!balls.count(g.m(u, v))) balls.emplace(g.m(u, v), dihedral::ball(g.m(u, v), radius));

        std::map<int, int> public_id;
        for (int k = 0; k < (int)cls_data.size(); k++) {
            if (cls_find(k) != k) continue;
            int id = (int)ball.type2.size();
            public_id[k] = id;
            DeligneBall::Type2Class out;
            out.u = cls_data[k].u;
            out.v = cls_data[k].v;
            out.base_chamber = cls_data[k].base;
            out.expanded = cls_data[k].expanded;
            const auto& db = balls.at(g.m(out.u, out.v));
            for (const auto& [c, off] : cls_data[k].offset) {
                out.members.push_back(c);
                out.offset[c] = off;
                auto it = db.depth.find(off);
                out.member_depth[c] = (it != db.depth.end()) ? it->second : radius + 1;
            }
            std::sort(out.members.begin(), out.members.end());
            ball.type2.push_back(std::move(out));
        }
        for (const auto& [key, cls] : t2_of)
            ball.type2_of[key] = public_id.at(cls_find(cls));

        // type-1 classes: residue-local coset tests plus syntactic joins
        int n = g.n(), c_count = (int)chambers.size();
        std::vector<int> uf(c_count * n);
        for (int i = 0; i < (int)uf.size(); i++) uf[i] = i;
        std::function<int(int)> find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        auto unite = [&](int a, int b) { uf[find(a)] = find(b); };

        for (const auto& K : ball.type2) {
            for (int w : {K.u, K.v}) {
                char c = (w == K.u) ? 'a' : 'b';
                std::map<std::string, int> first_in_coset;
                for (const auto& [chamber, off] : K.offset) {
                    std::string key = dihedral_coset_key(off, c);
                    auto [it, fresh] = first_in_coset.emplace(key, chamber);
                    if (!fresh) unite(it->second * n + w, chamber * n + w);
                }
            }
        }
        // cross-residue joins: chambers whose reps differ by a power of one
        // generator share that type-1 vertex
        for (int v = 0; v < n; v++) {
            std::map<GroupWord, int> stripped;
            for (int c = 0; c < c_count; c++) {
                GroupWord w = chambers[c].rep;
                while (!w.empty() && letter_vertex(w.back()) == v) w.pop_back();
                auto [it, fresh] = stripped.emplace(w, c);
                if (!fresh) unite(it->second * n + v, c * n + v);
            }
        }

        std::map<int, int> t1_id;
        for (int c = 0; c < c_count; c++)
            for (int v = 0; v < n; v++) {
                int root = find(c * n + v);
                auto it = t1_id.find(root);
                int id;
                if (it == t1_id.end()) {
                    id = (int)ball.type1.size();
                    t1_id[root] = id;
                    ball.type1.push_back({v, {}});
                } else {
                    id = it->second;
                }
                ball.type1[id].members.push_back(c);
                ball.type1_of[{c, v}] = id;
            }
        for (auto& t1 : ball.type1) {
            std::sort(t1.members.begin(), t1.members.end());
            t1.members.erase(std::unique(t1.members.begin(), t1.members.end()), t1.members.end());
        }
        return ball;
    }
};

} // namespace

int DeligneBall::edge_index(int u, int v) const {
    auto es = graph.edges();
    for (int i = 0; i < (int)es.size(); i++)
        if (es[i] == std::pair(std::min(u, v), std::max(u, v))) return i;
    throw PreconditionError("no such edge");
}

std::string DeligneBall::dump() const {
    std::ostringstream out;
    for (int c = 0; c < (int)chambers.size(); c++)
        out << "chamber " << c << " depth " << chambers[c].gallery_depth << " rep "
            << format_word(chambers[c].rep, graph) << "\n";
    for (int i = 0; i < (int)type2.size(); i++) {
        out << "vertex2 " << i << " edge " << graph.names[type2[i].u] << graph.names[type2[i].v]
            << " chambers";
        for (int c : type2[i].members) out << " " << c;
        out << "\n";
    }
    for (int i = 0; i < (int)type1.size(); i++) {
        out << "vertex1 " << i << " gen " << graph.names[type1[i].vertex] << " chambers";
        for (int c : type1[i].members) out << " " << c;
        out << "\n";
    }
    for (auto [a, b] : unresolved) out << "unresolved " << a << " " << b << "\n";
    return out.str();
}

DeligneBall develop_ball(const DefiningGraph& g, int depth, int residue_radius,
                         const oracle::Budget& budget) {
    Builder b{g, depth, residue_radius, budget};
    return b.run();
}

std::vector<std::string> validate_ball(const DeligneBall& ball) {
    std::vector<std::string> violations;
    for (int t = 0; t < (int)ball.type1.size(); t++) {
        const auto& t1 = ball.type1[t];
        for (int u = 0; u < ball.graph.n(); u++) {
            if (!ball.graph.adjacent(t1.vertex, u)) continue;
            int eidx = ball.edge_index(t1.vertex, u);
            std::set<int> roots;
            for (int c : t1.members) roots.insert(ball.type2_of.at({c, eidx}));
            if (roots.size() > 1)
                violations.push_back("type1 class " + std::to_string(t) +
                                     " spans several type2 classes at edge " +
                                     ball.graph.names[t1.vertex] + ball.graph.names[u]);
        }
    }
    return violations;
}

bool is_standard_tree_infinite(const DefiningGraph& g, int a) {
    auto nb = g.neighbors(a);
    if (nb.empty()) return false;
    if (nb.size() == 1 && g.m(a, nb[0]) % 2 == 0) return false;
    return true;
}

TreeSlice standard_tree_slice(const DeligneBall& ball, int seed_type1_class) {
    const DefiningGraph& g = ball.graph;
    TreeSlice slice;
    slice.seed_type1 = seed_type1_class;
    std::set<int> t1_seen{seed_type1_class}, t2_seen;
    std::set<std::pair<int, int>> edge_seen;
    slice.certificate[seed_type1_class] = {ball.type1[seed_type1_class].vertex, 1};
    std::deque<int> queue{seed_type1_class};

    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        auto [w, power] = slice.certificate.at(x);
        for (int c : ball.type1[x].members) {
            for (int u = 0; u < g.n(); u++) {
                if (!g.adjacent(w, u)) continue;
                int eidx = ball.edge_index(w, u);
                auto it = ball.type2_of.find({c, eidx});
                if (it == ball.type2_of.end()) continue;
                int d = it->second;
                edge_seen.insert({x, d});
                if (t2_seen.count(d)) continue;
                t2_seen.insert(d);
                const auto& K = ball.type2[d];
                int m = g.m(K.u, K.v);
                char wc = (w == K.u) ? 'a' : 'b';
                dihedral::Element off_c = K.offset.at(c);
                dihedral::Element y0 = dihedral::mult(
                    dihedral::mult(off_c, dihedral::generator_power(m, wc, power)),
                    dihedral::inv(off_c));
                for (const auto& [c2, off2] : K.offset) {
                    dihedral::Element local =
                        dihedral::mult(dihedral::mult(dihedral::inv(off2), y0), off2);
                    for (int endpoint : {K.u, K.v}) {
                        char ec = (endpoint == K.u) ? 'a' : 'b';
                        auto t = dihedral::generator_power_exponent(local, ec);
                        if (!t) continue;
                        int y = ball.type1_of.at({c2, endpoint});
                        edge_seen.insert({y, d});
                        if (!t1_seen.count(y)) {
                            t1_seen.insert(y);
                            slice.certificate[y] = {endpoint, *t};
                            queue.push_back(y);
                        }
                    }
                }
            }
        }
    }

    slice.type1_classes.assign(t1_seen.begin(), t1_seen.end());
    slice.type2_classes.assign(t2_seen.begin(), t2_seen.end());
    slice.edges.assign(edge_seen.begin(), edge_seen.end());
    slice.acyclic =
        slice.edges.size() + 1 == slice.type1_classes.size() + slice.type2_classes.size();
    return slice;
}

ResidueGirth residue_link_girth(const DeligneBall& ball, int type2_class) {
    const auto& K = ball.type2[type2_class];
    int m = ball.graph.m(K.u, K.v);
    ResidueGirth out;

    std::vector<std::pair<int, dihedral::Element>> interior;
    for (const auto& [c, off] : K.offset)
        if (K.member_depth.at(c) < ball.residue_radius) interior.push_back({c, off});
    out.interior_chambers = (int)interior.size();
    if (interior.empty()) return out;

    // coset nodes: partition interior chambers by h<a> and h<b>
    auto coset_ids = [&](char gen) {
        std::vector<int> id(interior.size(), -1);
        std::map<std::string, int> seen;
        int next = 0;
        for (size_t i = 0; i < interior.size(); i++) {
            std::string key = dihedral_coset_key(interior[i].second, gen);
            auto [it, fresh] = seen.emplace(key, next);
            if (fresh) next++;
            id[i] = it->second;
        }
        return std::pair(id, next);
    };
    (void)m;
    auto [aid, acount] = coset_ids('a');
    auto [bid, bcount] = coset_ids('b');

    Graph link((int)interior.size() + acount + bcount);
    for (size_t i = 0; i < interior.size(); i++) {
        link.add_edge((int)i, (int)interior.size() + aid[i]);
        link.add_edge((int)i, (int)interior.size() + acount + bid[i]);
    }
    out.girth = link.girth();
    out.interior_cycle_found = out.girth.has_value();
    return out;
}

} // namespace deligne
} // namespace artin
