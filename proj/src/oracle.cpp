#include "artin/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace artin {
namespace oracle {

namespace {

// Braid-move neighbours of a word: replace an alternating factor
// u v u ... (m letters, all same sign) by the flipped spelling.
template <typename Fn>
void for_each_braid_move(const GroupWord& w, const DefiningGraph& g, Fn&& fn) {
    for (size_t pos = 0; pos < w.size(); pos++) {
        int v0 = letter_vertex(w[pos]);
        int s0 = letter_sign(w[pos]);
        if (pos + 1 >= w.size()) continue;
        int v1 = letter_vertex(w[pos + 1]);
        int s1 = letter_sign(w[pos + 1]);
        if (s1 != s0 || v1 == v0 || !g.adjacent(v0, v1)) continue;
        int m = g.m(v0, v1);
        if (pos + m > w.size()) continue;
        bool ok = true;
        for (int i = 2; i < m && ok; i++) {
            int want = (i % 2 == 0) ? v0 : v1;
            if (letter_vertex(w[pos + i]) != want || letter_sign(w[pos + i]) != s0) ok = false;
        }
        if (!ok) continue;
        GroupWord next = w;
        for (int i = 0; i < m; i++) {
            int want = (i % 2 == 0) ? v1 : v0;
            next[pos + i] = letter(want, s0);
        }
        fn(std::move(next));
    }
}

std::set<GroupWord> braid_closure(const GroupWord& w, const DefiningGraph& g, size_t budget) {
    std::set<GroupWord> seen{w};
    std::deque<GroupWord> queue{w};
    while (!queue.empty()) {
        GroupWord cur = queue.front();
        queue.pop_front();
        for_each_braid_move(cur, g, [&](GroupWord next) {
            if (seen.insert(next).second) {
                if (seen.size() > budget) throw BudgetError("braid closure exceeded budget");
                queue.push_back(std::move(next));
            }
        });
    }
    return seen;
}

} // namespace

std::vector<int> abelianization_classes(const DefiningGraph& g) {
    std::vector<int> parent(g.n());
    for (int i = 0; i < g.n(); i++) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : g.edges())
        if (g.m(u, v) % 2 == 1) parent[find(u)] = find(v);
    std::vector<int> cls(g.n(), -1);
    int next = 0;
    for (int i = 0; i < g.n(); i++) {
        int r = find(i);
        if (cls[r] == -1) cls[r] = next++;
        cls[i] = cls[r];
    }
    return cls;
}

std::vector<long long> abelianization(const GroupWord& w, const DefiningGraph& g) {
    auto cls = abelianization_classes(g);
    int nclasses = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
    std::vector<long long> sums(nclasses, 0);
    for (int l : w) sums[cls[letter_vertex(l)]] += letter_sign(l);
    return sums;
}

namespace {

// Tits: repeatedly search the braid-move closure for a word with an adjacent
// cancelling pair; deleting it strictly shortens the word.
GroupWord coxeter_reduce(GroupWord w, const DefiningGraph& g, size_t budget) {
    for (int& l : w) l = std::abs(l); // s = s^-1 in the Coxeter quotient
    for (;;) {
        auto closure = braid_closure(w, g, budget);
        bool deleted = false;
        for (const auto& cand : closure) {
            for (size_t i = 0; i + 1 < cand.size(); i++) {
                if (cand[i] != cand[i + 1]) continue;
                GroupWord shorter(cand.begin(), cand.begin() + i);
                shorter.insert(shorter.end(), cand.begin() + i + 2, cand.end());
                w = shorter;
                deleted = true;
                break;
            }
            if (deleted) break;
        }
        if (!deleted) return w;
    }
}

} // namespace

bool coxeter_equal(const GroupWord& w1, const GroupWord& w2, const DefiningGraph& g,
                   size_t closure_budget) {
    GroupWord prod = concat(w1, inverse(w2));
    return coxeter_reduce(prod, g, closure_budget).empty();
}

std::string coxeter_key(const GroupWord& w, const DefiningGraph& g, size_t closure_budget) {
    GroupWord reduced = coxeter_reduce(w, g, closure_budget);
    if (!reduced.empty()) reduced = *braid_closure(reduced, g, closure_budget).begin();
    std::string out;
    for (int l : reduced) {
        out += g.names[letter_vertex(l)];
        out += '.';
    }
    return out;
}

std::string reflection_cocycle_key(const GroupWord& w, const DefiningGraph& g,
                                   size_t closure_budget) {
    GroupWord prefix; // W-part, kept Tits-reduced
    std::map<std::string, long long> counts;
    for (int l : w) {
        int v = letter_vertex(l);
        // reflection w v w^-1 indexed by its canonical Coxeter spelling
        GroupWord refl = prefix;
        refl.push_back(letter(v, 1));
        for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) refl.push_back(*it);
        counts[coxeter_key(refl, g, closure_budget)] += letter_sign(l);
        prefix.push_back(letter(v, 1));
        prefix = coxeter_reduce(prefix, g, closure_budget);
    }
    std::string out = coxeter_key(prefix, g, closure_budget) + "|";
    for (const auto& [key, count] : counts) {
        if (count == 0) continue;
        out += key + "=" + std::to_string(count) + ";";
    }
    return out;
}

bool positive_equal(const GroupWord& w1, const GroupWord& w2, const DefiningGraph& g,
                    size_t closure_budget) {
    if (!is_positive(w1) || !is_positive(w2)) throw PreconditionError("positive words required");
    if (w1.size() != w2.size()) return false;
    if (w1 == w2) return true;
    return braid_closure(w1, g, closure_budget).count(w2) > 0;
}

namespace {

// Induced subgraph bookkeeping for the amalgam recursion.
struct SubTree {
    const DefiningGraph* g;
    std::vector<int> vertices; // ambient vertex ids, sorted
    bool contains(int v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (size_t i = 0; i < vertices.size(); i++)
            for (size_t j = i + 1; j < vertices.size(); j++)
                if (g->adjacent(vertices[i], vertices[j]))
                    out.emplace_back(vertices[i], vertices[j]);
        return out;
    }
    int degree(int v) const {
        int d = 0;
        for (int u : vertices)
            if (u != v && g->adjacent(u, v)) d++;
        return d;
    }
};

dihedral::Element to_dihedral(const GroupWord& w, int u, int m) {
    std::string s;
    for (int l : w) {
        int x = letter_vertex(l);
        char c = (x == u) ? 'a' : 'b';
        if (letter_sign(l) < 0) c = (char)std::toupper(c);
        s += c;
    }
    return dihedral::nf(s, m);
}

bool forest_trivial_impl(const GroupWord& w, const SubTree& t);

// Is `w` (supported in `t`) equal to power^exp of `v`? exp is pinned by the
// abelianisation class sums, so one recursive equality decides it.
bool equals_generator_power(const GroupWord& w, int v, long long exp, const SubTree& t) {
    GroupWord rhs;
    for (long long i = 0; i < std::llabs(exp); i++) rhs.push_back(letter(v, exp >= 0 ? 1 : -1));
    return forest_trivial_impl(free_reduce(concat(w, inverse(rhs))), t);
}

// Pinned exponent of v in w under the abelianisation of the induced graph.
long long pinned_exponent(const GroupWord& w, int v, const SubTree& t) {
    // merge classes across odd edges of the induced graph
    std::map<int, int> parent;
    for (int x : t.vertices) parent[x] = x;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : t.edges())
        if (t.g->m(a, b) % 2 == 1) parent[find(a)] = find(b);
    long long sum = 0;
    int vclass = find(v);
    for (int l : w)
        if (find(letter_vertex(l)) == vclass) sum += letter_sign(l);
    return sum;
}

bool forest_trivial_impl(const GroupWord& w0, const SubTree& t) {
    GroupWord w = free_reduce(w0);
    if (w.empty()) return true;

    // Split by connected component of the induced forest; free-product
    // reduction: a syllable sequence is trivial iff it collapses completely.
    std::vector<int> comp_of(t.g->n(), -1);
    {
        int c = 0;
        for (int s : t.vertices) {
            if (comp_of[s] != -1) continue;
            std::deque<int> queue{s};
            comp_of[s] = c;
            while (!queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (int x : t.vertices)
                    if (comp_of[x] == -1 && t.g->adjacent(u, x)) {
                        comp_of[x] = c;
                        queue.push_back(x);
                    }
            }
            c++;
        }
    }

    // component-wise syllables
    std::vector<std::pair<int, GroupWord>> syll;
    for (int l : w) {
        int c = comp_of[letter_vertex(l)];
        if (syll.empty() || syll.back().first != c) syll.push_back({c, {}});
        syll.back().second.push_back(l);
    }

    if (syll.size() > 1) {
        // free product: drop trivial syllables, merge, repeat
        auto component_vertices = [&](int c) {
            SubTree sub{t.g, {}};
            for (int v : t.vertices)
                if (comp_of[v] == c) sub.vertices.push_back(v);
            return sub;
        };
        for (;;) {
            bool changed = false;
            for (size_t i = 0; i < syll.size(); i++) {
                if (forest_trivial_impl(syll[i].second, component_vertices(syll[i].first))) {
                    syll.erase(syll.begin() + i);
                    if (i > 0 && i < syll.size() && syll[i - 1].first == syll[i].first) {
                        syll[i - 1].second = free_reduce(concat(syll[i - 1].second, syll[i].second));
                        syll.erase(syll.begin() + i);
                    }
                    changed = true;
                    break;
                }
            }
            if (!changed) break;
        }
        return syll.empty();
    }

    // Single component: restrict to it.
    SubTree tree{t.g, {}};
    for (int v : t.vertices)
        if (comp_of[v] == comp_of[letter_vertex(w[0])]) tree.vertices.push_back(v);

    auto es = tree.edges();
    if (es.empty()) {
        // single vertex, infinite cyclic
        long long sum = 0;
        for (int l : w) sum += letter_sign(l);
        return sum == 0;
    }
    if (es.size() == 1) {
        auto [u, v] = es[0];
        return to_dihedral(w, u, t.g->m(u, v)).is_identity();
    }

    // Amalgam split along a leaf edge: Q = A_edge(leaf, hinge), P = rest,
    // amalgamated over <hinge>.
    int leaf = -1, hinge = -1;
    for (int v : tree.vertices)
        if (tree.degree(v) == 1) {
            leaf = v;
            break;
        }
    for (int u : tree.vertices)
        if (u != leaf && t.g->adjacent(u, leaf)) hinge = u;

    SubTree p_side{t.g, {}};
    for (int v : tree.vertices)
        if (v != leaf) p_side.vertices.push_back(v);
    SubTree q_side{t.g, {std::min(leaf, hinge), std::max(leaf, hinge)}};
    int m = t.g->m(leaf, hinge);

    // alternating syllables: Q-blocks are maximal runs over {leaf, hinge}
    // containing at least one leaf letter; the rest are P-blocks
    struct Syllable {
        bool in_q;
        GroupWord word;
    };
    std::vector<Syllable> seq;
    for (int l : w) {
        int v = letter_vertex(l);
        bool q_letter = (v == leaf);
        if (seq.empty()) {
            seq.push_back({q_letter, {l}});
        } else if (q_letter == seq.back().in_q || v == hinge) {
            seq.back().word.push_back(l);
        } else {
            seq.push_back({q_letter, {l}});
        }
    }

    auto merge_at = [&](size_t i) {
        // syllable i became a hinge power; fold into a neighbour
        if (i + 1 < seq.size()) {
            seq[i + 1].word = free_reduce(concat(seq[i].word, seq[i + 1].word));
            seq.erase(seq.begin() + i);
        } else if (i > 0) {
            seq[i - 1].word = free_reduce(concat(seq[i - 1].word, seq[i].word));
            seq.erase(seq.begin() + i);
        } else {
            seq.erase(seq.begin() + i);
        }
    };

    for (;;) {
        // merge adjacent same-type syllables
        for (size_t i = 0; i + 1 < seq.size();) {
            if (seq[i].in_q == seq[i + 1].in_q) {
                seq[i].word = free_reduce(concat(seq[i].word, seq[i + 1].word));
                seq.erase(seq.begin() + i + 1);
            } else {
                i++;
            }
        }
        if (seq.empty()) return true;
        if (seq.size() == 1) {
            if (seq[0].in_q) {
                auto [u, v] = std::pair(q_side.vertices[0], q_side.vertices[1]);
                return to_dihedral(seq[0].word, u, m).is_identity();
            }
            return forest_trivial_impl(seq[0].word, p_side);
        }
        // look for a syllable lying in the amalgamated <hinge>
        bool reduced = false;
        for (size_t i = 0; i < seq.size(); i++) {
            long long exp;
            bool in_c;
            if (seq[i].in_q) {
                auto [u, v] = std::pair(q_side.vertices[0], q_side.vertices[1]);
                dihedral::Element e = to_dihedral(seq[i].word, u, m);
                char hc = (hinge == u) ? 'a' : 'b';
                auto power = dihedral::generator_power_exponent(e, hc);
                in_c = power.has_value();
                exp = in_c ? *power : 0;
            } else {
                exp = pinned_exponent(seq[i].word, hinge, p_side);
                in_c = equals_generator_power(seq[i].word, hinge, exp, p_side);
            }
            if (in_c) {
                GroupWord hw;
                for (long long j = 0; j < std::llabs(exp); j++)
                    hw.push_back(letter(hinge, exp >= 0 ? 1 : -1));
                seq[i].word = hw;
                seq[i].in_q = !seq[i].in_q; // hinge powers live in both sides
                merge_at(i);
                reduced = true;
                break;
            }
        }
        if (!reduced) return false; // reduced sequence of length >= 2
    }
}

} // namespace

bool forest_trivial(const GroupWord& w, const DefiningGraph& g) {
    Graph sk = g.skeleton();
    if (sk.edge_count() > 0) {
        // forest check: every component has |E| = |V| - 1
        auto comp = sk.components();
        int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
        std::vector<int> vcount(ncomp, 0), ecount(ncomp, 0);
        for (int v = 0; v < g.n(); v++) vcount[comp[v]]++;
        for (auto [u, v] : g.edges()) ecount[comp[u]]++;
        for (int c = 0; c < ncomp; c++)
            if (ecount[c] != vcount[c] - 1) throw PreconditionError("defining graph is not a forest");
    }
    SubTree all{&g, {}};
    for (int v = 0; v < g.n(); v++) all.vertices.push_back(v);
    return forest_trivial_impl(w, all);
}

bool tree_equal(const GroupWord& w1, const GroupWord& w2, const DefiningGraph& g) {
    Graph sk = g.skeleton();
    if (!sk.connected() || sk.edge_count() != g.n() - 1)
        throw PreconditionError("defining graph is not a tree");
    return forest_trivial(free_reduce(concat(w1, inverse(w2))), g);
}

namespace {

std::vector<int> support(const GroupWord& w) {
    std::vector<int> out;
    for (int l : w) out.push_back(letter_vertex(l));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool induced_is_forest(const DefiningGraph& g, const std::vector<int>& vs) {
    // cycle detection on the induced subgraph via union-find
    std::map<int, int> parent;
    for (int v : vs) parent[v] = v;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i < vs.size(); i++)
        for (size_t j = i + 1; j < vs.size(); j++)
            if (g.adjacent(vs[i], vs[j])) {
                int a = find(vs[i]), b = find(vs[j]);
                if (a == b) return false;
                parent[a] = b;
            }
    return true;
}

// Moves for the bounded search: free reduction, free insertion up to the
// length cap, braid move on a uniform-sign alternating factor.
template <typename Fn>
void for_each_search_move(const GroupWord& w, const DefiningGraph& g, size_t length_cap, Fn&& fn) {
    for (size_t i = 0; i + 1 < w.size(); i++)
        if (w[i] == -w[i + 1]) {
            GroupWord next(w.begin(), w.begin() + i);
            next.insert(next.end(), w.begin() + i + 2, w.end());
            fn(std::move(next));
        }
    if (w.size() + 2 <= length_cap) {
        for (size_t i = 0; i <= w.size(); i++)
            for (int v = 0; v < g.n(); v++)
                for (int s : {1, -1}) {
                    GroupWord next(w.begin(), w.begin() + i);
                    next.push_back(letter(v, s));
                    next.push_back(letter(v, -s));
                    next.insert(next.end(), w.begin() + i, w.end());
                    fn(std::move(next));
                }
    }
    for_each_braid_move(w, g, fn);
}

Result bounded_search(const GroupWord& w1, const GroupWord& w2, const DefiningGraph& g,
                      const Budget& budget) {
    size_t max_m = 2;
    for (auto [u, v] : g.edges()) max_m = std::max(max_m, (size_t)g.m(u, v));
    size_t length_cap = std::max(w1.size(), w2.size()) * 2 + 2 * max_m;

    std::unordered_set<GroupWord, WordHash> from1{w1}, from2{w2};
    std::deque<GroupWord> q1{w1}, q2{w2};
    size_t visited = 2;
    if (w1 == w2) return {Verdict::Equal, "search", visited};
    while (!q1.empty() || !q2.empty()) {
        if (visited > budget.search_words) return {Verdict::Unknown, "search budget exhausted", visited};
        for (auto* side : {&q1, &q2}) {
            auto& self = (side == &q1) ? from1 : from2;
            auto& other = (side == &q1) ? from2 : from1;
            if (side->empty()) continue;
            GroupWord cur = side->front();
            side->pop_front();
            bool found = false;
            for_each_search_move(cur, g, length_cap, [&](GroupWord next) {
                if (found || self.count(next)) return;
                if (other.count(next)) {
                    found = true;
                    return;
                }
                self.insert(next);
                visited++;
                side->push_back(std::move(next));
            });
            if (found) return {Verdict::Equal, "search", visited};
        }
    }
    return {Verdict::Distinct, "search exhausted", visited};
}

} // namespace

namespace {

// 2x2 matrices over F_p
struct Mat2 {
    int p;
    std::array<int, 4> a; // row major

    bool operator==(const Mat2& o) const { return a == o.a; }
};

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
    auto& u = x.a;
    auto& v = y.a;
    int p = x.p;
    return {p,
            {(u[0] * v[0] + u[1] * v[2]) % p, (u[0] * v[1] + u[1] * v[3]) % p,
             (u[2] * v[0] + u[3] * v[2]) % p, (u[2] * v[1] + u[3] * v[3]) % p}};
}

int mod_inv(int x, int p) {
    int r = 1;
    for (int e = p - 2; e; e >>= 1, x = x * x % p)
        if (e & 1) r = r * x % p;
    return r;
}

Mat2 mat_inv(const Mat2& x) {
    int p = x.p;
    int det = ((x.a[0] * x.a[3] - x.a[1] * x.a[2]) % p + p) % p;
    int d = mod_inv(det, p);
    return {p,
            {x.a[3] * d % p, (p - x.a[1] % p) * d % p, (p - x.a[2] % p) * d % p, x.a[0] * d % p}};
}

Mat2 alternating_product(const Mat2& x, const Mat2& y, int m) {
    Mat2 out{x.p, {1, 0, 0, 1}};
    for (int i = 0; i < m; i++) out = mat_mul(out, (i % 2 == 0) ? x : y);
    return out;
}

Mat2 evaluate(const std::vector<Mat2>& hom, const GroupWord& w) {
    Mat2 acc{hom[0].p, {1, 0, 0, 1}};
    for (int l : w) {
        const Mat2& m = hom[letter_vertex(l)];
        acc = mat_mul(acc, letter_sign(l) > 0 ? m : mat_inv(m));
    }
    return acc;
}

struct QuotientCache {
    std::mutex mutex;
    std::map<std::string, std::vector<std::vector<Mat2>>> found; // per graph
};

QuotientCache& quotient_cache() {
    static QuotientCache cache;
    return cache;
}

// Deterministic DFS over generator matrices satisfying every edge relation,
// looking for an assignment separating the two words.
bool search_separating_hom(const GroupWord& w1, const GroupWord& w2, const DefiningGraph& g,
                           std::vector<Mat2>& out) {
    for (int p : {3, 5, 7}) {
        std::vector<Mat2> units;
        for (int a0 = 0; a0 < p; a0++)
            for (int a1 = 0; a1 < p; a1++)
                for (int a2 = 0; a2 < p; a2++)
                    for (int a3 = 0; a3 < p; a3++)
                        if ((a0 * a3 - a1 * a2) % p != 0)
                            units.push_back({p, {a0, a1, a2, a3}});
        uint64_t state = 0x9e3779b97f4a7c15ull + (uint64_t)p;
        for (size_t i = units.size(); i > 1; i--) {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            std::swap(units[i - 1], units[(size_t)(state % i)]);
        }
        std::vector<Mat2> assignment;
        size_t steps = 0;
        const size_t budget = 4000000;
        bool found = false;
        std::function<void(int)> assign = [&](int v) {
            if (found || steps > budget) return;
            if (v == g.n()) {
                if (!(evaluate(assignment, w1) == evaluate(assignment, w2))) {
                    out = assignment;
                    found = true;
                }
                return;
            }
            for (const Mat2& cand : units) {
                if (found || ++steps > budget) return;
                bool ok = true;
                for (int u = 0; u < v && ok; u++) {
                    if (!g.adjacent(u, v)) continue;
                    int m = g.m(u, v);
                    if (!(alternating_product(assignment[u], cand, m) ==
                          alternating_product(cand, assignment[u], m)))
                        ok = false;
                }
                if (!ok) continue;
                assignment.push_back(cand);
                assign(v + 1);
                assignment.pop_back();
            }
        };
        assign(0);
        if (found) return true;
    }
    return false;
}

// Cancel the longest common prefix and suffix: p s1 q = p s2 q iff s1 = s2.
void strip_common(GroupWord& r1, GroupWord& r2) {
    size_t p = 0;
    while (p < r1.size() && p < r2.size() && r1[p] == r2[p]) p++;
    size_t s = 0;
    while (s + p < r1.size() && s + p < r2.size() && r1[r1.size() - 1 - s] == r2[r2.size() - 1 - s])
        s++;
    r1 = GroupWord(r1.begin() + p, r1.end() - s);
    r2 = GroupWord(r2.begin() + p, r2.end() - s);
}

// smallest standard parabolic carrying the word, when that parabolic is a
// vertex or an edge
std::optional<std::pair<int, int>> carrier_edge(const std::vector<int>& supp,
                                                const DefiningGraph& g) {
    if (supp.size() == 1) return std::pair(supp[0], supp[0]);
    if (supp.size() == 2 && g.adjacent(supp[0], supp[1])) return std::pair(supp[0], supp[1]);
    return std::nullopt;
}

// w as an element of <v>, where w is carried by the vertex or edge `e`;
// nullopt when w is not a power of v
std::optional<long long> power_in_carrier(const GroupWord& w, std::pair<int, int> e, int v,
                                          const DefiningGraph& g) {
    if (e.first == e.second) {
        long long t = 0;
        for (int l : w) t += letter_sign(l);
        if (e.first == v) return t;
        if (t == 0) return 0;
        return std::nullopt;
    }
    dihedral::Element d = [&] {
        std::string s;
        for (int l : w) {
            char c = (letter_vertex(l) == e.first) ? 'a' : 'b';
            if (letter_sign(l) < 0) c = (char)std::toupper(c);
            s += c;
        }
        return dihedral::nf(s, g.m(e.first, e.second));
    }();
    if (v != e.first && v != e.second)
        return d.is_identity() ? std::optional<long long>(0) : std::nullopt;
    return dihedral::generator_power_exponent(d, v == e.first ? 'a' : 'b');
}

} // namespace

bool finite_quotient_distinct(const GroupWord& w1, const GroupWord& w2, const DefiningGraph& g) {
    if (g.n() == 0) return false;
    auto& cache = quotient_cache();
    std::string key = format_graph(g);
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        for (const auto& hom : cache.found[key])
            if (!(evaluate(hom, w1) == evaluate(hom, w2))) return true;
    }
    std::vector<Mat2> hom;
    if (!search_separating_hom(w1, w2, g, hom)) return false;
    std::lock_guard<std::mutex> lock(cache.mutex);
    cache.found[key].push_back(hom);
    return true;
}

Result artin_equal(const GroupWord& w1, const GroupWord& w2, const DefiningGraph& g,
                   const Budget& budget) {
    GroupWord r1 = free_reduce(w1), r2 = free_reduce(w2);
    if (r1 == r2) return {Verdict::Equal, "free reduction"};
    strip_common(r1, r2);

    if (abelianization(r1, g) != abelianization(r2, g))
        return {Verdict::Distinct, "abelianization"};

    // words carried by two edge parabolics are equal only inside the
    // intersection, which is the shared vertex subgroup (or trivial)
    {
        auto e1 = carrier_edge(support(r1), g), e2 = carrier_edge(support(r2), g);
        if (e1 && e2 && !(e1 == e2) && !r1.empty() && !r2.empty()) {
            int shared = -1;
            for (int x : {e1->first, e1->second})
                if (x == e2->first || x == e2->second) shared = x;
            if (shared < 0) return {Verdict::Distinct, "disjoint parabolic carriers"};
            auto t1 = power_in_carrier(r1, *e1, shared, g);
            auto t2 = power_in_carrier(r2, *e2, shared, g);
            if (!t1 || !t2) return {Verdict::Distinct, "parabolic intersection"};
            return {*t1 == *t2 ? Verdict::Equal : Verdict::Distinct, "parabolic intersection"};
        }
    }

    // words supported on an induced forest have an exact normal form
    GroupWord prod = free_reduce(concat(r1, inverse(r2)));
    auto supp = support(prod);
    if (induced_is_forest(g, supp)) {
        DefiningGraph induced;
        std::vector<int> remap(g.n(), -1);
        for (int v : supp) remap[v] = induced.add_vertex(g.names[v]);
        for (size_t i = 0; i < supp.size(); i++)
            for (size_t j = i + 1; j < supp.size(); j++)
                if (g.adjacent(supp[i], supp[j]))
                    induced.add_edge(remap[supp[i]], remap[supp[j]], g.m(supp[i], supp[j]));
        GroupWord mapped;
        for (int l : prod) mapped.push_back(letter(remap[letter_vertex(l)], letter_sign(l)));
        bool eq = forest_trivial(mapped, induced);
        return {eq ? Verdict::Equal : Verdict::Distinct, "forest normal form"};
    }

    if (is_positive(r1) && is_positive(r2)) {
        try {
            bool eq = positive_equal(r1, r2, g, budget.closure_words);
            return {eq ? Verdict::Equal : Verdict::Distinct, "positive closure"};
        } catch (const BudgetError&) {
        }
    }

    try {
        if (!coxeter_equal(r1, r2, g, budget.closure_words))
            return {Verdict::Distinct, "coxeter quotient"};
    } catch (const BudgetError&) {
    }

    try {
        if (reflection_cocycle_key(r1, g, budget.closure_words) !=
            reflection_cocycle_key(r2, g, budget.closure_words))
            return {Verdict::Distinct, "reflection cocycle"};
    } catch (const BudgetError&) {
    }

    // folding v onto an adjacent u is a retraction homomorphism whenever
    // every other neighbour x of v satisfies m(x,u) | m(x,v); distinct
    // images in the folded group certify distinctness
    for (auto [u, v] : g.edges()) {
        for (auto [from, to] : {std::pair(v, u), std::pair(u, v)}) {
            bool valid = true;
            for (int x = 0; x < g.n() && valid; x++) {
                if (x == from || x == to || !g.adjacent(x, from)) continue;
                if (!g.adjacent(x, to) || g.m(x, from) % g.m(x, to) != 0) valid = false;
            }
            if (!valid) continue;
            DefiningGraph folded;
            std::vector<int> remap(g.n(), -1);
            for (int x = 0; x < g.n(); x++)
                if (x != from) remap[x] = folded.add_vertex(g.names[x]);
            remap[from] = remap[to];
            for (auto [p, q] : g.edges())
                if (p != from && q != from) folded.add_edge(remap[p], remap[q], g.m(p, q));
            auto map_word = [&](const GroupWord& w) {
                GroupWord out;
                for (int l : w) out.push_back(letter(remap[letter_vertex(l)], letter_sign(l)));
                return free_reduce(out);
            };
            auto rec = artin_equal(map_word(r1), map_word(r2), folded, budget);
            if (rec.distinct())
                return {Verdict::Distinct, "fold " + g.names[from] + "->" + g.names[to]};
        }
    }

    if (finite_quotient_distinct(r1, r2, g)) return {Verdict::Distinct, "finite quotient"};

    return bounded_search(r1, r2, g, budget);
}

} // namespace oracle
} // namespace artin
