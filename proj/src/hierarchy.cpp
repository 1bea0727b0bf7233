#include "artin/hierarchy.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace artin {
namespace hierarchy {

namespace {

std::vector<int> mask_to_vertices(uint32_t mask, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; i++)
        if (mask & (1u << i)) out.push_back(i);
    return out;
}

uint32_t vertices_to_mask(const std::vector<int>& vs) {
    uint32_t m = 0;
    for (int v : vs) m |= 1u << v;
    return m;
}

// components of the induced subgraph `inside` after deleting `removed`
std::vector<uint32_t> components_within(const DefiningGraph& g, uint32_t inside, uint32_t removed) {
    std::vector<uint32_t> comps;
    uint32_t todo = inside & ~removed;
    while (todo) {
        int s = __builtin_ctz(todo);
        uint32_t comp = 1u << s, frontier = comp;
        while (frontier) {
            uint32_t next = 0;
            for (int u = 0; u < g.n(); u++) {
                if (!(frontier & (1u << u))) continue;
                for (int v = 0; v < g.n(); v++)
                    if (g.adjacent(u, v) && (todo & (1u << v)) && !(comp & (1u << v)))
                        next |= 1u << v;
            }
            comp |= next;
            frontier = next;
        }
        comps.push_back(comp);
        todo &= ~comp;
    }
    return comps;
}

} // namespace

bool Decomposition::twistless(const DefiningGraph& g) const {
    if (intersection.empty()) return false;
    if (intersection.size() == 1) return false;
    if (intersection.size() == 2 && g.adjacent(intersection[0], intersection[1])) return false;
    return true;
}

std::vector<Decomposition> admissible_decompositions(const DefiningGraph& g, bool twistless_only,
                                                     const Options& opt) {
    if (g.n() > opt.vertex_cap) throw SizeError("graph exceeds decomposition cap");
    std::vector<Decomposition> out;
    int n = g.n();
    uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);

    std::vector<uint32_t> separators;
    for (uint32_t s = 0; s < (1u << n); s++) separators.push_back(s);
    std::sort(separators.begin(), separators.end(), [](uint32_t a, uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    for (uint32_t s : separators) {
        if (s == all) continue;
        auto comps = components_within(g, all, s);
        if (comps.size() < 2) continue;
        int k = (int)comps.size();
        // bipartitions with the first component pinned to side 1
        for (uint32_t pick = 0; pick < (1u << (k - 1)); pick++) {
            uint32_t side1 = comps[0], side2 = 0;
            for (int i = 1; i < k; i++) {
                if (pick & (1u << (i - 1)))
                    side1 |= comps[i];
                else
                    side2 |= comps[i];
            }
            if (!side2) continue;
            Decomposition d;
            d.gamma1 = mask_to_vertices(side1 | s, n);
            d.gamma2 = mask_to_vertices(side2 | s, n);
            d.intersection = mask_to_vertices(s, n);
            if (twistless_only && !d.twistless(g)) continue;
            out.push_back(std::move(d));
        }
    }
    return out;
}

namespace {

// induced-subgraph view keeping ambient vertex ids
DefiningGraph induced(const DefiningGraph& g, const std::vector<int>& vs, std::vector<int>& back) {
    DefiningGraph sub;
    back = vs;
    std::vector<int> fwd(g.n(), -1);
    for (int v : vs) fwd[v] = sub.add_vertex(g.names[v]);
    for (size_t i = 0; i < vs.size(); i++)
        for (size_t j = i + 1; j < vs.size(); j++)
            if (g.adjacent(vs[i], vs[j])) sub.add_edge(fwd[vs[i]], fwd[vs[j]], g.m(vs[i], vs[j]));
    return sub;
}

} // namespace

std::optional<int> twistless_star_center(const DefiningGraph& g, const std::vector<int>& subset) {
    std::vector<int> back;
    DefiningGraph sub = induced(g, subset, back);
    for (int c = 0; c < sub.n(); c++) {
        bool star = true;
        for (int v = 0; v < sub.n() && star; v++)
            if (v != c && !sub.adjacent(c, v)) star = false;
        if (!star) continue;
        bool twistless = true;
        for (int v = 0; v < sub.n() && twistless; v++)
            if (is_separating_vertex(sub, v)) twistless = false;
        for (auto [u, v] : sub.edges())
            if (twistless && is_separating_edge(sub, u, v)) twistless = false;
        if (twistless) return back[c];
    }
    return std::nullopt;
}

namespace {

std::optional<Tree> search(const DefiningGraph& g, const std::vector<int>& subset,
                           std::set<uint32_t>& failed, const Options& opt) {
    uint32_t mask = vertices_to_mask(subset);
    if (failed.count(mask)) return std::nullopt;

    if (auto center = twistless_star_center(g, subset)) {
        Tree leaf = std::make_unique<Node>();
        leaf->subset = subset;
        leaf->center = *center;
        return leaf;
    }

    std::vector<int> back;
    DefiningGraph sub = induced(g, subset, back);
    if (sub.n() >= 2) {
        for (auto& d : admissible_decompositions(sub, true, opt)) {
            auto lift = [&](const std::vector<int>& local) {
                std::vector<int> out;
                for (int v : local) out.push_back(back[v]);
                return out;
            };
            Decomposition lifted{lift(d.gamma1), lift(d.gamma2), lift(d.intersection)};
            auto left = search(g, lifted.gamma1, failed, opt);
            if (!left) continue;
            auto right = search(g, lifted.gamma2, failed, opt);
            if (!right) continue;
            Tree node = std::make_unique<Node>();
            node->subset = subset;
            node->split = std::move(lifted);
            node->left = std::move(*left);
            node->right = std::move(*right);
            return node;
        }
    }
    failed.insert(mask);
    return std::nullopt;
}

} // namespace

std::optional<Tree> find_twistless_hierarchy(const DefiningGraph& g, const Options& opt) {
    if (g.n() > opt.vertex_cap) throw SizeError("graph exceeds hierarchy cap");
    if (g.n() == 0) return std::nullopt;
    std::vector<int> all;
    for (int v = 0; v < g.n(); v++) all.push_back(v);
    std::set<uint32_t> failed;
    return search(g, all, failed, opt);
}

namespace {

bool fail(std::string* reason, const std::string& why) {
    if (reason) *reason = why;
    return false;
}

bool check_node(const DefiningGraph& g, const Node& node, std::string* reason) {
    if (node.is_leaf()) {
        auto center = twistless_star_center(g, node.subset);
        if (!center) return fail(reason, "leaf is not a twistless star");
        bool center_ok = std::binary_search(node.subset.begin(), node.subset.end(), node.center);
        if (!center_ok) return fail(reason, "leaf centre outside subset");
        // the recorded centre must itself be a star centre of the subset
        std::vector<int> back;
        DefiningGraph sub = induced(g, node.subset, back);
        int local = -1;
        for (size_t i = 0; i < back.size(); i++)
            if (back[i] == node.center) local = (int)i;
        for (int v = 0; v < sub.n(); v++)
            if (v != local && !sub.adjacent(local, v))
                return fail(reason, "recorded centre is not adjacent to the whole leaf");
        return true;
    }
    if (!node.left || !node.right) return fail(reason, "split with missing child");
    const auto& d = node.split;
    std::vector<int> uni;
    std::set_union(d.gamma1.begin(), d.gamma1.end(), d.gamma2.begin(), d.gamma2.end(),
                   std::back_inserter(uni));
    if (uni != node.subset) return fail(reason, "split sides do not cover the subset");
    std::vector<int> inter;
    std::set_intersection(d.gamma1.begin(), d.gamma1.end(), d.gamma2.begin(), d.gamma2.end(),
                          std::back_inserter(inter));
    if (inter != d.intersection) return fail(reason, "recorded intersection is wrong");
    if (d.gamma1 == node.subset || d.gamma2 == node.subset)
        return fail(reason, "split side equals the whole subset");
    if (!d.twistless(g)) return fail(reason, "split intersection is empty, a vertex, or an edge");
    // edge coverage: every induced edge must live in one side
    for (size_t i = 0; i < node.subset.size(); i++)
        for (size_t j = i + 1; j < node.subset.size(); j++) {
            int u = node.subset[i], v = node.subset[j];
            if (!g.adjacent(u, v)) continue;
            bool in1 = std::binary_search(d.gamma1.begin(), d.gamma1.end(), u) &&
                       std::binary_search(d.gamma1.begin(), d.gamma1.end(), v);
            bool in2 = std::binary_search(d.gamma2.begin(), d.gamma2.end(), u) &&
                       std::binary_search(d.gamma2.begin(), d.gamma2.end(), v);
            if (!in1 && !in2) return fail(reason, "edge not covered by either side");
        }
    if (node.left->subset != d.gamma1 || node.right->subset != d.gamma2)
        return fail(reason, "child subsets disagree with the split");
    return check_node(g, *node.left, reason) && check_node(g, *node.right, reason);
}

} // namespace

bool check_hierarchy(const DefiningGraph& g, const Node& tree, std::string* reason) {
    std::vector<int> all;
    for (int v = 0; v < g.n(); v++) all.push_back(v);
    if (tree.subset != all) return fail(reason, "root subset is not the whole graph");
    for (int v : tree.subset)
        if (v < 0 || v >= g.n()) return fail(reason, "vertex outside the graph");
    return check_node(g, tree, reason);
}

namespace {

std::string name_set(const std::vector<int>& vs, const DefiningGraph& g) {
    std::string out = "{";
    for (size_t i = 0; i < vs.size(); i++) {
        if (i) out += ",";
        out += g.names[vs[i]];
    }
    return out + "}";
}

void serialize_node(const Node& node, const DefiningGraph& g, int depth, std::ostringstream& out) {
    std::string pad(2 * depth, ' ');
    if (node.is_leaf()) {
        out << pad << "leaf center=" << g.names[node.center] << " V=" << name_set(node.subset, g)
            << "\n";
        return;
    }
    out << pad << "split S=" << name_set(node.split.intersection, g) << "\n";
    serialize_node(*node.left, g, depth + 1, out);
    serialize_node(*node.right, g, depth + 1, out);
}

std::vector<int> parse_name_set(const std::string& text, const DefiningGraph& g) {
    auto l = text.find('{'), r = text.find('}');
    if (l == std::string::npos || r == std::string::npos || r < l)
        throw ParseError(0, "malformed vertex set");
    std::vector<int> out;
    std::string body = text.substr(l + 1, r - l - 1);
    std::istringstream in(body);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        auto v = g.vertex(tok);
        if (!v) throw ParseError(0, "unknown vertex '" + tok + "'");
        out.push_back(*v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct Line {
    int depth;
    std::string body;
};

Tree parse_node(const std::vector<Line>& lines, size_t& pos, const DefiningGraph& g);

Tree parse_node(const std::vector<Line>& lines, size_t& pos, const DefiningGraph& g) {
    if (pos >= lines.size()) throw ParseError(0, "unexpected end of tree");
    Line cur = lines[pos++];
    Tree node = std::make_unique<Node>();
    if (cur.body.rfind("leaf", 0) == 0) {
        auto cpos = cur.body.find("center=");
        auto vpos = cur.body.find(" V=");
        if (cpos == std::string::npos || vpos == std::string::npos)
            throw ParseError(0, "malformed leaf line");
        std::string cname = cur.body.substr(cpos + 7, vpos - cpos - 7);
        auto c = g.vertex(cname);
        if (!c) throw ParseError(0, "unknown centre '" + cname + "'");
        node->center = *c;
        node->subset = parse_name_set(cur.body.substr(vpos), g);
        return node;
    }
    if (cur.body.rfind("split", 0) != 0) throw ParseError(0, "expected split or leaf");
    node->split.intersection = parse_name_set(cur.body, g);
    node->left = parse_node(lines, pos, g);
    node->right = parse_node(lines, pos, g);
    node->split.gamma1 = node->left->subset;
    node->split.gamma2 = node->right->subset;
    std::set_union(node->split.gamma1.begin(), node->split.gamma1.end(),
                   node->split.gamma2.begin(), node->split.gamma2.end(),
                   std::back_inserter(node->subset));
    return node;
}

} // namespace

std::string serialize(const Node& tree, const DefiningGraph& g) {
    std::ostringstream out;
    serialize_node(tree, g, 0, out);
    return out.str();
}

Tree parse_tree(const std::string& text, const DefiningGraph& g) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        size_t indent = raw.find_first_not_of(' ');
        if (indent == std::string::npos) continue;
        lines.push_back({(int)indent / 2, raw.substr(indent)});
    }
    size_t pos = 0;
    Tree t = parse_node(lines, pos, g);
    if (pos != lines.size()) throw ParseError(0, "trailing tree lines");
    return t;
}

bool condition_C2(const Graph& g) {
    if (!g.connected()) return false;
    for (int v = 0; v < g.n; v++) {
        // delete v, test connectivity of the rest (empty/singleton connected)
        std::vector<int> keep;
        for (int u = 0; u < g.n; u++)
            if (u != v) keep.push_back(u);
        if (keep.size() <= 1) continue;
        std::vector<int> idx(g.n, -1);
        Graph h((int)keep.size());
        for (size_t i = 0; i < keep.size(); i++) idx[keep[i]] = (int)i;
        for (int u : keep)
            for (int w : g.adj[u])
                if (w != v && u < w) h.add_edge(idx[u], idx[w]);
        if (!h.connected()) return false;
    }
    return true;
}

bool condition_C1(const Graph& g, const Options& opt) {
    if (g.n > opt.c1_cap) throw SizeError("graph exceeds C1 cap");
    if (g.n == 0) return false;

    // all induced (chordless) cycles
    std::vector<std::vector<int>> cycles;
    for (int len = 3; len <= g.n; len++) {
        for (auto& c : g.embedded_cycles(len)) {
            bool chordless = true;
            for (size_t i = 0; i < c.size() && chordless; i++)
                for (size_t j = i + 2; j < c.size() && chordless; j++) {
                    if (i == 0 && j == c.size() - 1) continue;
                    if (g.has_edge(c[i], c[j])) chordless = false;
                }
            if (chordless) cycles.push_back(c);
        }
    }
    if (cycles.empty()) return false;

    auto edge_set = [](const std::vector<int>& c) {
        std::set<std::pair<int, int>> es;
        for (size_t i = 0; i < c.size(); i++) {
            int u = c[i], v = c[(i + 1) % c.size()];
            es.insert({std::min(u, v), std::max(u, v)});
        }
        return es;
    };
    std::vector<std::set<std::pair<int, int>>> cycle_edges;
    for (const auto& c : cycles) cycle_edges.push_back(edge_set(c));

    // chain components of the share-an-edge relation; C1 holds iff some
    // component covers every vertex and every edge
    int k = (int)cycles.size();
    std::vector<int> comp(k, -1);
    int nc = 0;
    for (int s = 0; s < k; s++) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = nc;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < k; v++) {
                if (comp[v] != -1) continue;
                bool share = false;
                for (const auto& e : cycle_edges[u])
                    if (cycle_edges[v].count(e)) {
                        share = true;
                        break;
                    }
                if (share) {
                    comp[v] = nc;
                    stack.push_back(v);
                }
            }
        }
        nc++;
    }

    std::set<std::pair<int, int>> all_edges;
    for (int u = 0; u < g.n; u++)
        for (int w : g.adj[u])
            if (u < w) all_edges.insert({u, w});

    for (int c = 0; c < nc; c++) {
        std::set<int> verts;
        std::set<std::pair<int, int>> edges;
        for (int i = 0; i < k; i++) {
            if (comp[i] != c) continue;
            for (int v : cycles[i]) verts.insert(v);
            edges.insert(cycle_edges[i].begin(), cycle_edges[i].end());
        }
        if ((int)verts.size() == g.n && edges == all_edges) return true;
    }
    return false;
}

} // namespace hierarchy
} // namespace artin
