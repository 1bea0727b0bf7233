#include "artin/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

namespace artin {

void Graph::add_edge(int u, int v) {
    if (u == v) throw PreconditionError("loop edge");
    if (has_edge(u, v)) return;
    adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
    adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
}

bool Graph::has_edge(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

int Graph::edge_count() const {
    int total = 0;
    for (const auto& a : adj) total += (int)a.size();
    return total / 2;
}

std::vector<int> Graph::components() const {
    std::vector<int> comp(n, -1);
    int c = 0;
    for (int s = 0; s < n; s++) {
        if (comp[s] != -1) continue;
        std::deque<int> queue{s};
        comp[s] = c;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : adj[u])
                if (comp[w] == -1) {
                    comp[w] = c;
                    queue.push_back(w);
                }
        }
        c++;
    }
    return comp;
}

bool Graph::connected() const {
    if (n <= 1) return true;
    auto comp = components();
    return *std::max_element(comp.begin(), comp.end()) == 0;
}

bool Graph::is_bipartite() const {
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; s++) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : adj[u]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<int> Graph::girth() const {
    // BFS from every vertex; a non-tree edge between BFS levels closes the
    // shortest cycle through the root.
    int best = -1;
    for (int s = 0; s < n; s++) {
        std::vector<int> dist(n, -1), parent(n, -1);
        dist[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : adj[u]) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u] && parent[w] != u) {
                    int len = dist[u] + dist[w] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

std::vector<std::vector<int>> Graph::embedded_cycles(int len) const {
    // DFS paths rooted at the smallest cycle vertex; the orientation is fixed
    // by requiring the second vertex to be smaller than the last.
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> used(n, 0);

    auto dfs = [&](auto&& self, int u) -> void {
        if ((int)path.size() == len) {
            if (has_edge(u, path[0]) && path[1] < path.back()) out.push_back(path);
            return;
        }
        for (int w : adj[u]) {
            if (used[w] || w < path[0]) continue;
            if ((int)path.size() == len - 1 && w <= path[1]) continue;
            used[w] = 1;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            used[w] = 0;
        }
    };

    for (int s = 0; s < n; s++) {
        path = {s};
        std::fill(used.begin(), used.end(), 0);
        used[s] = 1;
        for (int w : adj[s]) {
            if (w < s) continue;
            used[w] = 1;
            path.push_back(w);
            dfs(dfs, w);
            path.pop_back();
            used[w] = 0;
        }
    }
    // The DFS above re-lists cycles once per second vertex choice; dedupe.
    for (auto& c : out) {
        if (c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ModifiedLink modified_link(const Graph& g, int v) {
    auto cycles = g.embedded_cycles(5);
    std::vector<char> on_cycle(g.n, 0);
    for (const auto& c : cycles)
        for (int x : c) on_cycle[x] = 1;

    ModifiedLink link;
    for (int w : g.adj[v])
        if (on_cycle[w]) link.vertices.push_back(w);
    link.graph = Graph((int)link.vertices.size());

    auto index_of = [&](int w) {
        auto it = std::lower_bound(link.vertices.begin(), link.vertices.end(), w);
        return (int)(it - link.vertices.begin());
    };
    for (const auto& c : cycles) {
        for (int i = 0; i < 5; i++) {
            if (c[i] != v) continue;
            int w = c[(i + 4) % 5], w2 = c[(i + 1) % 5];
            link.graph.add_edge(index_of(w), index_of(w2));
        }
    }
    return link;
}

std::optional<int> DefiningGraph::vertex(const std::string& name) const {
    for (int i = 0; i < n(); i++)
        if (names[i] == name) return i;
    return std::nullopt;
}

std::vector<std::pair<int, int>> DefiningGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n(); u++)
        for (int v = u + 1; v < n(); v++)
            if (coeff[u][v]) out.emplace_back(u, v);
    return out;
}

std::vector<int> DefiningGraph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n(); u++)
        if (coeff[v][u]) out.push_back(u);
    return out;
}

Graph DefiningGraph::skeleton() const {
    Graph g(n());
    for (auto [u, v] : edges()) g.add_edge(u, v);
    return g;
}

int DefiningGraph::add_vertex(const std::string& name) {
    names.push_back(name);
    for (auto& row : coeff) row.push_back(0);
    coeff.emplace_back(n(), 0);
    return n() - 1;
}

void DefiningGraph::add_edge(int u, int v, int m) {
    if (u == v) throw PreconditionError("self-loop");
    if (m < 2) throw PreconditionError("coefficient < 2");
    coeff[u][v] = coeff[v][u] = m;
}

void DefiningGraph::add_edge(const std::string& u, const std::string& v, int m) {
    auto iu = vertex(u), iv = vertex(v);
    if (!iu || !iv) throw PreconditionError("unknown vertex");
    add_edge(*iu, *iv, m);
}

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty() || !std::isalpha((unsigned char)s[0])) return false;
    for (char c : s)
        if (!std::isalnum((unsigned char)c) && c != '_') return false;
    return true;
}

} // namespace

DefiningGraph parse_graph(const std::string& text) {
    DefiningGraph g;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        lineno++;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (!header_seen) {
            std::string ver;
            if (tok != "artin-graph" || !(ls >> ver) || ver != "v1")
                throw ParseError(lineno, "expected header 'artin-graph v1'");
            header_seen = true;
            continue;
        }
        if (tok == "vertex") {
            std::string name;
            if (!(ls >> name)) throw ParseError(lineno, "vertex needs a name");
            if (!valid_identifier(name)) throw ParseError(lineno, "bad identifier '" + name + "'");
            if (g.vertex(name)) throw ParseError(lineno, "duplicate vertex '" + name + "'");
            g.add_vertex(name);
        } else if (tok == "edge") {
            std::string a, b;
            long long m;
            if (!(ls >> a >> b >> m)) throw ParseError(lineno, "edge needs two vertices and a label");
            auto ia = g.vertex(a), ib = g.vertex(b);
            if (!ia) throw ParseError(lineno, "undeclared vertex '" + a + "'");
            if (!ib) throw ParseError(lineno, "undeclared vertex '" + b + "'");
            if (*ia == *ib) throw ParseError(lineno, "self-loop on '" + a + "'");
            if (m < 2) throw LabelError(lineno, "label must be >= 2");
            if (g.coeff[*ia][*ib]) throw ParseError(lineno, "duplicate edge " + a + " " + b);
            g.add_edge(*ia, *ib, (int)m);
        } else {
            throw ParseError(lineno, "unknown directive '" + tok + "'");
        }
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, "trailing tokens");
    }
    if (!header_seen) throw ParseError(lineno, "missing header 'artin-graph v1'");
    return g;
}

std::string format_graph(const DefiningGraph& g) {
    std::ostringstream out;
    out << "artin-graph v1\n";
    for (const auto& name : g.names) out << "vertex " << name << "\n";
    for (auto [u, v] : g.edges())
        out << "edge " << g.names[u] << " " << g.names[v] << " " << g.m(u, v) << "\n";
    return out.str();
}

namespace {

bool connected_after_removal(const DefiningGraph& g, const std::vector<char>& removed) {
    int start = -1, kept = 0;
    for (int i = 0; i < g.n(); i++)
        if (!removed[i]) {
            kept++;
            start = i;
        }
    if (kept <= 1) return true;
    std::vector<char> seen(g.n(), 0);
    std::deque<int> queue{start};
    seen[start] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w = 0; w < g.n(); w++)
            if (g.coeff[u][w] && !removed[w] && !seen[w]) {
                seen[w] = 1;
                reached++;
                queue.push_back(w);
            }
    }
    return reached == kept;
}

} // namespace

bool is_separating_vertex(const DefiningGraph& g, int v) {
    std::vector<char> removed(g.n(), 0);
    removed[v] = 1;
    return !connected_after_removal(g, removed);
}

bool is_separating_edge(const DefiningGraph& g, int u, int v) {
    std::vector<char> removed(g.n(), 0);
    removed[u] = removed[v] = 1;
    return !connected_after_removal(g, removed);
}

ClassificationReport classify(const DefiningGraph& g) {
    ClassificationReport r;
    auto es = g.edges();
    r.large_type = true;
    r.xxxl = true;
    for (auto [u, v] : es) {
        if (g.m(u, v) < 3) r.large_type = false;
        if (g.m(u, v) < 6) r.xxxl = false;
    }

    r.triangle_free = true;
    r.two_dimensional = true;
    bool has_333 = false;
    for (int a = 0; a < g.n(); a++)
        for (int b = a + 1; b < g.n(); b++)
            for (int c = b + 1; c < g.n(); c++) {
                if (!(g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c))) continue;
                r.triangle_free = false;
                long long p = g.m(a, b), q = g.m(a, c), s = g.m(b, c);
                // 1/p + 1/q + 1/s <= 1, cleared of denominators
                if (q * s + p * s + p * q > p * q * s) r.two_dimensional = false;
                if (p == 3 && q == 3 && s == 3) has_333 = true;
            }
    r.hyperbolic_type = r.large_type && !has_333;
    r.connected = g.skeleton().connected();

    for (int v = 0; v < g.n(); v++) {
        int deg = (int)g.neighbors(v).size();
        if (deg == 0) r.isolated_vertices.push_back(v);
        if (deg == 1) r.leaf_vertices.push_back(v);
        if (is_separating_vertex(g, v)) r.separating_vertices.push_back(v);
    }
    for (auto [u, v] : es)
        if (is_separating_edge(g, u, v)) r.separating_edges.emplace_back(u, v);
    r.twistless = r.separating_vertices.empty() && r.separating_edges.empty();

    for (int v = 0; v < g.n(); v++) {
        auto nb = g.neighbors(v);
        if (nb.empty()) continue;                               // isolated
        if (nb.size() == 1 && g.m(v, nb[0]) % 2 == 0) continue; // even-labelled leaf tip
        r.large_generators.push_back(v);
    }
    return r;
}

BarycentricGraph barycentric_subdivision(const DefiningGraph& g) {
    BarycentricGraph bar;
    bar.n_vertex = g.n();
    bar.edge_vertices = g.edges();
    bar.graph = Graph(bar.size());
    for (int i = 0; i < (int)bar.edge_vertices.size(); i++) {
        auto [u, v] = bar.edge_vertices[i];
        bar.graph.add_edge(bar.v_vertex(u), bar.e_vertex(i));
        bar.graph.add_edge(bar.v_vertex(v), bar.e_vertex(i));
    }
    return bar;
}

namespace {

// Backtracking over label-preserving maps g1 -> g2, pruned by degree and
// incident-label multiset.
void search_isomorphisms(const DefiningGraph& g1, const DefiningGraph& g2,
                         std::vector<int>& map, std::vector<char>& used, int next,
                         std::vector<std::vector<int>>& out, bool stop_at_first) {
    int n = g1.n();
    if (next == n) {
        out.push_back(map);
        return;
    }
    for (int cand = 0; cand < n; cand++) {
        if (used[cand]) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; prev++)
            if (g1.coeff[next][prev] != g2.coeff[cand][map[prev]]) ok = false;
        if (!ok) continue;
        map[next] = cand;
        used[cand] = 1;
        search_isomorphisms(g1, g2, map, used, next + 1, out, stop_at_first);
        used[cand] = 0;
        map[next] = -1;
        if (stop_at_first && !out.empty()) return;
    }
}

std::vector<int> label_signature(const DefiningGraph& g, int v) {
    std::vector<int> sig;
    for (int u = 0; u < g.n(); u++)
        if (g.coeff[v][u]) sig.push_back(g.coeff[v][u]);
    std::sort(sig.begin(), sig.end());
    return sig;
}

bool signatures_compatible(const DefiningGraph& g1, const DefiningGraph& g2) {
    if (g1.n() != g2.n() || g1.edges().size() != g2.edges().size()) return false;
    std::vector<std::vector<int>> s1, s2;
    for (int v = 0; v < g1.n(); v++) s1.push_back(label_signature(g1, v));
    for (int v = 0; v < g2.n(); v++) s2.push_back(label_signature(g2, v));
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    return s1 == s2;
}

} // namespace

std::vector<std::vector<int>> label_automorphisms(const DefiningGraph& g) {
    std::vector<std::vector<int>> out;
    std::vector<int> map(g.n(), -1);
    std::vector<char> used(g.n(), 0);
    search_isomorphisms(g, g, map, used, 0, out, false);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<int>> label_isomorphism(const DefiningGraph& g1,
                                                  const DefiningGraph& g2) {
    if (!signatures_compatible(g1, g2)) return std::nullopt;
    std::vector<std::vector<int>> out;
    std::vector<int> map(g1.n(), -1);
    std::vector<char> used(g1.n(), 0);
    search_isomorphisms(g1, g2, map, used, 0, out, true);
    if (out.empty()) return std::nullopt;
    // Paranoia: re-check every edge of the returned map in both directions.
    for (int u = 0; u < g1.n(); u++)
        for (int v = 0; v < g1.n(); v++)
            if (g1.coeff[u][v] != g2.coeff[out[0][u]][out[0][v]])
                throw Error("isomorphism re-check failed");
    return out[0];
}

StarRigidity is_star_rigid(const DefiningGraph& g, StarConvention conv) {
    auto autos = label_automorphisms(g);
    for (int v = 0; v < g.n(); v++) {
        std::vector<int> star = g.neighbors(v);
        if (conv == StarConvention::ClosedStar) star.push_back(v);
        for (const auto& phi : autos) {
            bool fixes_star = true;
            for (int s : star)
                if (phi[s] != s) {
                    fixes_star = false;
                    break;
                }
            if (!fixes_star) continue;
            bool identity = true;
            for (int i = 0; i < g.n(); i++)
                if (phi[i] != i) {
                    identity = false;
                    break;
                }
            if (!identity) return {false, v, phi};
        }
    }
    return {};
}

} // namespace artin
