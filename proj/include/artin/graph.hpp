#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artin/errors.hpp"

namespace artin {

// Plain finite simple graph, adjacency lists kept sorted.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_) {}
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int edge_count() const;
    int degree(int v) const { return (int)adj[v].size(); }

    bool connected() const;
    std::vector<int> components() const; // component id per vertex
    bool is_bipartite() const;
    // Shortest embedded cycle length; nullopt for forests.
    std::optional<int> girth() const;
    // All embedded cycles of the given length, each listed once as a vertex
    // sequence starting at its smallest vertex.
    std::vector<std::vector<int>> embedded_cycles(int len) const;
};

// Neighbours of v that lie on some embedded 5-cycle of g; two of them are
// joined when some embedded 5-cycle passes through them and v consecutively.
// Returned graph is on the vertex subset `vertices` of g.
struct ModifiedLink {
    std::vector<int> vertices; // vertex ids of g
    Graph graph;               // indices parallel to `vertices`
};
ModifiedLink modified_link(const Graph& g, int v);

// Labelled presentation graph: vertices are named, each edge carries an
// integer coefficient >= 2. Absence of an edge means an infinite coefficient.
struct DefiningGraph {
    std::vector<std::string> names;
    std::vector<std::vector<int>> coeff; // 0 = no edge

    int n() const { return (int)names.size(); }
    bool adjacent(int u, int v) const { return coeff[u][v] != 0; }
    int m(int u, int v) const { return coeff[u][v]; }
    std::optional<int> vertex(const std::string& name) const;
    std::vector<std::pair<int, int>> edges() const; // u < v, declaration order
    std::vector<int> neighbors(int v) const;
    Graph skeleton() const;

    int add_vertex(const std::string& name);
    void add_edge(int u, int v, int m);
    void add_edge(const std::string& u, const std::string& v, int m);
};

// artin-graph v1 file format.
DefiningGraph parse_graph(const std::string& text);
std::string format_graph(const DefiningGraph& g);

struct ClassificationReport {
    bool large_type = false;
    bool xxxl = false;
    bool triangle_free = false;
    bool two_dimensional = false;
    bool hyperbolic_type = false;
    bool connected = false;
    std::vector<int> leaf_vertices;
    std::vector<int> isolated_vertices;
    std::vector<int> separating_vertices;
    std::vector<std::pair<int, int>> separating_edges;
    bool twistless = false;
    std::vector<int> large_generators;
};

ClassificationReport classify(const DefiningGraph& g);

// Vertex whose removal (with incident edges) disconnects the rest; edge whose
// closed removal (both endpoints) disconnects the rest. Graphs with <= 1
// vertex count as connected.
bool is_separating_vertex(const DefiningGraph& g, int v);
bool is_separating_edge(const DefiningGraph& g, int u, int v);

struct BarycentricGraph {
    // First the original vertices (V-vertices), then one E-vertex per edge.
    int n_vertex = 0;
    std::vector<std::pair<int, int>> edge_vertices; // E-vertex -> edge (u,v)
    Graph graph;

    int v_vertex(int v) const { return v; }
    int e_vertex(int idx) const { return n_vertex + idx; }
    int size() const { return n_vertex + (int)edge_vertices.size(); }
    bool is_v_vertex(int x) const { return x < n_vertex; }
};

BarycentricGraph barycentric_subdivision(const DefiningGraph& g);

// Label-preserving automorphisms, as vertex permutations; contains the
// identity, closed under composition and inverse.
std::vector<std::vector<int>> label_automorphisms(const DefiningGraph& g);

std::optional<std::vector<int>> label_isomorphism(const DefiningGraph& g1,
                                                  const DefiningGraph& g2);

enum class StarConvention { ClosedStar, NeighborsOnly };

struct StarRigidity {
    bool rigid = true;
    int vertex = -1;                 // witness star centre when not rigid
    std::vector<int> automorphism;   // witness non-trivial automorphism
};

StarRigidity is_star_rigid(const DefiningGraph& g,
                           StarConvention conv = StarConvention::ClosedStar);

} // namespace artin
