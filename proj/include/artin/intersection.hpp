#pragma once

#include <map>
#include <string>
#include <vector>

#include "artin/deligne.hpp"
#include "artin/graph.hpp"

namespace artin {
namespace intersection {

enum class Kind { T, D, E };

struct IVertex {
    Kind kind = Kind::T;
    int ref = -1;      // T: slice index; D: type-2 class id
    std::string label; // printable descriptor
};

// Finite portion of the T/D intersection graph built from a Deligne ball:
// D-vertices are the type-2 classes, T-vertices the standard-tree slices,
// edges record incidence.
struct IntersectionBall {
    std::vector<IVertex> vertices;
    Graph graph;
    std::vector<deligne::TreeSlice> slices;
    std::map<int, int> d_vertex_of_type2; // type-2 class -> vertex id
    std::map<int, int> t_vertex_of_type1; // type-1 class -> owning T vertex

    int kind_count(Kind k) const;
};

IntersectionBall build_td_ball(const deligne::DeligneBall& ball,
                               const oracle::Budget& budget = {});

// The pentagon around an exotic centre <abcabc> for a (3,3,3) triangle:
// vertices <a>, <z_ab>, <b>, <abcabc>, <bacbac>, each edge certified by a
// positive-word commutation.
struct PentagonReport {
    std::vector<IVertex> vertices; // 5, in cycle order
    Graph fragment;                // the 5-cycle
    std::vector<std::string> edge_certificates; // one per edge, cycle order
    std::vector<bool> certified;
    bool all_certified = false;
};

PentagonReport exotic_pentagon(const DefiningGraph& g, int a, int b, int c);

// Type-respecting embeddings of the barycentric subdivision of gprime into
// the T/D ball (vertices of gprime onto T, subdivision points onto D).
struct Embedding {
    std::vector<int> t_vertices; // image of the original vertices, by index
    std::vector<int> d_vertices; // image of the subdivision vertices
};

std::vector<Embedding> find_characteristic_subgraphs(const IntersectionBall& iball,
                                                     const DefiningGraph& gprime,
                                                     size_t node_budget = 400000000);

// Chambers of the ball carrying every D-vertex of the embedding and at
// least one type-1 vertex on every embedded tree.
struct Witness {
    enum class Kind { Unique, Multiple, None } kind = Kind::None;
    int chamber = -1;
    int count = 0;
};

Witness fundamentality_witness(const IntersectionBall& iball, const Embedding& embedding,
                               const deligne::DeligneBall& ball);

struct SixCycleReport {
    int total = 0;
    int unique = 0;
    int multiple = 0;
    int inconclusive = 0; // no witnessing chamber at this radius
};

SixCycleReport six_cycle_audit(const IntersectionBall& iball, const deligne::DeligneBall& ball);

// The two fan-of-hexagons templates: n hexagons closing around a central
// D-vertex (g1) versus closing around the central T-vertex across one more
// D-vertex (g2). Kinds: true = T, false = D.
struct TypedPattern {
    Graph graph;
    std::vector<Kind> kinds;
};

TypedPattern g1_pattern(int n);
TypedPattern g2_pattern(int n);

struct ProbeReport {
    int n = 0;
    bool y_construction_found = false; // explicit residue translates of the hexagon
    size_t g1_embeddings = 0;
    size_t g2_embeddings = 0;
};

// Builds Y = K u aK u abK u ... (m_ab chambers along the <a,b> residue) and
// checks the g1 fan is present while no g2 fan embeds anywhere in the ball.
ProbeReport g1_g2_probe(const IntersectionBall& iball, const deligne::DeligneBall& ball, int a,
                        int b, int c, size_t node_budget = 400000000);

// All embeddings of a typed pattern (for tests and the g2 search).
std::vector<std::vector<int>> typed_subgraph_embeddings(const TypedPattern& pattern,
                                                        const IntersectionBall& iball,
                                                        size_t node_budget, bool stop_at_first);

} // namespace intersection
} // namespace artin
