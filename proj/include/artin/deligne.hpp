#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artin/dihedral.hpp"
#include "artin/graph.hpp"
#include "artin/oracle.hpp"
#include "artin/words.hpp"

namespace artin {
namespace deligne {

// Exact rational, used for angles and link distances in units of pi.
struct Fraction {
    long long num = 0, den = 1;

    static Fraction of(long long n, long long d);
    Fraction operator+(const Fraction& o) const;
    bool operator<(const Fraction& o) const { return num * o.den < o.num * den; }
    bool operator==(const Fraction& o) const = default;
    std::string str() const;
};

// Euclidean data of the base triangle for an edge with coefficient m: right
// angle at the type-1 corner, pi/2m at the type-2 corner, unit apex edge.
struct TriangleShape {
    int m = 0;
    Fraction apex_angle;   // (1/2 - 1/2m) pi
    Fraction type1_angle;  // pi/2
    Fraction type2_angle;  // pi/2m
    double apex_to_type1 = 1.0;
    double type1_to_type2 = 0.0; // 1/tan(pi/2m)
    double apex_to_type2 = 0.0;  // 1/sin(pi/2m)
};

struct FundamentalDomain {
    DefiningGraph graph;
    BarycentricGraph boundary; // isomorphic to the barycentric subdivision
    std::vector<TriangleShape> shapes; // per edge, declaration order
};

FundamentalDomain fundamental_domain(const DefiningGraph& g);

// Shortest-path distance between v_u and v_v in the apex link, where the
// edge (v_s, v_st) has length (1/2 - 1/2m_st) pi; exact rational output,
// nullopt when no path exists.
std::optional<Fraction> apex_link_distance(const DefiningGraph& g, int u, int v);

// Finite development of the modified Deligne complex by type-2 residues.
struct DeligneBall {
    DefiningGraph graph;
    int depth = 0;
    int residue_radius = 0;

    struct Chamber {
        GroupWord rep; // free-reduced
        int gallery_depth = 0;
        int parent = -1;          // chamber it was attached from
        int via_edge = -1;        // edge index of the crossing type-2 vertex
        std::string offset_word;  // dihedral offset within that residue
    };
    std::vector<Chamber> chambers;

    struct Type2Class {
        int u = -1, v = -1; // ambient edge, u < v
        int base_chamber = -1;
        bool expanded = false;
        std::vector<int> members; // sorted chamber ids
        std::map<int, dihedral::Element> offset; // chamber -> base^-1 chamber in A_uv
        std::map<int, int> member_depth;         // chamber -> dihedral geodesic length
    };
    std::vector<Type2Class> type2;
    std::map<std::pair<int, int>, int> type2_of; // (chamber, edge index) -> class

    struct Type1Class {
        int vertex = -1;
        std::vector<int> members; // sorted chamber ids
    };
    std::vector<Type1Class> type1;
    std::map<std::pair<int, int>, int> type1_of; // (chamber, vertex) -> class

    std::vector<std::pair<int, int>> unresolved; // possibly-equal chambers
    size_t oracle_unknowns = 0;

    int edge_index(int u, int v) const;
    std::string dump() const;
};

DeligneBall develop_ball(const DefiningGraph& g, int depth, int residue_radius,
                         const oracle::Budget& budget = {});

// Post-build structural check: chambers sharing a type-1 class must share
// the type-2 classes at every edge of that vertex; returns violations.
std::vector<std::string> validate_ball(const DeligneBall& ball);

// Maximal alternating fixed tree of a conjugated generator, grown through
// the recorded residues; every vertex carries an exact dihedral certificate.
struct TreeSlice {
    int seed_type1 = -1;
    std::vector<int> type1_classes; // sorted
    std::vector<int> type2_classes; // sorted
    std::vector<std::pair<int, int>> edges; // (type1 class, type2 class)
    std::map<int, std::pair<int, long long>> certificate; // t1 class -> (vertex, power)
    bool acyclic = true;
};

TreeSlice standard_tree_slice(const DeligneBall& ball, int seed_type1_class);

// Wall predicate: the tree of generator `a` is infinite iff `a` is neither
// isolated nor the tip of an even-labelled leaf.
bool is_standard_tree_infinite(const DefiningGraph& g, int a);

// Girth of the link of a type-2 vertex, computed on the subdivided bipartite
// graph (chambers between generator cosets), restricted to chambers strictly
// inside the residue truncation.
struct ResidueGirth {
    std::optional<int> girth;
    bool interior_cycle_found = false;
    int interior_chambers = 0;
};

ResidueGirth residue_link_girth(const DeligneBall& ball, int type2_class);

} // namespace deligne
} // namespace artin
