#pragma once

#include <string>
#include <vector>

#include "artin/graph.hpp"

namespace artin {
namespace farey {

// Reduced fraction p/q with q >= 0 and gcd(|p|, q) = 1; infinity is 1/0.
struct Vertex {
    long long p = 0, q = 1;

    static Vertex make(long long p, long long q);
    static Vertex infinity() { return {1, 0}; }
    bool operator==(const Vertex& o) const = default;
    auto operator<=>(const Vertex& o) const = default;
    std::string str() const;
};

// |p q' - p' q| = 1
bool adjacent(const Vertex& x, const Vertex& y);

struct FareyBall {
    long long qmax = 1;
    long long window = 1; // vertices satisfy |p| <= window (except infinity)
    std::vector<Vertex> vertices;
    Graph graph;

    int index_of(const Vertex& v) const;
    // every adjacency solution with denominator <= qmax stays in the window
    bool interior_vertex(int i) const;
    // both endpoints interior, and both triangle apexes (mediant and
    // difference) are inside the ball
    bool interior_edge(int i, int j) const;
};

// All reduced p/q with 0 <= q <= qmax and |p| <= k * qmax, plus infinity.
FareyBall farey_ball(long long qmax, long long window_factor = 1);

enum class LinkShape { Line, NotLine, BoundaryInconclusive };
LinkShape link_is_line(const FareyBall& ball, const Vertex& v);

struct TriangleReport {
    int interior_edges = 0;
    int violations = 0; // interior edges not in exactly two triangles
    std::vector<std::pair<Vertex, Vertex>> bad_edges;
};
TriangleReport edge_two_triangles(const FareyBall& ball);

} // namespace farey
} // namespace artin
