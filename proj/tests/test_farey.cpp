#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "artin/farey.hpp"

using namespace artin;
using namespace artin::farey;

TEST_CASE("adjacency") {
    CHECK(adjacent(Vertex::make(0, 1), Vertex::make(1, 1)));
    CHECK(!adjacent(Vertex::make(0, 1), Vertex::make(2, 3)));
    for (long long n = -5; n <= 5; n++) CHECK(adjacent(Vertex::infinity(), Vertex::make(n, 1)));
    // symmetric, irreflexive, invariant under negating both entries
    Vertex x = Vertex::make(2, 5), y = Vertex::make(1, 2);
    CHECK(adjacent(x, y) == adjacent(y, x));
    CHECK(!adjacent(x, x));
    CHECK(Vertex::make(-2, -5) == x);
    CHECK(Vertex::make(-1, 0) == Vertex::infinity());
}

TEST_CASE("small ball") {
    FareyBall b = farey_ball(1, 1);
    CHECK(b.vertices.size() == 4); // infinity, -1, 0, 1
    CHECK(b.graph.girth() == 3);

    FareyBall b2 = farey_ball(2, 2);
    int i0 = b2.index_of(Vertex::make(0, 1));
    int i1 = b2.index_of(Vertex::make(1, 1));
    int ih = b2.index_of(Vertex::make(1, 2));
    int inf = b2.index_of(Vertex::infinity());
    REQUIRE(i0 >= 0);
    REQUIRE(ih >= 0);
    CHECK(b2.graph.has_edge(i0, i1));
    CHECK(b2.graph.has_edge(i0, ih));
    CHECK(b2.graph.has_edge(i1, ih));
    CHECK(b2.graph.has_edge(i0, inf));
    CHECK(b2.graph.has_edge(i1, inf));
}

TEST_CASE("links are truncated lines") {
    FareyBall b = farey_ball(8, 2);
    CHECK(link_is_line(b, Vertex::make(0, 1)) == LinkShape::Line);
    CHECK(link_is_line(b, Vertex::infinity()) == LinkShape::Line);

    FareyBall tiny = farey_ball(1, 1);
    int inconclusive = 0;
    for (const auto& v : tiny.vertices)
        if (link_is_line(tiny, v) == LinkShape::BoundaryInconclusive) inconclusive++;
    CHECK(inconclusive >= 2);
}

TEST_CASE("interior edges lie in exactly two triangles") {
    for (long long qmax : {2, 4, 8, 12}) {
        FareyBall b = farey_ball(qmax, 2);
        auto report = edge_two_triangles(b);
        CHECK(report.violations == 0);
        if (qmax >= 2) CHECK(report.interior_edges > 0);
    }
    // spot checks with explicit apexes
    FareyBall b = farey_ball(4, 2);
    int i0 = b.index_of(Vertex::make(0, 1)), i1 = b.index_of(Vertex::make(1, 1));
    CHECK(b.interior_edge(i0, i1));
    int common = 0;
    for (int k : b.graph.adj[i0])
        if (b.graph.has_edge(i1, k)) common++;
    CHECK(common == 2); // the mediant 1/2 and infinity
}

TEST_CASE("no interior 4-cycles") {
    FareyBall b = farey_ball(6, 2);
    auto cycles = b.graph.embedded_cycles(4);
    for (const auto& c : cycles) {
        bool all_interior = true;
        for (int v : c)
            if (!b.interior_vertex(v)) all_interior = false;
        // an interior 4-cycle would need an edge in more than two triangles
        if (all_interior) {
            bool chordless = !b.graph.has_edge(c[0], c[2]) && !b.graph.has_edge(c[1], c[3]);
            CHECK(!chordless);
        }
    }
}

TEST_CASE("interior links stay lines up to qmax 12") {
    for (long long qmax : {4, 8, 12}) {
        FareyBall b = farey_ball(qmax, 2);
        for (size_t i = 0; i < b.vertices.size(); i++) {
            if (!b.interior_vertex((int)i)) continue;
            CHECK(link_is_line(b, b.vertices[i]) == LinkShape::Line);
        }
    }
}
