#pragma once

// Shared test graphs.

#include "artin/graph.hpp"

namespace corpus {

inline artin::DefiningGraph triangle(int mab, int mac, int mbc) {
    artin::DefiningGraph g;
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_vertex("c");
    g.add_edge(0, 1, mab);
    g.add_edge(0, 2, mac);
    g.add_edge(1, 2, mbc);
    return g;
}

inline artin::DefiningGraph delta333() { return triangle(3, 3, 3); }

inline artin::DefiningGraph path_abc(int mab, int mbc) {
    artin::DefiningGraph g;
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_vertex("c");
    g.add_edge(0, 1, mab);
    g.add_edge(1, 2, mbc);
    return g;
}

inline artin::DefiningGraph single_edge(int m) {
    artin::DefiningGraph g;
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_edge(0, 1, m);
    return g;
}

inline artin::DefiningGraph square(int m1, int m2, int m3, int m4) {
    artin::DefiningGraph g;
    for (const char* n : {"a", "b", "c", "d"}) g.add_vertex(n);
    g.add_edge(0, 1, m1);
    g.add_edge(1, 2, m2);
    g.add_edge(2, 3, m3);
    g.add_edge(3, 0, m4);
    return g;
}

// Three triangles sharing the edge b-c, tips x1, x2, x3, all labels 3.
inline artin::DefiningGraph book3() {
    artin::DefiningGraph g;
    g.add_vertex("b");
    g.add_vertex("c");
    g.add_vertex("x1");
    g.add_vertex("x2");
    g.add_vertex("x3");
    g.add_edge(0, 1, 3);
    for (int t = 2; t <= 4; t++) {
        g.add_edge(0, t, 3);
        g.add_edge(1, t, 3);
    }
    return g;
}

// Octahedron 1-skeleton, all labels 3: north n, south s, equator e1..e4.
inline artin::DefiningGraph octahedron() {
    artin::DefiningGraph g;
    g.add_vertex("n");
    g.add_vertex("s");
    for (const char* e : {"e1", "e2", "e3", "e4"}) g.add_vertex(e);
    for (int i = 2; i <= 5; i++) {
        g.add_edge(0, i, 3);
        g.add_edge(1, i, 3);
    }
    g.add_edge(2, 3, 3);
    g.add_edge(3, 4, 3);
    g.add_edge(4, 5, 3);
    g.add_edge(5, 2, 3);
    return g;
}

inline std::vector<artin::DefiningGraph> all() {
    return {delta333(),        triangle(3, 4, 4), triangle(3, 4, 5), path_abc(3, 3),
            single_edge(3),    single_edge(4),    square(3, 3, 3, 3), book3(),
            octahedron()};
}

} // namespace corpus
