#include "artin/farey.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace artin {
namespace farey {

Vertex Vertex::make(long long p, long long q) {
    if (q == 0) {
        if (p == 0) throw PreconditionError("0/0 is not a vertex");
        return {1, 0}; // both irreducible forms of infinity collapse here
    }
    if (q < 0) {
        p = -p;
        q = -q;
    }
    long long g = std::gcd(std::llabs(p), q);
    return {p / g, q / g};
}

std::string Vertex::str() const {
    if (q == 0) return "1/0";
    return std::to_string(p) + "/" + std::to_string(q);
}

bool adjacent(const Vertex& x, const Vertex& y) {
    if (x == y) return false;
    return std::llabs(x.p * y.q - y.p * x.q) == 1;
}

int FareyBall::index_of(const Vertex& v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || !(*it == v)) return -1;
    return (int)(it - vertices.begin());
}

bool FareyBall::interior_vertex(int i) const {
    const Vertex& v = vertices[i];
    if (v.q == 0) return false; // infinity has neighbours of every numerator
    for (long long s = 1; s <= v.q + qmax; s++) {
        for (long long eps : {-1ll, 1ll}) {
            long long num = v.p * s - eps;
            if (num % v.q) continue;
            if (std::llabs(num / v.q) > window) return false;
        }
    }
    return true;
}

bool FareyBall::interior_edge(int i, int j) const {
    if (!interior_vertex(i) || !interior_vertex(j)) return false;
    const Vertex &x = vertices[i], &y = vertices[j];
    for (int sign : {1, -1}) {
        long long p = x.p + sign * y.p, q = x.q + sign * y.q;
        if (p == 0 && q == 0) return false;
        Vertex apex = Vertex::make(p, q);
        if (apex.q > qmax) return false;
        if (apex.q != 0 && std::llabs(apex.p) > window) return false;
        if (index_of(apex) < 0) return false;
    }
    return true;
}

FareyBall farey_ball(long long qmax, long long window_factor) {
    if (qmax < 1) throw SizeError("qmax must be >= 1");
    if (qmax > 64) throw SizeError("farey ball too large");
    FareyBall ball;
    ball.qmax = qmax;
    ball.window = qmax * window_factor;
    ball.vertices.push_back(Vertex::infinity());
    for (long long q = 1; q <= qmax; q++)
        for (long long p = -ball.window; p <= ball.window; p++)
            if (std::gcd(std::llabs(p), q) == 1) ball.vertices.push_back({p, q});
    std::sort(ball.vertices.begin(), ball.vertices.end());
    ball.graph = Graph((int)ball.vertices.size());
    for (size_t i = 0; i < ball.vertices.size(); i++)
        for (size_t j = i + 1; j < ball.vertices.size(); j++)
            if (adjacent(ball.vertices[i], ball.vertices[j])) ball.graph.add_edge((int)i, (int)j);
    return ball;
}

LinkShape link_is_line(const FareyBall& ball, const Vertex& v) {
    int i = ball.index_of(v);
    if (i < 0) throw PreconditionError("vertex not in ball");
    const auto& nbrs = ball.graph.adj[i];
    bool interior = ball.interior_vertex(i);
    if (nbrs.size() < 2) return LinkShape::BoundaryInconclusive;
    Graph link((int)nbrs.size());
    for (size_t a = 0; a < nbrs.size(); a++)
        for (size_t b = a + 1; b < nbrs.size(); b++)
            if (ball.graph.has_edge(nbrs[a], nbrs[b])) link.add_edge((int)a, (int)b);
    bool path = link.connected() && link.edge_count() == link.n - 1;
    for (int x = 0; x < link.n && path; x++)
        if (link.degree(x) > 2) path = false;
    if (path && (interior || link.n >= 3)) return LinkShape::Line;
    if (!path && interior) return LinkShape::NotLine;
    return LinkShape::BoundaryInconclusive;
}

TriangleReport edge_two_triangles(const FareyBall& ball) {
    TriangleReport report;
    int n = ball.graph.n;
    for (int i = 0; i < n; i++)
        for (int j : ball.graph.adj[i]) {
            if (j < i) continue;
            if (!ball.interior_edge(i, j)) continue;
            report.interior_edges++;
            int triangles = 0;
            for (int k : ball.graph.adj[i])
                if (k != j && ball.graph.has_edge(j, k)) triangles++;
            if (triangles != 2) {
                report.violations++;
                report.bad_edges.push_back({ball.vertices[i], ball.vertices[j]});
            }
        }
    return report;
}

} // namespace farey
} // namespace artin
