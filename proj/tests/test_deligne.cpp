#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "artin/deligne.hpp"
#include "support/bass_serre.hpp"
#include "support/corpus.hpp"

#include <cmath>
#include <set>

using namespace artin;
using namespace artin::deligne;

TEST_CASE("fundamental domain shapes") {
    auto fd = fundamental_domain(corpus::delta333());
    REQUIRE(fd.shapes.size() == 3);
    for (const auto& s : fd.shapes) {
        CHECK(s.type1_angle == Fraction::of(1, 2)); // right angle at v_a
        CHECK(s.type2_angle == Fraction::of(1, 6));
        // d(apex, v_ab) = 1/sin(pi/6) = 2, d(v_a, v_ab) = 1/tan(pi/6) = sqrt(3)
        CHECK(std::abs(s.apex_to_type2 - 2.0) < 1e-12);
        CHECK(std::abs(s.type1_to_type2 - std::sqrt(3.0)) < 1e-12);
    }
    // boundary is the barycentric subdivision: a 6-cycle for the triangle
    CHECK(fd.boundary.graph.girth() == 6);
    CHECK(fd.boundary.size() == 6);

    DefiningGraph bad = corpus::triangle(2, 2, 2);
    CHECK_THROWS_AS(fundamental_domain(bad), PreconditionError);
}

TEST_CASE("apex link metric") {
    // adjacent vertices: two edges of length (1/2 - 1/6) pi = pi/3
    auto d = corpus::delta333();
    auto dist = apex_link_distance(d, 0, 1);
    REQUIRE(dist.has_value());
    CHECK(*dist == Fraction::of(2, 3));

    // non-adjacent ends of the path: 4 edges, distance 4/3 pi > pi
    auto p = corpus::path_abc(3, 3);
    auto far = apex_link_distance(p, 0, 2);
    REQUIRE(far.has_value());
    CHECK(*far == Fraction::of(4, 3));
    CHECK(Fraction::of(1, 1) < *far);

    DefiningGraph two;
    two.add_vertex("a");
    two.add_vertex("b");
    CHECK(!apex_link_distance(two, 0, 1).has_value());
}

TEST_CASE("depth zero ball is the fundamental domain") {
    auto ball = develop_ball(corpus::delta333(), 0, 3);
    CHECK(ball.chambers.size() == 1);
    CHECK(ball.type2.size() == 3);
    CHECK(ball.type1.size() == 3);
    CHECK(ball.unresolved.empty());
}

TEST_CASE("triangle depth one ball") {
    auto g = corpus::delta333();
    auto ball = develop_ball(g, 1, 3);
    CHECK(ball.unresolved.empty());

    // residue of the base type-2 vertex = dihedral ball elements, distinct
    int base_ab = ball.type2_of.at({0, 0});
    auto db = dihedral::ball(3, 3);
    CHECK(ball.type2[base_ab].members.size() == db.elements.size());
    CHECK(ball.type2[base_ab].expanded);

    // every chamber's rep spells a distinct group element: reps are unique
    std::set<GroupWord> reps;
    for (const auto& c : ball.chambers) CHECK(reps.insert(c.rep).second);

    // merged cosets: the a-power chambers all share the base's ac-class
    CHECK(validate_ball(ball).empty());
    CHECK(ball.dump().find("unresolved") == std::string::npos);
}

TEST_CASE("tree development matches the amalgam count") {
    auto p = corpus::path_abc(3, 3);
    for (int radius : {2, 3}) {
        auto ball = develop_ball(p, 2, radius);
        CHECK(ball.unresolved.empty());
        CHECK(ball.oracle_unknowns == 0);
        size_t expected = bass_serre::chamber_count_depth2(3, 3, radius);
        CHECK(ball.chambers.size() == expected);
    }
}

TEST_CASE("standard tree infinitude") {
    CHECK(is_standard_tree_infinite(corpus::delta333(), 0));
    CHECK(!is_standard_tree_infinite(corpus::single_edge(4), 0));
    CHECK(is_standard_tree_infinite(corpus::single_edge(3), 0));
    DefiningGraph lonely;
    lonely.add_vertex("a");
    CHECK(!is_standard_tree_infinite(lonely, 0));
}

TEST_CASE("standard tree slices") {
    auto g = corpus::delta333();
    auto ball = develop_ball(g, 1, 3);

    // slice through v_a at the base chamber: passes the base's two residues
    int seed = ball.type1_of.at({0, 0}); // (base chamber, vertex a)
    auto slice = standard_tree_slice(ball, seed);
    CHECK(slice.acyclic);
    CHECK(slice.type1_classes.size() >= 3);
    int base_ab = ball.type2_of.at({0, 0});
    int base_ac = ball.type2_of.at({0, 1});
    int base_bc = ball.type2_of.at({0, 2});
    auto has = [&](const std::vector<int>& v, int x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    };
    CHECK(has(slice.type2_classes, base_ab));
    CHECK(has(slice.type2_classes, base_ac));
    CHECK(!has(slice.type2_classes, base_bc)); // Fix(a) avoids the bc vertex
    // every certificate power is +-1 (conjugates of a generator)
    for (const auto& [cls, cert] : slice.certificate) CHECK(std::abs(cert.second) == 1);

    // single vertex graph: the slice is just the seed
    DefiningGraph lonely;
    lonely.add_vertex("a");
    // (cannot develop a disconnected/edgeless graph; the predicate answers)
    CHECK(!is_standard_tree_infinite(lonely, 0));

    // even-labelled edge: trees are finite, slices stay bounded
    auto e4ball = develop_ball(corpus::single_edge(4), 1, 4);
    int s4 = e4ball.type1_of.at({0, 0});
    auto slice4 = standard_tree_slice(e4ball, s4);
    CHECK(slice4.acyclic);
    CHECK(slice4.type2_classes.size() == 1); // only the single base residue
}

TEST_CASE("residue link girth") {
    for (int m : {3, 4}) {
        auto ball = develop_ball(corpus::single_edge(m), 1, 6);
        int base = ball.type2_of.at({0, 0});
        auto rg = residue_link_girth(ball, base);
        CHECK(rg.interior_cycle_found);
        REQUIRE(rg.girth.has_value());
        CHECK(*rg.girth == 4 * m);
    }
    // radius too small for any interior cycle
    auto tiny = develop_ball(corpus::single_edge(3), 1, 2);
    auto rg = residue_link_girth(tiny, tiny.type2_of.at({0, 0}));
    CHECK(!rg.interior_cycle_found);
}

TEST_CASE("identification is budget-monotone and residues are complete") {
    auto g = corpus::delta333();
    oracle::Budget small{1000000, 20000}, large{1000000, 120000};
    auto b1 = develop_ball(g, 1, 3, small);
    auto b2 = develop_ball(g, 1, 3, large);
    CHECK(b1.chambers.size() == b2.chambers.size());
    CHECK(b1.unresolved.empty());
    CHECK(b2.unresolved.empty());

    // recount: every expanded residue carries the full dihedral ball
    for (const auto& K : b1.type2) {
        if (!K.expanded) continue;
        auto db = dihedral::ball(g.m(K.u, K.v), 3);
        int hits = 0;
        for (const auto& [c, off] : K.offset)
            if (db.elements.count(off)) hits++;
        CHECK(hits == (int)db.elements.size());
    }
}

TEST_CASE("ball dump format") {
    auto ball = develop_ball(corpus::path_abc(3, 3), 1, 2);
    std::string text = ball.dump();
    CHECK(text.find("chamber 0 depth 0 rep 1") != std::string::npos);
    CHECK(text.find("vertex2 0 edge ab") != std::string::npos);
    CHECK(text.find("vertex1") != std::string::npos);
}
