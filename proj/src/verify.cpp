#include "artin/verify.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>

#include "artin/deligne.hpp"
#include "artin/dihedral.hpp"
#include "artin/farey.hpp"
#include "artin/hierarchy.hpp"
#include "artin/intersection.hpp"

namespace artin {
namespace verify {

namespace {

std::optional<std::array<int, 3>> first_triangle(const DefiningGraph& g, bool labels_all_3) {
    for (int a = 0; a < g.n(); a++)
        for (int b = a + 1; b < g.n(); b++)
            for (int c = b + 1; c < g.n(); c++) {
                if (!(g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c))) continue;
                if (labels_all_3 && !(g.m(a, b) == 3 && g.m(a, c) == 3 && g.m(b, c) == 3))
                    continue;
                return std::array<int, 3>{a, b, c};
            }
    return std::nullopt;
}

struct BallPair {
    deligne::DeligneBall ball;
    intersection::IntersectionBall iball;
};

// the ball is shared between the checks that need it
BallPair& shared_ball(const DefiningGraph& g, const Config& cfg, std::optional<BallPair>& cache) {
    if (!cache) {
        BallPair pair{deligne::develop_ball(g, cfg.depth, cfg.residue_radius, cfg.budget),
                      intersection::IntersectionBall{}};
        pair.iball = intersection::build_td_ball(pair.ball, cfg.budget);
        cache = std::move(pair);
    }
    return *cache;
}

} // namespace

const std::vector<std::string>& Config::all_checks() {
    static const std::vector<std::string> names = {
        "bipartite", "girth6",           "six_cycle_audit", "g1_g2", "pentagon",
        "delta_uniqueness", "link_angle", "farey",          "c1c2"};
    return names;
}

std::vector<CheckResult> run_checks(const DefiningGraph& g, const Config& cfg) {
    std::vector<std::string> selected = cfg.checks.empty() ? Config::all_checks() : cfg.checks;
    std::vector<CheckResult> out;
    std::optional<BallPair> cache;
    auto report = classify(g);

    for (const std::string& name : selected) {
        CheckResult r{name, Status::Inconclusive, ""};
        try {
            if (name == "bipartite") {
                auto& bp = shared_ball(g, cfg, cache);
                bool ok = bp.iball.graph.is_bipartite();
                r.status = ok ? Status::Pass : Status::Fail;
                r.details = "T/D ball on " + std::to_string(bp.iball.vertices.size()) + " vertices";
            } else if (name == "girth6") {
                auto& bp = shared_ball(g, cfg, cache);
                auto girth = bp.iball.graph.girth();
                if (!report.triangle_free) {
                    bool ok = girth.has_value() && *girth == 6;
                    r.status = ok ? Status::Pass : Status::Fail;
                    r.details = girth ? "girth " + std::to_string(*girth) : "no cycles in ball";
                } else {
                    bool ok = !girth.has_value() || *girth >= 8;
                    r.status = ok ? Status::Pass : Status::Fail;
                    r.details = girth ? "girth " + std::to_string(*girth)
                                      : "no cycles in ball (triangle-free graph)";
                }
            } else if (name == "six_cycle_audit") {
                auto& bp = shared_ball(g, cfg, cache);
                auto audit = intersection::six_cycle_audit(bp.iball, bp.ball);
                r.status = audit.multiple == 0 ? Status::Pass : Status::Fail;
                r.details = "total " + std::to_string(audit.total) + ", unique " +
                            std::to_string(audit.unique) + ", multiple " +
                            std::to_string(audit.multiple) + ", inconclusive " +
                            std::to_string(audit.inconclusive);
            } else if (name == "g1_g2") {
                auto triangle = first_triangle(g, false);
                if (!triangle) {
                    r.status = Status::Inconclusive;
                    r.details = "no triangle in the defining graph";
                } else {
                    auto& bp = shared_ball(g, cfg, cache);
                    auto [a, b, c] = *triangle;
                    auto probe = intersection::g1_g2_probe(bp.iball, bp.ball, a, b, c);
                    bool ok = probe.y_construction_found && probe.g1_embeddings > 0 &&
                              probe.g2_embeddings == 0;
                    r.status = ok ? Status::Pass : Status::Fail;
                    r.details = "n=" + std::to_string(probe.n) + " g1_found=" +
                                (probe.g1_embeddings > 0 ? "yes" : "no") + " g2_embeddings=" +
                                std::to_string(probe.g2_embeddings);
                }
            } else if (name == "pentagon") {
                auto triangle = first_triangle(g, true);
                if (!triangle) {
                    r.status = Status::Inconclusive;
                    r.details = "no (3,3,3) triangle in the defining graph";
                } else {
                    auto [a, b, c] = *triangle;
                    auto pent = intersection::exotic_pentagon(g, a, b, c);
                    r.status = pent.all_certified ? Status::Pass : Status::Fail;
                    r.details = "5 commutation certificates";
                }
            } else if (name == "delta_uniqueness") {
                std::vector<int> labels;
                for (auto [u, v] : g.edges()) labels.push_back(g.m(u, v));
                std::sort(labels.begin(), labels.end());
                labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
                bool ok = true;
                for (int m : labels)
                    if (m >= 3 && !dihedral::delta_power_coset_check(m, 3, 3)) ok = false;
                r.status = ok ? Status::Pass : Status::Fail;
                r.details = "K=Q=3 over " + std::to_string(labels.size()) + " edge labels";
            } else if (name == "link_angle") {
                if (!report.connected || !report.large_type) {
                    r.status = Status::Inconclusive;
                    r.details = "needs a connected large-type graph";
                } else {
                    bool ok = true;
                    int pairs = 0;
                    for (int u = 0; u < g.n(); u++)
                        for (int v = u + 1; v < g.n(); v++) {
                            if (g.adjacent(u, v)) continue;
                            pairs++;
                            auto d = deligne::apex_link_distance(g, u, v);
                            if (!d || !(deligne::Fraction::of(1, 1) < *d)) ok = false;
                        }
                    r.status = ok ? Status::Pass : Status::Fail;
                    r.details = std::to_string(pairs) + " non-adjacent pairs, all > pi";
                }
            } else if (name == "farey") {
                auto ball = farey::farey_ball(cfg.farey_qmax, 2);
                auto triangles = farey::edge_two_triangles(ball);
                bool ok = triangles.violations == 0;
                int non_lines = 0;
                for (size_t i = 0; i < ball.vertices.size(); i++)
                    if (ball.interior_vertex((int)i) &&
                        farey::link_is_line(ball, ball.vertices[i]) != farey::LinkShape::Line)
                        non_lines++;
                if (non_lines) ok = false;
                r.status = ok ? Status::Pass : Status::Fail;
                r.details = "qmax " + std::to_string(cfg.farey_qmax) + ", " +
                            std::to_string(triangles.interior_edges) + " interior edges";
            } else if (name == "c1c2") {
                Graph sk = g.skeleton();
                if (sk.n > 10) {
                    r.status = Status::Inconclusive;
                    r.details = "graph too large for the exhaustive cycle cover";
                } else {
                    bool c1 = hierarchy::condition_C1(sk);
                    bool c2 = hierarchy::condition_C2(sk);
                    bool degenerate = sk.n <= 2;
                    r.status = (degenerate || c1 == c2) ? Status::Pass : Status::Fail;
                    r.details = std::string("C1=") + (c1 ? "true" : "false") + " C2=" +
                                (c2 ? "true" : "false") + (degenerate ? " (degenerate size)" : "");
                }
            } else {
                r.status = Status::Fail;
                r.details = "unknown check";
            }
        } catch (const BudgetError& e) {
            r.status = Status::Inconclusive;
            r.details = std::string("budget: ") + e.what();
            r.budget_exhausted = true;
        } catch (const SizeError& e) {
            r.status = Status::Inconclusive;
            r.details = std::string("size: ") + e.what();
            r.budget_exhausted = true;
        } catch (const UnresolvedBallError& e) {
            r.status = Status::Inconclusive;
            r.details = std::string("unresolved: ") + e.what();
            r.budget_exhausted = true;
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_report(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    for (const auto& r : results) {
        out << "CHECK " << r.name << " ";
        switch (r.status) {
            case Status::Pass: out << "PASS"; break;
            case Status::Fail: out << "FAIL"; break;
            case Status::Inconclusive: out << "INCONCLUSIVE"; break;
        }
        if (!r.details.empty()) out << " " << r.details;
        out << "\n";
    }
    return out.str();
}

bool any_failed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (r.status == Status::Fail) return true;
    return false;
}

bool any_budget_exhausted(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (r.budget_exhausted) return true;
    return false;
}

} // namespace verify
} // namespace artin
