#pragma once

#include <memory>
#include <string>
#include <vector>

#include "artin/graph.hpp"

namespace artin {
namespace hierarchy {

// A pair of proper full subgraphs covering the whole graph; determined by the
// separator S = gamma1 ^ gamma2 and a bipartition of the components of G - S.
struct Decomposition {
    std::vector<int> gamma1, gamma2, intersection; // sorted vertex ids

    // not empty, not a single vertex, not a single edge
    bool twistless(const DefiningGraph& g) const;
};

struct Options {
    int vertex_cap = 16;
    int c1_cap = 10;
};

// All decompositions up to swapping the two sides, ordered by separator size
// then lexicographically.
std::vector<Decomposition> admissible_decompositions(const DefiningGraph& g,
                                                     bool twistless_only,
                                                     const Options& opt = {});

struct Node {
    std::vector<int> subset; // sorted ambient vertex ids
    int center = -1;         // leaf: star centre; -1 for splits
    Decomposition split;
    std::unique_ptr<Node> left, right;

    bool is_leaf() const { return center >= 0; }
};
using Tree = std::unique_ptr<Node>;

// The induced subgraph is the closed star of some vertex and has no
// separating vertex or edge; returns the smallest such centre.
std::optional<int> twistless_star_center(const DefiningGraph& g, const std::vector<int>& subset);

// Exhaustive memoized search for a twistless hierarchy terminating in
// twistless stars; deterministic (smallest separator first).
std::optional<Tree> find_twistless_hierarchy(const DefiningGraph& g, const Options& opt = {});

// Certificate verification, independent of the search. On failure `reason`
// explains the first violated condition.
bool check_hierarchy(const DefiningGraph& g, const Node& tree, std::string* reason = nullptr);

std::string serialize(const Node& tree, const DefiningGraph& g);
Tree parse_tree(const std::string& text, const DefiningGraph& g);

// C1: union of induced cycles, chained so that consecutive ones share an
// edge. C2: connected with no separating vertex.
bool condition_C1(const Graph& g, const Options& opt = {});
bool condition_C2(const Graph& g);

} // namespace hierarchy
} // namespace artin
