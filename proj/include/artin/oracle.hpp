#pragma once

#include <string>
#include <vector>

#include "artin/dihedral.hpp"
#include "artin/words.hpp"

namespace artin {
namespace oracle {

// Three-valued word-problem verdict. Equal and Distinct are sound; Unknown
// records an exhausted budget and downstream exact checks must treat it as
// failure, never as either answer.
enum class Verdict { Equal, Distinct, Unknown };

struct Result {
    Verdict verdict = Verdict::Unknown;
    std::string certificate; // which route decided
    size_t visited = 0;      // words visited by the bounded search, if it ran

    bool equal() const { return verdict == Verdict::Equal; }
    bool distinct() const { return verdict == Verdict::Distinct; }
};

struct Budget {
    size_t closure_words = 1000000; // cap on any braid-move closure
    size_t search_words = 60000;    // distinct words visited by the search
};

// Generators joined by an odd-labelled path collapse to one abelianisation
// class; returns vertex -> class id (class ids are dense, order of first
// appearance).
std::vector<int> abelianization_classes(const DefiningGraph& g);

// Exponent sums per abelianisation class; invariant of group equality.
std::vector<long long> abelianization(const GroupWord& w, const DefiningGraph& g);

// Exact equality in the Coxeter quotient W_Gamma (Tits: braid moves plus
// cancellation of adjacent equal letters reach the empty word iff trivial).
bool coxeter_equal(const GroupWord& w1, const GroupWord& w2, const DefiningGraph& g,
                   size_t closure_budget = 1000000);

// Canonical spelling of the image in the Coxeter quotient: Tits-reduce, then
// take the lex-least word of the braid closure. Words equal in A_Gamma get
// equal keys, so this is a sound separating invariant.
std::string coxeter_key(const GroupWord& w, const DefiningGraph& g,
                        size_t closure_budget = 1000000);

// Image in W x| (sum_T Z), T the reflections of W: each letter v^s moves the
// W-part by the reflection of v and adds s to the coordinate of the
// conjugated reflection w v w^-1. Strictly finer than the Coxeter image
// (it sees generator powers), still an invariant of group equality.
std::string reflection_cocycle_key(const GroupWord& w, const DefiningGraph& g,
                                   size_t closure_budget = 1000000);

// Searches a cached, on-demand-extended family of verified homomorphisms
// into GL_2 over small prime fields for one separating the two words. A
// separating image is an exact distinctness certificate; the search is
// deterministic and budgeted.
bool finite_quotient_distinct(const GroupWord& w1, const GroupWord& w2, const DefiningGraph& g);

// Exact equality of positive words in A_Gamma via braid-move closure
// membership (the Artin monoid embeds).
bool positive_equal(const GroupWord& w1, const GroupWord& w2, const DefiningGraph& g,
                    size_t closure_budget = 1000000);

// Exact equality when Gamma is a tree: amalgam normal-form reduction along a
// leaf edge, with dihedral factor arithmetic and pinned <v>-coset tests.
bool tree_equal(const GroupWord& w1, const GroupWord& w2, const DefiningGraph& g);

// Exact triviality over a forest defining graph (generalises tree_equal and
// the single-edge and free cases).
bool forest_trivial(const GroupWord& w, const DefiningGraph& g);

// Sound three-valued equality for arbitrary Gamma: exact routes first
// (identical after free reduction, forest-supported subwords, positive
// words), then Distinct certificates (abelianisation, Coxeter), then a
// budgeted bidirectional search over the presentation.
Result artin_equal(const GroupWord& w1, const GroupWord& w2, const DefiningGraph& g,
                   const Budget& budget = {});

} // namespace oracle
} // namespace artin
