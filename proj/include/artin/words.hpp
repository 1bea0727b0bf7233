#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "artin/graph.hpp"

namespace artin {

// Word over the standard generators of an ambient defining graph. A letter is
// +(v+1) for the generator of vertex v and -(v+1) for its inverse.
using GroupWord = std::vector<int>;

inline int letter(int vertex, int sign) { return sign > 0 ? vertex + 1 : -(vertex + 1); }
inline int letter_vertex(int l) { return (l > 0 ? l : -l) - 1; }
inline int letter_sign(int l) { return l > 0 ? 1 : -1; }

GroupWord free_reduce(const GroupWord& w);
GroupWord inverse(const GroupWord& w);
GroupWord concat(const GroupWord& a, const GroupWord& b);
bool is_positive(const GroupWord& w);

// CLI syntax: whitespace-separated tokens "<vertex>" or "<vertex>^-1".
GroupWord parse_word(const std::string& text, const DefiningGraph& g);
std::string format_word(const GroupWord& w, const DefiningGraph& g);

struct WordHash {
    size_t operator()(const GroupWord& w) const {
        size_t h = 146527;
        for (int x : w) h = h * 1099511628211ull + (size_t)(x + 64);
        return h;
    }
};

} // namespace artin
