#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "artin/errors.hpp"

namespace artin {
namespace dihedral {

// Rank-2 Artin group <a,b | aba... = bab...> (m letters each side). Elements
// are written over 'a','b','A','B' with uppercase meaning inverse.

// Both spellings of the Garside element: delta_word(m,'a') = "abab..".
std::string delta_word(int m, char first);

// All positive words reachable by replacing one relator spelling by the
// other; length-preserving, so the closure is finite.
std::set<std::string> positive_closure(const std::string& w, int m,
                                       size_t budget = 1000000);

// Garside form Delta^k * tail with tail positive, not left-divisible by
// Delta, and shortlex-least in its braid-move closure.
struct Element {
    int m = 0;
    long long k = 0;
    std::string tail;

    bool operator==(const Element& o) const = default;
    auto operator<=>(const Element& o) const = default;
    bool is_identity() const { return k == 0 && tail.empty(); }
};

Element identity(int m);
Element nf(const std::string& signed_word, int m, size_t budget = 1000000);
Element mult(const Element& x, const Element& y, size_t budget = 1000000);
Element inv(const Element& x, size_t budget = 1000000);
inline bool eq(const Element& x, const Element& y) { return x == y; }

Element generator_power(int m, char c, long long t);
Element delta_power(int m, long long k);

// Generates the centre: Delta^2 for odd m, Delta for even m.
Element center_generator(int m);

// A short signed word spelling the element.
std::string element_word(const Element& x);

// Exponent sums forced by the abelianisation (total for odd m, per-letter
// for even m).
long long exponent_sum(const Element& x);            // odd m
long long exponent_sum(const Element& x, char c);    // even m

// x == c^t for some t? The candidate t is pinned by the abelianisation, so
// this is a single equality check.
std::optional<long long> generator_power_exponent(const Element& x, char c);

// x^-1 y in <c>.
bool coset_equal_gen(const Element& x, const Element& y, char c);

// Unique representative of the coset h<gen> with gen-exponent zero: the
// shift is pinned by the abelianisation, so equal cosets map to the same
// element and distinct cosets never collide.
Element coset_normal_form(const Element& h, char gen);

// Every coincidence nf(Delta^k a^q) = nf(Delta^k' b^q') in the scanned box
// must have k = k' and q = q' = 0.
bool delta_power_coset_check(int m, int K, int Q);

// All elements spelled by signed words of length <= radius, each with a
// geodesic spelling.
struct Ball {
    int m = 0;
    int radius = 0;
    std::map<Element, std::string> elements; // element -> geodesic word
    std::map<Element, int> depth;
};
Ball ball(int m, int radius, size_t budget = 1000000);

} // namespace dihedral
} // namespace artin
