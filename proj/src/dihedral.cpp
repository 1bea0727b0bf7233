#include "artin/dihedral.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <memory>
#include <mutex>

namespace artin {
namespace dihedral {

namespace {

char flip(char c) {
    switch (c) {
        case 'a': return 'b';
        case 'b': return 'a';
        case 'A': return 'B';
        case 'B': return 'A';
    }
    throw PreconditionError("bad dihedral letter");
}

// sigma = conjugation by Delta: swaps the generators iff m is odd.
std::string sigma_pow(const std::string& w, long long j, int m) {
    if (m % 2 == 0 || j % 2 == 0) return w;
    std::string out = w;
    for (char& c : out) c = flip(c);
    return out;
}

bool alternating_factor(const std::string& w, size_t pos, int m) {
    for (int i = 1; i < m; i++)
        if (w[pos + i] == w[pos + i - 1]) return false;
    return true;
}

std::string flip_factor(const std::string& w, size_t pos, int m) {
    std::string out = w;
    for (int i = 0; i < m; i++) out[pos + i] = flip(out[pos + i]);
    return out;
}

// Positive word with  word * g = Delta  (the Delta spelling ending in g,
// last letter dropped).
std::string delta_complement(char g, int m) {
    std::string rev;
    char cur = flip(g);
    for (int i = 0; i < m - 1; i++) {
        rev += cur;
        cur = flip(cur);
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

} // namespace

std::string delta_word(int m, char first) {
    std::string out;
    char cur = first;
    for (int i = 0; i < m; i++) {
        out += cur;
        cur = flip(cur);
    }
    return out;
}

namespace {

std::set<std::string> closure_uncached(const std::string& w, int m, size_t budget) {
    std::set<std::string> seen{w};
    std::deque<std::string> queue{w};
    while (!queue.empty()) {
        std::string cur = queue.front();
        queue.pop_front();
        if (cur.size() < (size_t)m) continue;
        for (size_t pos = 0; pos + m <= cur.size(); pos++) {
            if (!alternating_factor(cur, pos, m)) continue;
            std::string next = flip_factor(cur, pos, m);
            if (seen.insert(next).second) {
                if (seen.size() > budget) throw BudgetError("positive closure exceeded budget");
                queue.push_back(next);
            }
        }
    }
    return seen;
}

} // namespace

std::set<std::string> positive_closure(const std::string& w, int m, size_t budget) {
    // closures of short tails recur constantly during ball construction
    static std::mutex cache_mutex;
    static std::map<std::pair<int, std::string>, std::shared_ptr<const std::set<std::string>>> cache;
    if (w.size() > 24) return closure_uncached(w, m, budget);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({m, w});
        if (it != cache.end()) return *it->second;
    }
    auto result = std::make_shared<const std::set<std::string>>(closure_uncached(w, m, budget));
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (cache.size() < 400000)
        for (const auto& spell : *result) cache.emplace(std::pair(m, spell), result);
    return *result;
}

Element identity(int m) { return Element{m, 0, ""}; }

namespace {

// Strip maximal Delta power off the front of a positive word, then pick the
// shortlex-least spelling of the remainder. Letters are fed one at a time so
// the working tail stays Delta-free and its closure stays small.
Element reduce_positive(long long k, const std::string& pos, int m, size_t budget) {
    const std::string da = delta_word(m, 'a'), db = delta_word(m, 'b');
    std::string tail;
    auto strip = [&]() {
        bool stripped = true;
        while (stripped && tail.size() >= (size_t)m) {
            stripped = false;
            for (const auto& w : positive_closure(tail, m, budget)) {
                if (w.compare(0, m, da) == 0 || w.compare(0, m, db) == 0) {
                    tail = w.substr(m);
                    k++;
                    stripped = true;
                    break;
                }
            }
        }
    };
    for (char c : pos) {
        tail += c;
        strip();
    }
    if (!tail.empty()) tail = *positive_closure(tail, m, budget).begin();
    return Element{m, k, tail};
}

} // namespace

Element nf(const std::string& signed_word, int m, size_t budget) {
    if (m < 2) throw PreconditionError("coefficient must be >= 2");
    long long k = 0;
    std::string pos;
    for (char c : signed_word) {
        if (c == 'a' || c == 'b') {
            pos += c;
        } else if (c == 'A' || c == 'B') {
            // g^-1 = Delta^-1 * complement(g); the Delta^-1 commutes to the
            // front through `pos` by the sigma twist.
            char g = (c == 'A') ? 'a' : 'b';
            k -= 1;
            pos = sigma_pow(pos, 1, m) + delta_complement(g, m);
        } else {
            throw PreconditionError("bad dihedral letter");
        }
    }
    return reduce_positive(k, pos, m, budget);
}

Element mult(const Element& x, const Element& y, size_t budget) {
    if (x.m != y.m) throw PreconditionError("mixed coefficients");
    return reduce_positive(x.k + y.k, sigma_pow(x.tail, y.k, x.m) + y.tail, x.m, budget);
}

Element inv(const Element& x, size_t budget) {
    // (Delta^k P)^-1 = P^-1 Delta^-k
    std::string w;
    for (auto it = x.tail.rbegin(); it != x.tail.rend(); ++it)
        w += (char)std::toupper(*it);
    Element tail_inv = nf(w, x.m, budget);
    return mult(tail_inv, Element{x.m, -x.k, ""}, budget);
}

Element generator_power(int m, char c, long long t) {
    std::string w((size_t)std::llabs(t), t >= 0 ? c : (char)std::toupper(c));
    return nf(w, m);
}

Element delta_power(int m, long long k) { return Element{m, k, ""}; }

Element center_generator(int m) {
    if (m < 3) throw PreconditionError("coefficient must be >= 3");
    return Element{m, m % 2 ? 2 : 1, ""};
}

std::string element_word(const Element& x) {
    std::string out;
    std::string d = delta_word(x.m, 'a');
    if (x.k >= 0) {
        for (long long i = 0; i < x.k; i++) out += d;
    } else {
        std::string dinv;
        for (auto it = d.rbegin(); it != d.rend(); ++it) dinv += (char)std::toupper(*it);
        for (long long i = 0; i < -x.k; i++) out += dinv;
    }
    return out + x.tail;
}

long long exponent_sum(const Element& x) {
    return x.k * x.m + (long long)x.tail.size();
}

long long exponent_sum(const Element& x, char c) {
    long long s = x.k * (x.m / 2);
    for (char t : x.tail)
        if (t == c) s++;
    return s;
}

std::optional<long long> generator_power_exponent(const Element& x, char c) {
    long long t;
    if (x.m % 2) {
        t = exponent_sum(x);
    } else {
        if (exponent_sum(x, flip(c)) != 0) return std::nullopt;
        t = exponent_sum(x, c);
    }
    if (x == generator_power(x.m, c, t)) return t;
    return std::nullopt;
}

bool coset_equal_gen(const Element& x, const Element& y, char c) {
    Element d = mult(inv(x), y);
    return generator_power_exponent(d, c).has_value();
}

Element coset_normal_form(const Element& h, char gen) {
    long long pin = (h.m % 2) ? exponent_sum(h) : exponent_sum(h, gen);
    return mult(h, generator_power(h.m, gen, -pin));
}

bool delta_power_coset_check(int m, int K, int Q) {
    std::vector<std::pair<std::pair<long long, long long>, Element>> as, bs;
    for (long long k = -K; k <= K; k++)
        for (long long q = -Q; q <= Q; q++) {
            as.push_back({{k, q}, mult(delta_power(m, k), generator_power(m, 'a', q))});
            bs.push_back({{k, q}, mult(delta_power(m, k), generator_power(m, 'b', q))});
        }
    for (const auto& [ka, ea] : as)
        for (const auto& [kb, eb] : bs) {
            if (!(ea == eb)) continue;
            if (ka.first != kb.first || ka.second != 0 || kb.second != 0) return false;
        }
    return true;
}

Ball ball(int m, int radius, size_t budget) {
    Ball out;
    out.m = m;
    out.radius = radius;
    Element id = identity(m);
    out.elements[id] = "";
    out.depth[id] = 0;
    std::deque<Element> frontier{id};
    const char letters[4] = {'a', 'A', 'b', 'B'};
    while (!frontier.empty()) {
        Element cur = frontier.front();
        frontier.pop_front();
        int d = out.depth[cur];
        if (d == radius) continue;
        for (char c : letters) {
            Element next = mult(cur, nf(std::string(1, c), m, budget), budget);
            if (out.elements.count(next)) continue;
            if (out.elements.size() >= budget) throw BudgetError("dihedral ball exceeded budget");
            out.elements[next] = out.elements[cur] + c;
            out.depth[next] = d + 1;
            frontier.push_back(next);
        }
    }
    return out;
}

} // namespace dihedral
} // namespace artin
