#include "artin/words.hpp"

#include <sstream>

namespace artin {

GroupWord free_reduce(const GroupWord& w) {
    GroupWord out;
    for (int l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

GroupWord inverse(const GroupWord& w) {
    GroupWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

GroupWord concat(const GroupWord& a, const GroupWord& b) {
    GroupWord out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

bool is_positive(const GroupWord& w) {
    for (int l : w)
        if (l < 0) return false;
    return true;
}

GroupWord parse_word(const std::string& text, const DefiningGraph& g) {
    GroupWord w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        int sign = 1;
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
            sign = -1;
            tok = tok.substr(0, tok.size() - 3);
        }
        auto v = g.vertex(tok);
        if (!v) throw PreconditionError("unknown generator '" + tok + "'");
        w.push_back(letter(*v, sign));
    }
    return w;
}

std::string format_word(const GroupWord& w, const DefiningGraph& g) {
    if (w.empty()) return "1";
    std::ostringstream out;
    for (size_t i = 0; i < w.size(); i++) {
        if (i) out << " ";
        out << g.names[letter_vertex(w[i])];
        if (letter_sign(w[i]) < 0) out << "^-1";
    }
    return out.str();
}

} // namespace artin
