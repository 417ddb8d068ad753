#pragma once

// Words in the free algebra and sparse Cyc-linear combinations of them.
// Generators are numbered so that a higher index has higher precedence;
// words compare in graded lexicographic order (degree first, then from the
// left with the larger symbol winning).  A Poly is an ordered word -> Cyc
// map, which gives deterministic iteration everywhere downstream.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hopfinv/scalar.hpp"

namespace hopfinv {

struct Word {
    std::vector<uint8_t> syms;

    Word() = default;
    explicit Word(std::vector<uint8_t> s) : syms(std::move(s)) {}
    static Word one() { return Word{}; }
    static Word gen(int g) { return Word{{static_cast<uint8_t>(g)}}; }

    int degree() const { return static_cast<int>(syms.size()); }
    bool empty() const { return syms.empty(); }

    friend Word operator*(const Word& a, const Word& b) {
        Word r;
        r.syms.reserve(a.syms.size() + b.syms.size());
        r.syms.insert(r.syms.end(), a.syms.begin(), a.syms.end());
        r.syms.insert(r.syms.end(), b.syms.begin(), b.syms.end());
        return r;
    }

    Word subword(size_t from, size_t len) const {
        return Word{{syms.begin() + static_cast<long>(from),
                     syms.begin() + static_cast<long>(from + len)}};
    }

    friend bool operator==(const Word& a, const Word& b) { return a.syms == b.syms; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    // deglex
    friend bool operator<(const Word& a, const Word& b) {
        if (a.syms.size() != b.syms.size()) return a.syms.size() < b.syms.size();
        return a.syms < b.syms;
    }
};

using Poly = std::map<Word, Cyc>;

inline void poly_add_term(Poly& p, const Word& w, const Cyc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

inline void poly_add_scaled(Poly& p, const Poly& q, const Cyc& c) {
    if (c.is_zero()) return;
    for (const auto& [w, a] : q) poly_add_term(p, w, a * c);
}

inline Poly poly_scale(const Poly& p, const Cyc& c) {
    Poly r;
    poly_add_scaled(r, p, c);
    return r;
}

inline Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    poly_add_scaled(r, b, Cyc(1));
    return r;
}

inline Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    poly_add_scaled(r, b, Cyc(-1));
    return r;
}

inline Poly poly_word(const Word& w, const Cyc& c = Cyc(1)) {
    Poly p;
    poly_add_term(p, w, c);
    return p;
}

inline bool poly_is_zero(const Poly& p) { return p.empty(); }

// Degree of a homogeneous poly; -1 for the zero poly.  Throws if mixed.
int poly_degree(const Poly& p);

// Leading (greatest) term.
inline const std::pair<const Word, Cyc>& poly_lead(const Poly& p) {
    return *p.rbegin();
}

std::string word_str(const Word& w, const std::vector<std::string>& names);
std::string poly_str(const Poly& p, const std::vector<std::string>& names);

} // namespace hopfinv
