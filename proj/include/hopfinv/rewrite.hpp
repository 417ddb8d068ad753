#pragma once

// Degree-bounded noncommutative rewriting.  A quadratic relation set is
// completed into a confluent system by resolving overlap ambiguities of
// composite degree <= D (diamond lemma), after which every element of
// degree <= D has a unique normal form and the irreducible words of each
// degree form a basis of the quotient.

#include <vector>

#include "hopfinv/word.hpp"

namespace hopfinv {

struct RewriteRule {
    Word lhs;            // leading word
    Poly rhs;            // strictly smaller combination it rewrites to
    int origin_degree;   // degree at which the rule arose during completion
};

class RewriteSystem {
public:
    // Relations must be homogeneous of degree >= 2 (quadratic presentations
    // plus whatever straightening rules the caller appends).  Throws
    // std::runtime_error("algebra collapses") if 1 -> 0 is derived.
    static RewriteSystem complete(const std::vector<Poly>& relations, int ngens, int D);

    int ngens() const { return ngens_; }
    int degree_bound() const { return degree_bound_; }
    int complete_through() const { return complete_through_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }

    // Fully reduced form; zero iff the element lies in the two-sided ideal.
    Poly normal_form(const Poly& p) const;
    Poly normal_form(const Word& w) const { return normal_form(poly_word(w)); }

    // Is some rule lhs a subword of w?
    bool reducible(const Word& w) const;

    // All irreducible words of degree d, ascending in the term order.
    std::vector<Word> basis(int d) const;

private:
    int ngens_ = 0;
    int degree_bound_ = 0;
    int complete_through_ = 0;
    std::vector<RewriteRule> rules_;

    // One reduction step at the leftmost reducible position; false if w is
    // already irreducible.
    bool reduce_word_once(const Word& w, Poly& out) const;
};

} // namespace hopfinv
