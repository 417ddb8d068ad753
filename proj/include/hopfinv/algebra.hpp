#pragma once

// Concrete graded algebras: skew quotients of k<u,v>, Ore extensions
// A[t;sigma], and cocycle-twisted algebras.  An Algebra owns a completed
// rewrite system, degree-wise normal-form bases, and a memoized product
// table, and validates the AS regular Hilbert function on construction.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hopfinv/linalg.hpp"
#include "hopfinv/rewrite.hpp"
#include "hopfinv/word.hpp"

namespace hopfinv {

struct OreData {
    // Graded automorphism of the base, columns = images of the base
    // generators.  The Ore variable is appended as the highest-precedence
    // generator with straightening rules t*g -> sigma(g)*t.
    CMat sigma;
};

class Algebra;
using AlgebraHandle = std::shared_ptr<const Algebra>;

class Algebra {
public:
    // Throws on: inhomogeneous/non-quadratic relations, non-invertible
    // sigma, a collapsing ideal, or a Hilbert function that differs from
    // the AS regular one for the generator count.
    static AlgebraHandle build(std::vector<std::string> gen_names,
                               std::vector<Poly> relations,
                               const std::optional<OreData>& ore,
                               int D);

    const std::vector<std::string>& names() const { return names_; }
    int ngens() const { return static_cast<int>(names_.size()); }
    int gk_generators() const { return ngens(); }
    int degree_bound() const { return D_; }
    const RewriteSystem& system() const { return sys_; }
    const std::vector<Poly>& relations() const { return relations_; }

    const std::vector<Word>& basis(int d) const;
    int dim(int d) const { return static_cast<int>(basis(d).size()); }
    Eigen::Index basis_index(int d, const Word& w) const;

    // Normal form of the concatenation product; throws on degree overflow.
    Poly multiply(const Poly& p, const Poly& q) const;
    Poly word_product(const Word& a, const Word& b) const;
    Poly reduce(const Poly& p) const { return sys_.normal_form(p); }

    CVec to_vec(int d, const Poly& p) const;
    Poly from_vec(int d, const CVec& v) const;

    // Independent degree-wise ideal-quotient dimension: free monomial count
    // minus the rank of the span {w1 * r * w2}.  Capped at small degrees.
    int ideal_quotient_oracle(int d, int cap = 6) const;

    std::string poly_text(const Poly& p) const { return poly_str(p, names_); }

private:
    std::vector<std::string> names_;
    std::vector<Poly> relations_;
    RewriteSystem sys_;
    int D_ = 0;
    std::vector<std::vector<Word>> basis_;

    mutable std::mutex cache_mu_;
    mutable std::map<Word, Poly> prod_cache_;
};

// An invertible element of kF (x) kF for a small abelian group F, stored
// over an explicit element list with its multiplication table.
struct TwistElement {
    std::vector<std::string> group_names;          // element labels, index 0 = identity
    std::vector<std::vector<int>> mul;             // group multiplication table
    std::vector<std::tuple<int, int, Cyc>> terms;  // (g1, g2, coeff)

    bool is_normal() const;          // (id (x) eps) = (eps (x) id) = 1
    TwistElement inverse() const;    // throws std::domain_error if singular
};

// a *_Omega b = sum (Omega^(1).a)(Omega^(2).b) on an algebra carrying an
// action of F by graded automorphisms (degree-1 matrices per F element).
class TwistedProduct {
public:
    TwistedProduct(AlgebraHandle A, TwistElement omega, std::vector<CMat> group_action);

    const AlgebraHandle& algebra() const { return A_; }
    const TwistElement& omega() const { return omega_; }

    Poly act_group(int g, const Poly& p) const;  // multiplicative extension
    Poly multiply(const Poly& a, const Poly& b) const;

private:
    AlgebraHandle A_;
    TwistElement omega_;
    std::vector<CMat> action_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, Word>, Poly> act_cache_;
};

struct TwistResult {
    AlgebraHandle twisted;               // re-presented on the new generators
    std::vector<Poly> new_gens;          // new generators as degree-1 elements of A
    std::shared_ptr<const TwistedProduct> product;
};

// Re-present A_Omega on `new_gens` (degree-1 elements of A, default the
// original generators): the quadratic relations are recovered as the kernel
// of the twisted degree-2 multiplication map and the result is revalidated
// through Algebra::build.  The two-generator case must recover exactly one
// relation.
TwistResult twist_algebra(const AlgebraHandle& A,
                          const std::vector<CMat>& group_action,
                          const TwistElement& omega,
                          int D,
                          std::vector<std::string> new_names,
                          const std::vector<Poly>& new_gens);

} // namespace hopfinv
