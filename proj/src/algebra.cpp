#include "hopfinv/algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hopfinv {

namespace {

long expected_regular_dim(int ngens, int d) {
    if (ngens == 2) return d + 1;
    if (ngens == 3) return static_cast<long>(d + 1) * (d + 2) / 2;
    throw std::logic_error("expected_regular_dim: unsupported generator count");
}

Poly column_poly(const CMat& m, int col) {
    Poly p;
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        poly_add_term(p, Word::gen(static_cast<int>(r)), m(r, col));
    return p;
}

} // namespace

AlgebraHandle Algebra::build(std::vector<std::string> gen_names,
                             std::vector<Poly> relations,
                             const std::optional<OreData>& ore,
                             int D) {
    auto alg = std::make_shared<Algebra>();
    alg->names_ = std::move(gen_names);
    int n = alg->ngens();
    for (const Poly& r : relations)
        if (poly_degree(r) != 2)
            throw std::runtime_error("build_algebra: relations must be homogeneous quadratic");
    if (ore) {
        // Ore variable is the last generator; sigma acts on the first n-1.
        const CMat& s = ore->sigma;
        if (s.rows() != n - 1 || s.cols() != n - 1)
            throw std::runtime_error("build_algebra: sigma has wrong shape");
        Cyc det = s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0);
        if (s.rows() == 2 && det.is_zero())
            throw std::runtime_error("build_algebra: sigma is not invertible");
        int t = n - 1;
        for (int g = 0; g < n - 1; ++g) {
            Poly rule = poly_word(Word::gen(t) * Word::gen(g));
            Poly image = column_poly(s, g);
            for (const auto& [w, c] : image)
                poly_add_term(rule, w * Word::gen(t), -c);
            relations.push_back(std::move(rule));
        }
    }
    alg->relations_ = relations;
    alg->sys_ = RewriteSystem::complete(relations, n, D);
    alg->D_ = D;
    alg->basis_.resize(static_cast<size_t>(D) + 1);
    for (int d = 0; d <= D; ++d) {
        alg->basis_[static_cast<size_t>(d)] = alg->sys_.basis(d);
        long got = static_cast<long>(alg->basis_[static_cast<size_t>(d)].size());
        if (got != expected_regular_dim(n, d))
            throw std::runtime_error(
                "build_algebra: not the expected regular Hilbert series at degree " +
                std::to_string(d) + " (dim " + std::to_string(got) + ")");
    }
    return alg;
}

const std::vector<Word>& Algebra::basis(int d) const {
    if (d < 0 || d > D_) throw std::out_of_range("basis: degree out of range");
    return basis_[static_cast<size_t>(d)];
}

Eigen::Index Algebra::basis_index(int d, const Word& w) const {
    const auto& b = basis(d);
    auto it = std::lower_bound(b.begin(), b.end(), w);
    if (it == b.end() || !(*it == w))
        throw std::logic_error("basis_index: word is not in normal form");
    return static_cast<Eigen::Index>(it - b.begin());
}

Poly Algebra::word_product(const Word& a, const Word& b) const {
    Word cat = a * b;
    if (cat.degree() > D_)
        throw std::runtime_error("multiply: degree overflow beyond bound " + std::to_string(D_));
    {
        std::lock_guard<std::mutex> lk(cache_mu_);
        auto it = prod_cache_.find(cat);
        if (it != prod_cache_.end()) return it->second;
    }
    Poly nf = sys_.normal_form(poly_word(cat));
    {
        std::lock_guard<std::mutex> lk(cache_mu_);
        prod_cache_.emplace(cat, nf);
    }
    return nf;
}

Poly Algebra::multiply(const Poly& p, const Poly& q) const {
    Poly r;
    for (const auto& [wp, cp] : p)
        for (const auto& [wq, cq] : q)
            poly_add_scaled(r, word_product(wp, wq), cp * cq);
    return r;
}

CVec Algebra::to_vec(int d, const Poly& p) const {
    CVec v(dim(d));
    v.setConstant(Cyc(0));
    for (const auto& [w, c] : p) {
        if (w.degree() != d) throw std::logic_error("to_vec: degree mismatch");
        v(basis_index(d, w)) = c;
    }
    return v;
}

Poly Algebra::from_vec(int d, const CVec& v) const {
    const auto& b = basis(d);
    Poly p;
    for (Eigen::Index k = 0; k < v.size(); ++k)
        poly_add_term(p, b[static_cast<size_t>(k)], v(k));
    return p;
}

int Algebra::ideal_quotient_oracle(int d, int cap) const {
    if (d > cap)
        throw std::runtime_error("ideal_quotient_oracle: degree above oracle cap");
    int n = ngens();
    long free_count = 1;
    for (int k = 0; k < d; ++k) free_count *= n;
    auto index_of = [&](const Word& w) {
        long idx = 0;
        for (uint8_t s : w.syms) idx = idx * n + s;
        return idx;
    };
    // all words of a given degree, recursively
    std::vector<Word> words_by_deg_cache;
    auto words_of = [&](int deg) {
        std::vector<Word> out;
        Word cur;
        auto rec = [&](auto&& self, int remaining) -> void {
            if (remaining == 0) {
                out.push_back(cur);
                return;
            }
            for (int g = 0; g < n; ++g) {
                cur.syms.push_back(static_cast<uint8_t>(g));
                self(self, remaining - 1);
                cur.syms.pop_back();
            }
        };
        rec(rec, deg);
        return out;
    };
    // sparse elimination over free-word indices
    std::map<long, std::map<long, Cyc>> pivots;
    long rank_count = 0;
    auto insert_row = [&](std::map<long, Cyc> row) {
        while (!row.empty()) {
            long lead = row.rbegin()->first;
            auto pit = pivots.find(lead);
            if (pit == pivots.end()) {
                Cyc inv = row.rbegin()->second.inverse();
                for (auto& [k, c] : row) c *= inv;
                pivots.emplace(lead, std::move(row));
                ++rank_count;
                return;
            }
            Cyc f = row.rbegin()->second;
            for (const auto& [k, c] : pit->second) {
                auto it = row.find(k);
                Cyc delta = f * c;
                if (it == row.end()) {
                    row.emplace(k, -delta);
                } else {
                    it->second -= delta;
                    if (it->second.is_zero()) row.erase(it);
                }
            }
        }
    };
    for (const Poly& rel : relations_) {
        int rd = poly_degree(rel);
        if (rd > d) continue;
        for (int a = 0; a + rd <= d; ++a) {
            int b = d - rd - a;
            for (const Word& w1 : words_of(a))
                for (const Word& w2 : words_of(b)) {
                    std::map<long, Cyc> row;
                    for (const auto& [w, c] : rel) row[index_of(w1 * w * w2)] = c;
                    insert_row(std::move(row));
                }
        }
    }
    return static_cast<int>(free_count - rank_count);
}

bool TwistElement::is_normal() const {
    size_t n = group_names.size();
    std::vector<Cyc> left(n), right(n);
    for (const auto& [g1, g2, c] : terms) {
        left[static_cast<size_t>(g1)] += c;   // (id (x) eps)
        right[static_cast<size_t>(g2)] += c;  // (eps (x) id)
    }
    for (size_t k = 0; k < n; ++k) {
        Cyc want(k == 0 ? 1 : 0);
        if (left[k] != want || right[k] != want) return false;
    }
    return true;
}

TwistElement TwistElement::inverse() const {
    long n = static_cast<long>(group_names.size());
    long dim = n * n;
    // Omega acts by left multiplication on k[F x F]; solve Omega * X = 1 (x) 1.
    CMat M = cmat_zero(dim, dim);
    for (const auto& [g1, g2, c] : terms)
        for (long h1 = 0; h1 < n; ++h1)
            for (long h2 = 0; h2 < n; ++h2) {
                long col = h1 * n + h2;
                long row = mul[static_cast<size_t>(g1)][static_cast<size_t>(h1)] * n +
                           mul[static_cast<size_t>(g2)][static_cast<size_t>(h2)];
                M(row, col) += c;
            }
    CMat inv = cmat_inverse(M);  // throws if Omega is not invertible
    TwistElement r;
    r.group_names = group_names;
    r.mul = mul;
    for (long h1 = 0; h1 < n; ++h1)
        for (long h2 = 0; h2 < n; ++h2) {
            Cyc c = inv(h1 * n + h2, 0);  // column of 1 (x) 1
            if (!c.is_zero()) r.terms.emplace_back(static_cast<int>(h1), static_cast<int>(h2), c);
        }
    return r;
}

TwistedProduct::TwistedProduct(AlgebraHandle A, TwistElement omega, std::vector<CMat> group_action)
    : A_(std::move(A)), omega_(std::move(omega)), action_(std::move(group_action)) {
    if (action_.size() != omega_.group_names.size())
        throw std::logic_error("TwistedProduct: one action matrix per group element required");
}

Poly TwistedProduct::act_group(int g, const Poly& p) const {
    Poly out;
    for (const auto& [w, c] : p) {
        Poly img;
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = act_cache_.find({g, w});
            if (it != act_cache_.end()) img = it->second;
        }
        if (img.empty() && !w.empty()) {
            img = poly_word(Word::one());
            for (uint8_t s : w.syms) {
                Poly letter;
                const CMat& m = action_[static_cast<size_t>(g)];
                for (Eigen::Index r = 0; r < m.rows(); ++r)
                    poly_add_term(letter, Word::gen(static_cast<int>(r)), m(r, s));
                img = A_->multiply(img, letter);
            }
            std::lock_guard<std::mutex> lk(mu_);
            act_cache_.emplace(std::make_pair(g, w), img);
        } else if (w.empty()) {
            img = poly_word(Word::one());
        }
        poly_add_scaled(out, img, c);
    }
    return out;
}

Poly TwistedProduct::multiply(const Poly& a, const Poly& b) const {
    Poly r;
    for (const auto& [g1, g2, c] : omega_.terms) {
        Poly left = act_group(g1, a);
        if (left.empty()) continue;
        Poly right = act_group(g2, b);
        if (right.empty()) continue;
        poly_add_scaled(r, A_->multiply(left, right), c);
    }
    return r;
}

TwistResult twist_algebra(const AlgebraHandle& A,
                          const std::vector<CMat>& group_action,
                          const TwistElement& omega,
                          int D,
                          std::vector<std::string> new_names,
                          const std::vector<Poly>& new_gens) {
    if (!omega.is_normal())
        throw std::runtime_error("twist_algebra: Omega is not a normal dual cocycle");
    omega.inverse();  // existence check
    auto prod = std::make_shared<TwistedProduct>(A, omega, group_action);

    std::vector<Poly> gens = new_gens;
    if (gens.empty())
        for (int g = 0; g < A->ngens(); ++g) gens.push_back(poly_word(Word::gen(g)));
    int n = static_cast<int>(gens.size());

    // kernel of the twisted degree-2 multiplication map
    int dim2 = A->dim(2);
    CMat M = cmat_zero(dim2, static_cast<long>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Poly p = prod->multiply(gens[static_cast<size_t>(a)], gens[static_cast<size_t>(b)]);
            M.col(a * n + b) = A->to_vec(2, p);
        }
    CMat ker = nullspace(M);
    long expected = static_cast<long>(n) * n - dim2;
    if (ker.cols() != expected)
        throw std::runtime_error("twist_algebra: twisted relation kernel has dimension " +
                                 std::to_string(ker.cols()) + ", expected " +
                                 std::to_string(expected));
    std::vector<Poly> relations;
    for (Eigen::Index k = 0; k < ker.cols(); ++k) {
        Poly rel;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                poly_add_term(rel, Word::gen(a) * Word::gen(b), ker(a * n + b, k));
        relations.push_back(std::move(rel));
    }
    TwistResult res;
    res.twisted = Algebra::build(std::move(new_names), std::move(relations), std::nullopt, D);
    res.new_gens = gens;
    res.product = prod;
    return res;
}

} // namespace hopfinv
