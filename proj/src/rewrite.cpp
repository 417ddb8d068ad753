#include "hopfinv/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace hopfinv {

namespace {

bool contains_at(const Word& w, const Word& sub, size_t pos) {
    if (pos + sub.syms.size() > w.syms.size()) return false;
    return std::equal(sub.syms.begin(), sub.syms.end(), w.syms.begin() + static_cast<long>(pos));
}

bool contains(const Word& w, const Word& sub) {
    if (sub.syms.size() > w.syms.size()) return false;
    for (size_t p = 0; p + sub.syms.size() <= w.syms.size(); ++p)
        if (contains_at(w, sub, p)) return true;
    return false;
}

Poly reduce_full(const Poly& p, const std::vector<RewriteRule>& rules) {
    Poly work = p;
    Poly done;
    while (!work.empty()) {
        auto it = std::prev(work.end());
        Word w = it->first;
        Cyc c = it->second;
        work.erase(it);
        bool reduced = false;
        for (size_t pos = 0; pos < w.syms.size() && !reduced; ++pos) {
            for (const RewriteRule& r : rules) {
                if (!contains_at(w, r.lhs, pos)) continue;
                Word prefix = w.subword(0, pos);
                Word suffix = w.subword(pos + r.lhs.syms.size(),
                                        w.syms.size() - pos - r.lhs.syms.size());
                for (const auto& [rw, rc] : r.rhs)
                    poly_add_term(work, prefix * rw * suffix, c * rc);
                reduced = true;
                break;
            }
        }
        if (!reduced) poly_add_term(done, w, c);
    }
    return done;
}

RewriteRule make_rule(const Poly& p, int origin) {
    const auto& [lead, coeff] = poly_lead(p);
    Poly rhs;
    Cyc inv = coeff.inverse();
    for (const auto& [w, c] : p) {
        if (w == lead) continue;
        poly_add_term(rhs, w, -(c * inv));
    }
    return RewriteRule{lead, std::move(rhs), origin};
}

} // namespace

RewriteSystem RewriteSystem::complete(const std::vector<Poly>& relations, int ngens, int D) {
    RewriteSystem sys;
    sys.ngens_ = ngens;
    sys.degree_bound_ = D;

    std::deque<Poly> pending(relations.begin(), relations.end());
    std::vector<RewriteRule>& rules = sys.rules_;

    auto absorb_pending = [&]() {
        while (!pending.empty()) {
            Poly p = reduce_full(pending.front(), rules);
            pending.pop_front();
            if (p.empty()) continue;
            int deg = poly_degree(p);
            if (deg == 0) throw std::runtime_error("algebra collapses");
            RewriteRule nr = make_rule(p, deg);
            // retire rules whose lhs the new lhs divides, re-reduce the rest
            std::vector<RewriteRule> kept;
            for (RewriteRule& r : rules) {
                if (contains(r.lhs, nr.lhs)) {
                    Poly back = poly_word(r.lhs) - r.rhs;
                    pending.push_back(back);
                } else {
                    kept.push_back(std::move(r));
                }
            }
            rules = std::move(kept);
            rules.push_back(std::move(nr));
            for (RewriteRule& r : rules) r.rhs = reduce_full(r.rhs, rules);
        }
    };

    absorb_pending();
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t a = 0; a < rules.size() && !changed; ++a) {
            for (size_t b = 0; b < rules.size() && !changed; ++b) {
                const Word& l1 = rules[a].lhs;
                const Word& l2 = rules[b].lhs;
                // proper overlaps: nonempty suffix of l1 = prefix of l2
                for (size_t k = 1; k < std::min(l1.syms.size(), l2.syms.size()); ++k) {
                    if (!std::equal(l2.syms.begin(), l2.syms.begin() + static_cast<long>(k),
                                    l1.syms.end() - static_cast<long>(k)))
                        continue;
                    size_t comp = l1.syms.size() + l2.syms.size() - k;
                    if (static_cast<int>(comp) > D) continue;
                    Word head = l1.subword(0, l1.syms.size() - k);
                    Word tail = l2.subword(k, l2.syms.size() - k);
                    Poly left;  // reduce l1 first
                    for (const auto& [w, c] : rules[a].rhs)
                        poly_add_term(left, w * tail, c);
                    Poly right; // reduce l2 first
                    for (const auto& [w, c] : rules[b].rhs)
                        poly_add_term(right, head * w, c);
                    Poly diff = reduce_full(left - right, rules);
                    if (!diff.empty()) {
                        pending.push_back(diff);
                        absorb_pending();
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    sys.complete_through_ = D;
    return sys;
}

bool RewriteSystem::reducible(const Word& w) const {
    for (const RewriteRule& r : rules_)
        if (contains(w, r.lhs)) return true;
    return false;
}

bool RewriteSystem::reduce_word_once(const Word& w, Poly& out) const {
    for (size_t pos = 0; pos < w.syms.size(); ++pos) {
        for (const RewriteRule& r : rules_) {
            if (!contains_at(w, r.lhs, pos)) continue;
            Word prefix = w.subword(0, pos);
            Word suffix = w.subword(pos + r.lhs.syms.size(),
                                    w.syms.size() - pos - r.lhs.syms.size());
            for (const auto& [rw, rc] : r.rhs)
                poly_add_term(out, prefix * rw * suffix, rc);
            return true;
        }
    }
    return false;
}

Poly RewriteSystem::normal_form(const Poly& p) const {
    for (const auto& [w, c] : p)
        if (w.degree() > complete_through_)
            throw std::runtime_error("normal_form: degree exceeds completion bound");
    Poly work = p;
    Poly done;
    while (!work.empty()) {
        auto it = std::prev(work.end());
        Word w = it->first;
        Cyc c = it->second;
        work.erase(it);
        Poly step;
        if (reduce_word_once(w, step)) {
            poly_add_scaled(work, step, c);
        } else {
            poly_add_term(done, w, c);
        }
    }
    return done;
}

std::vector<Word> RewriteSystem::basis(int d) const {
    std::vector<Word> out;
    size_t max_lhs = 0;
    for (const RewriteRule& r : rules_)
        max_lhs = std::max(max_lhs, r.lhs.syms.size());
    Word cur;
    cur.syms.reserve(static_cast<size_t>(d));
    auto suffix_ok = [&]() {
        // only the suffix ending at the appended symbol can newly match
        for (const RewriteRule& r : rules_) {
            if (r.lhs.syms.size() > cur.syms.size()) continue;
            if (contains_at(cur, r.lhs, cur.syms.size() - r.lhs.syms.size()))
                return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int g = 0; g < ngens_; ++g) {
            cur.syms.push_back(static_cast<uint8_t>(g));
            if (suffix_ok()) self(self, remaining - 1);
            cur.syms.pop_back();
        }
    };
    rec(rec, d);
    return out;
}

} // namespace hopfinv
