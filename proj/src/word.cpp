#include "hopfinv/word.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfinv {

int poly_degree(const Poly& p) {
    if (p.empty()) return -1;
    int d = p.begin()->first.degree();
    for (const auto& [w, c] : p)
        if (w.degree() != d) throw std::logic_error("poly_degree: not homogeneous");
    return d;
}

std::string word_str(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::ostringstream os;
    size_t k = 0;
    while (k < w.syms.size()) {
        size_t run = 1;
        while (k + run < w.syms.size() && w.syms[k + run] == w.syms[k]) ++run;
        if (k > 0) os << '*';
        os << names.at(w.syms[k]);
        if (run > 1) os << '^' << run;
        k += run;
    }
    return os.str();
}

std::string poly_str(const Poly& p, const std::vector<std::string>& names) {
    if (p.empty()) return "0";
    std::ostringstream os;
    // leading term first
    bool first = true;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        const Word& w = it->first;
        Cyc c = it->second;
        std::string cs = c.str();
        bool negated = false;
        if ((-c).str().size() < cs.size() || cs[0] == '-') {
            // plain leading '-': print as subtraction
            if (cs[0] == '-' && (-c).str().find('-') == std::string::npos &&
                (-c).str().find('+') == std::string::npos) {
                negated = true;
                c = -c;
                cs = c.str();
            }
        }
        if (first) {
            if (negated) os << '-';
            first = false;
        } else {
            os << (negated ? " - " : " + ");
        }
        bool needs_parens = cs.find('+') != std::string::npos ||
                            cs.find('-') != std::string::npos;
        if (w.empty()) {
            if (needs_parens) os << '(' << cs << ')';
            else os << cs;
        } else if (c == Cyc(1)) {
            os << word_str(w, names);
        } else {
            if (needs_parens) os << '(' << cs << ')';
            else os << cs;
            os << '*' << word_str(w, names);
        }
    }
    return os.str();
}

} // namespace hopfinv
