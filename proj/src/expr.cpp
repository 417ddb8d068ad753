#include "hopfinv/expr.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hopfinv {

namespace {

Poly concat_mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b)
            poly_add_term(r, wa * wb, ca * cb);
    return r;
}

struct ExprParser {
    std::string_view s;
    size_t pos = 0;
    const EvalContext& ctx;
    Multiplier mul;

    explicit ExprParser(std::string_view text, const EvalContext& c)
        : s(text), ctx(c), mul(c.mul ? c.mul : Multiplier(concat_mul)) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eof() { return peek() == '\0'; }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("expression parse error at position " +
                                    std::to_string(pos) + " in \"" + std::string(s) +
                                    "\": " + what);
    }

    unsigned parse_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected number");
        return static_cast<unsigned>(std::stoul(std::string(s.substr(start, pos - start))));
    }

    Poly parse_base() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Poly e = parse_expr();
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned num = parse_uint();
            Rat r(static_cast<long>(num));
            if (peek() == '/') {
                ++pos;
                unsigned den = parse_uint();
                r = Rat(static_cast<long>(num), static_cast<long>(den));
                r.canonicalize();
            }
            return poly_word(Word::one(), Cyc(r));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name(s.substr(start, pos - start));
            auto it = ctx.letters.find(name);
            if (it != ctx.letters.end()) return it->second;
            if (name == "i") return poly_word(Word::one(), Cyc::i());
            if (name == "w") return poly_word(Word::one(), Cyc::omega());
            if (name == "z") {
                int k = 1;
                if (peek() == '^') {
                    ++pos;
                    k = static_cast<int>(parse_uint());
                }
                return poly_word(Word::one(), Cyc::root(k));
            }
            fail("unknown symbol '" + name + "'");
        }
        fail("expected factor");
    }

    Poly parse_factor() {
        Poly base = parse_base();
        if (peek() == '^') {
            ++pos;
            unsigned e = parse_uint();
            Poly r = poly_word(Word::one());
            for (unsigned k = 0; k < e; ++k) r = mul(r, base);
            return r;
        }
        return base;
    }

    Poly parse_term() {
        Poly r = parse_factor();
        while (peek() == '*') {
            ++pos;
            r = mul(r, parse_factor());
        }
        return r;
    }

    Poly parse_expr() {
        Poly total;
        bool negative = false;
        char c = peek();
        if (c == '+' || c == '-') {
            negative = (c == '-');
            ++pos;
        }
        while (true) {
            Poly t = parse_term();
            poly_add_scaled(total, t, Cyc(negative ? -1 : 1));
            char op = peek();
            if (op == '+' || op == '-') {
                negative = (op == '-');
                ++pos;
            } else {
                break;
            }
        }
        return total;
    }
};

} // namespace

Poly eval_expr(std::string_view text, const EvalContext& ctx) {
    ExprParser p(text, ctx);
    Poly r = p.parse_expr();
    if (!p.eof()) p.fail("trailing input");
    return r;
}

Poly parse_poly(std::string_view text, const std::vector<std::string>& names) {
    EvalContext ctx;
    for (size_t g = 0; g < names.size(); ++g)
        ctx.letters[names[g]] = poly_word(Word::gen(static_cast<int>(g)));
    return eval_expr(text, ctx);
}

Poly parse_compact_poly(std::string_view text, const std::vector<std::string>& names) {
    auto gen_of = [&](char c) -> int {
        for (size_t g = 0; g < names.size(); ++g)
            if (names[g].size() == 1 && names[g][0] == c) return static_cast<int>(g);
        return -1;
    };
    Poly total;
    size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    while (pos < text.size()) {
        // optional scalar prefix up to '.'
        Cyc coeff(1);
        size_t dot = text.find('.', pos);
        size_t term_end = pos;
        while (term_end < text.size() && text[term_end] != '+' && text[term_end] != '-')
            ++term_end;
        if (dot != std::string_view::npos && dot < term_end) {
            coeff = Cyc::parse(text.substr(pos, dot - pos));
            pos = dot + 1;
        }
        Word w;
        while (pos < term_end) {
            char c = text[pos];
            int g = gen_of(c);
            if (g < 0)
                throw std::invalid_argument(std::string("compact poly: unknown generator '") +
                                            c + "' in \"" + std::string(text) + "\"");
            ++pos;
            unsigned e = 1;
            if (pos < term_end && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                e = 0;
                while (pos < term_end && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    e = e * 10 + static_cast<unsigned>(text[pos] - '0');
                    ++pos;
                }
            }
            for (unsigned k = 0; k < e; ++k)
                w.syms.push_back(static_cast<uint8_t>(g));
        }
        poly_add_term(total, w, negative ? -coeff : coeff);
        if (pos < text.size()) {
            negative = text[pos] == '-';
            ++pos;
        }
    }
    return total;
}

Presentation parse_presentation(std::string_view text) {
    Presentation pres;
    std::vector<std::string> declared;  // descending precedence as written
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::string> relation_lines;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        if (line.rfind("generators", 0) == 0) {
            std::istringstream ls(line.substr(10));
            std::string name;
            while (ls >> name) declared.push_back(name);
        } else {
            relation_lines.push_back(line);
        }
    }
    if (declared.empty())
        throw std::invalid_argument("presentation: missing generators line");
    pres.gen_names.assign(declared.rbegin(), declared.rend());
    for (const std::string& rl : relation_lines)
        pres.relations.push_back(parse_poly(rl, pres.gen_names));
    return pres;
}

} // namespace hopfinv
