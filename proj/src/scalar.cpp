#include "hopfinv/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace hopfinv {

Cyc Cyc::root(int k) {
    int m = ((k % 8) + 8) % 8;
    Cyc r;
    Rat sign(1);
    if (m >= 4) {
        m -= 4;
        sign = -1;
    }
    r.c_[static_cast<size_t>(m)] = sign;
    return r;
}

Cyc Cyc::sqrt2_over_2() {
    return Cyc(Rat(0), Rat(1, 2), Rat(0), Rat(-1, 2));
}

Cyc Cyc::rational(long p, long q) {
    Rat r(p, q);
    r.canonicalize();
    return Cyc(r);
}

bool Cyc::is_zero() const {
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

Cyc Cyc::operator-() const {
    Cyc r;
    for (size_t k = 0; k < 4; ++k) r.c_[k] = -c_[k];
    return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    for (size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
    for (size_t k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
}

Cyc& Cyc::operator*=(const Cyc& o) {
    std::array<Rat, 4> r{};
    for (size_t a = 0; a < 4; ++a) {
        if (c_[a] == 0) continue;
        for (size_t b = 0; b < 4; ++b) {
            if (o.c_[b] == 0) continue;
            size_t k = a + b;
            if (k >= 4)
                r[k - 4] -= c_[a] * o.c_[b];
            else
                r[k] += c_[a] * o.c_[b];
        }
    }
    c_ = std::move(r);
    return *this;
}

Cyc Cyc::galois(int k) const {
    Cyc r;
    for (int j = 0; j < 4; ++j) {
        if (c_[static_cast<size_t>(j)] == 0) continue;
        int m = ((j * k) % 8 + 8) % 8;
        if (m >= 4)
            r.c_[static_cast<size_t>(m - 4)] -= c_[static_cast<size_t>(j)];
        else
            r.c_[static_cast<size_t>(m)] += c_[static_cast<size_t>(j)];
    }
    return r;
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw std::domain_error("Cyc: division by zero");
    // x^-1 = s3(x) s5(x) s7(x) / N(x) with N(x) = x s3(x) s5(x) s7(x) in Q.
    Cyc conj = galois(3) * galois(5) * galois(7);
    Cyc norm = *this * conj;
    if (!norm.is_rational() || norm.c_[0] == 0)
        throw std::logic_error("Cyc: norm is not a nonzero rational");
    Rat inv = 1 / norm.c_[0];
    Cyc r = conj;
    for (size_t k = 0; k < 4; ++k) r.c_[k] *= inv;
    return r;
}

Cyc& Cyc::operator/=(const Cyc& o) {
    return *this *= o.inverse();
}

std::string Cyc::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < 4; ++k) {
        const Rat& c = c_[static_cast<size_t>(k)];
        if (c == 0) continue;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? '-' : '+');
            if (a < 0) a = -a;
        }
        os << a.get_str();
        if (k > 0) {
            os << "*z";
            if (k > 1) os << '^' << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyc& c) {
    return os << c.str();
}

namespace {

struct ScalarParser {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("scalar parse error at position " +
                                    std::to_string(pos) + ": " + what);
    }

    Rat parse_rational() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected number");
        std::string num(s.substr(start, pos - start));
        std::string den = "1";
        if (peek() == '/') {
            ++pos;
            skip_ws();
            size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == dstart) fail("expected denominator");
            den = std::string(s.substr(dstart, pos - dstart));
        }
        Rat r(num + "/" + den);
        r.canonicalize();
        return r;
    }

    // z | z^k | i | w
    Cyc parse_symbol() {
        char c = peek();
        if (c == 'i') {
            ++pos;
            return Cyc::root(2);
        }
        if (c == 'w') {
            ++pos;
            return Cyc::root(1);
        }
        if (c == 'z') {
            ++pos;
            int k = 1;
            if (peek() == '^') {
                ++pos;
                skip_ws();
                size_t start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos == start) fail("expected exponent");
                k = std::stoi(std::string(s.substr(start, pos - start)));
            }
            return Cyc::root(k);
        }
        fail("expected z, i or w");
    }

    Cyc parse_term() {
        Cyc value(1);
        bool have_factor = false;
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            value = Cyc(parse_rational());
            have_factor = true;
            if (peek() == '*') {
                ++pos;
                value *= parse_symbol();
            }
        } else {
            value = parse_symbol();
            have_factor = true;
        }
        if (!have_factor) fail("empty term");
        return value;
    }

    Cyc parse_sum() {
        Cyc total(0);
        bool negative = false;
        char c = peek();
        if (c == '+' || c == '-') {
            negative = (c == '-');
            ++pos;
        }
        while (true) {
            Cyc t = parse_term();
            total += negative ? -t : t;
            if (eof()) break;
            char op = peek();
            if (op == '+' || op == '-') {
                negative = (op == '-');
                ++pos;
            } else {
                fail("expected + or -");
            }
        }
        return total;
    }
};

} // namespace

Cyc Cyc::parse(std::string_view text) {
    ScalarParser p{text};
    if (p.eof()) throw std::invalid_argument("scalar parse error: empty input");
    return p.parse_sum();
}

} // namespace hopfinv
