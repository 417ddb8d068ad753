#pragma once

// Exact arithmetic in the eighth cyclotomic field Q(z), z = exp(2*pi*i/8).
// Elements are stored on the basis {1, z, z^2, z^3} with z^4 = -1 and
// arbitrary-precision rational coefficients, so every scalar that shows up
// in the catalog (signs, i = z^2, w = z, sqrt(2)/2 = (z - z^3)/2, the 1/4
// idempotent coefficients) is represented exactly and canonically.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hopfinv {

using Rat = mpq_class;

class Cyc {
public:
    Cyc() : c_{} {}
    Cyc(int n) : c_{} { c_[0] = n; }
    Cyc(long n) : c_{} { c_[0] = n; }
    Cyc(const Rat& r) : c_{} { c_[0] = r; }
    Cyc(Rat c0, Rat c1, Rat c2, Rat c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    // z^k for any integer k, reduced via z^4 = -1.
    static Cyc root(int k);
    static Cyc i() { return root(2); }
    static Cyc omega() { return root(1); }
    // sqrt(2)/2 = (z - z^3)/2
    static Cyc sqrt2_over_2();
    static Cyc rational(long p, long q);

    const Rat& coeff(int k) const { return c_[static_cast<size_t>(k)]; }

    bool is_zero() const;
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    const Rat& rational_part() const { return c_[0]; }

    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o);
    Cyc& operator/=(const Cyc& o);

    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
    friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }

    friend bool operator==(const Cyc& a, const Cyc& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    // Galois conjugate z -> z^k, k odd.
    Cyc galois(int k) const;
    // Multiplicative inverse; throws std::domain_error on zero.
    Cyc inverse() const;

    // Canonical text form: terms ordered by power of z, each "p/q" or
    // "p/q*z^k", joined with +/-.  parse() also accepts "i" for z^2 and
    // "w" for z.
    std::string str() const;
    static Cyc parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Cyc& c);

private:
    std::array<Rat, 4> c_;
};

} // namespace hopfinv

namespace Eigen {
template <typename T> struct NumTraits;
template <> struct NumTraits<hopfinv::Cyc> {
    using Real = hopfinv::Cyc;
    using NonInteger = hopfinv::Cyc;
    using Nested = hopfinv::Cyc;
    using Literal = int;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 30,
        MulCost = 120
    };
    static inline hopfinv::Cyc epsilon() { return hopfinv::Cyc(0); }
    static inline hopfinv::Cyc dummy_precision() { return hopfinv::Cyc(0); }
    static inline int digits10() { return 0; }
};
} // namespace Eigen
