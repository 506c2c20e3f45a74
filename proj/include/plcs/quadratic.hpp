#ifndef PLCS_QUADRATIC_HPP
#define PLCS_QUADRATIC_HPP

#include <string>

#include "plcs/rational.hpp"

namespace plcs {

/* Element a + b*sqrt(k) of a real quadratic field, k a non-square positive integer.
   All comparisons are exact; no floating point anywhere. */
struct Quad {
    Rat a, b;
    long k = 2;

    Quad() = default;
    Quad(Rat a_, Rat b_, long k_) : a(std::move(a_)), b(std::move(b_)), k(k_) {}
    static Quad rational(Rat v, long k_) { return Quad(std::move(v), 0, k_); }

    bool same_field(const Quad& o) const { return k == o.k || b == 0 || o.b == 0; }
    long field(const Quad& o) const { return b == 0 ? o.k : k; }

    Quad operator+(const Quad& o) const {
        invariant(same_field(o), "quadratic field mismatch");
        return Quad(a + o.a, b + o.b, field(o));
    }
    Quad operator-(const Quad& o) const {
        invariant(same_field(o), "quadratic field mismatch");
        return Quad(a - o.a, b - o.b, field(o));
    }
    Quad operator-() const { return Quad(-a, -b, k); }
    Quad operator*(const Quad& o) const {
        invariant(same_field(o), "quadratic field mismatch");
        long kk = field(o);
        return Quad(a * o.a + b * o.b * kk, a * o.b + b * o.a, kk);
    }
    Quad operator*(const Rat& r) const { return Quad(a * r, b * r, k); }
    Quad inverse() const {
        Rat n = a * a - b * b * k;
        invariant(n != 0, "inverting zero quadratic element");
        return Quad(a / n, -b / n, k);
    }
    Quad operator/(const Quad& o) const { return *this * o.inverse(); }

    int sgn() const {
        if (b == 0) return sign(a);
        if (a == 0) return sign(b);
        int sa = sign(a), sb = sign(b);
        if (sa == sb) return sa;
        Rat diff = a * a - b * b * k; // sign(|a| - |b|sqrt(k)) on squares
        int s = sign(diff);
        return s == 0 ? 0 : (s > 0 ? sa : sb);
    }

    bool operator<(const Quad& o) const { return (*this - o).sgn() < 0; }
    bool operator<=(const Quad& o) const { return (*this - o).sgn() <= 0; }
    bool operator>(const Quad& o) const { return (*this - o).sgn() > 0; }
    bool operator>=(const Quad& o) const { return (*this - o).sgn() >= 0; }
    bool operator==(const Quad& o) const { return (*this - o).sgn() == 0; }

    Quad square() const { return *this * *this; }
};

inline Quad sqrt_term(const Rat& b, long k) { return Quad(0, b, k); }

/* floor(a + b*sqrt(k)), exact. */
inline Int quad_floor(const Quad& x) {
    // estimate b*sqrt(k) = sign(b) * sqrt(b^2 k) with integer sqrt, then fix up
    Rat b2k = x.b * x.b * x.k;
    Int nd = num(b2k) * den(b2k);
    Int root = isqrt(nd); // floor(sqrt(b^2 k) * den)
    Rat est = Rat(root, den(b2k));
    if (x.b < 0) est = -est - 1;
    Int f = floor_rat(x.a + est) - 1;
    while (Quad::rational(Rat(f + 1), x.k) <= x) ++f;
    while (Quad::rational(Rat(f), x.k) > x) --f;
    return f;
}

/* Decimal expansion truncated (not rounded) to `digits` fractional digits, for reports only. */
inline std::string quad_decimal(const Quad& x, int digits) {
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Quad scaled = x * Rat(scale);
    Int n = quad_floor(scaled);
    bool neg = n < 0;
    if (neg) n = -n; // truncation toward -inf for negatives; fine for reports
    Int ip = n / scale, fp = n % scale;
    std::string frac = fp.str();
    while ((int)frac.size() < digits) frac = "0" + frac;
    return (neg ? "-" : "") + ip.str() + "." + frac;
}

/* The vanishing-theorem constants, exact. */
struct VanishingConstants {
    static Quad alpha() { return Quad(1, 1, 2); }        // sqrt(2) + 1
    static Quad beta() { return Quad(3, -2, 2); }        // 3 - 2 sqrt(2)
    static Quad alpha0() { return Quad(Rat(31, 2), Rat(-3, 2), 85); } // (31 - 3 sqrt(85))/2
    static Quad beta0() { return (alpha0() + Quad(8, 0, 85)).inverse(); }
};

} // namespace plcs

#endif
