#ifndef PLCS_RATIONAL_HPP
#define PLCS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <string>

#include "plcs/errors.hpp"

namespace plcs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Rat& q) { return q.sign(); }
inline int sign(const Int& n) { return n.sign(); }

/* Canonical "p/q" (integer values print without "/1"). */
inline std::string rat_to_string(const Rat& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash)), q(s.substr(slash + 1));
        require(q != 0, "rational with zero denominator: " + s);
        return Rat(p, q);
    } catch (const std::exception&) {
        throw InputError("malformed rational: " + s);
    }
}

/* floor(sqrt(n)) for n >= 0. */
inline Int isqrt(const Int& n) {
    require(n >= 0, "isqrt of negative value");
    if (n < 2) return n;
    Int x = Int(1) << (unsigned)((msb(n) / 2) + 1);
    for (;;) {
        Int y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    return x;
}

inline Int floor_rat(const Rat& q) {
    Int n = num(q), d = den(q);
    Int f = n / d;
    if (n < 0 && f * d != n) --f;
    return f;
}

inline Int ceil_rat(const Rat& q) {
    Int f = floor_rat(q);
    return f * den(q) == num(q) ? f : f + 1;
}

inline Int gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(Int a, Int b) { return boost::multiprecision::lcm(a, b); }

inline long gcd_l(long a, long b) { return std::gcd(a, b); }
inline long lcm_l(long a, long b) { return std::lcm(a, b); }

} // namespace plcs

#endif
