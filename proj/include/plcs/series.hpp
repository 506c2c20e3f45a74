#ifndef PLCS_SERIES_HPP
#define PLCS_SERIES_HPP

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plcs/rational.hpp"

namespace plcs {

/* Exponent bound meaning "all further coefficients are exactly zero" (polynomial data),
   as opposed to a finite truncation order beyond which coefficients are unknown. */
inline constexpr long EXACT_ORDER = std::numeric_limits<long>::max() / 4;

/* Extra precision granted to polynomial division when a computation ran out of
   known coefficients; raised and retried by the callers that can do so. */
inline long& division_window_extra() {
    thread_local long extra = 0;
    return extra;
}

/* Power series in one variable t with integer exponents >= 0 and exact rational
   coefficients, known strictly below `trunc`. */
class PowerSeries {
public:
    std::map<long, Rat> c; // nonzero coefficients only
    long trunc = EXACT_ORDER;

    PowerSeries() = default;
    explicit PowerSeries(long truncation) : trunc(truncation) {}

    static PowerSeries zero() { return PowerSeries(); }
    static PowerSeries monomial(long e, const Rat& coeff) {
        PowerSeries s;
        if (coeff != 0) s.c[e] = coeff;
        return s;
    }

    bool known_zero() const { return c.empty() && trunc == EXACT_ORDER; }

    void set(long e, const Rat& v) {
        if (v == 0) c.erase(e);
        else if (e < trunc) c[e] = v;
    }

    /* Order of the series; nullopt means identically zero. */
    std::optional<long> ord() const {
        if (!c.empty()) return c.begin()->first;
        if (trunc == EXACT_ORDER) return std::nullopt;
        throw TruncationTooShort("series order unknown below truncation " + std::to_string(trunc));
    }

    /* Lower bound on the order that never throws. */
    long ord_bound() const { return c.empty() ? trunc : c.begin()->first; }

    Rat coeff(long e) const {
        if (e >= trunc) throw TruncationTooShort("coefficient at exponent " + std::to_string(e) + " unknown");
        auto it = c.find(e);
        return it == c.end() ? Rat(0) : it->second;
    }

    PowerSeries truncated(long T) const {
        PowerSeries r(std::min(trunc, T));
        for (auto& [e, v] : c)
            if (e < r.trunc) r.c[e] = v;
        return r;
    }

    PowerSeries operator+(const PowerSeries& o) const {
        PowerSeries r(std::min(trunc, o.trunc));
        for (auto& [e, v] : c)
            if (e < r.trunc) r.c[e] = v;
        for (auto& [e, v] : o.c)
            if (e < r.trunc) r.set(e, r.coeff(e) + v);
        return r;
    }
    PowerSeries operator-() const {
        PowerSeries r(trunc);
        for (auto& [e, v] : c) r.c[e] = -v;
        return r;
    }
    PowerSeries operator-(const PowerSeries& o) const { return *this + (-o); }

    PowerSeries operator*(const Rat& s) const {
        PowerSeries r(trunc);
        if (s == 0) { r.trunc = EXACT_ORDER; return r; }
        for (auto& [e, v] : c) r.c[e] = v * s;
        return r;
    }

    PowerSeries operator*(const PowerSeries& o) const {
        if (known_zero() || o.known_zero()) return PowerSeries();
        long T = EXACT_ORDER;
        if (trunc != EXACT_ORDER) T = std::min(T, trunc + o.ord_bound());
        if (o.trunc != EXACT_ORDER) T = std::min(T, o.trunc + ord_bound());
        PowerSeries r(T);
        for (auto& [e1, v1] : c)
            for (auto& [e2, v2] : o.c) {
                long e = e1 + e2;
                if (e < T) r.set(e, r.coeff(e) + v1 * v2);
            }
        return r;
    }

    /* Multiply by t^k (k may be negative; then all known exponents must stay >= 0). */
    PowerSeries shifted(long k) const {
        PowerSeries r(trunc == EXACT_ORDER ? EXACT_ORDER : trunc + k);
        for (auto& [e, v] : c) {
            invariant(e + k >= 0, "negative exponent after shift");
            r.c[e + k] = v;
        }
        return r;
    }

    /* this / o, where o has known finite order. */
    PowerSeries divided_by(const PowerSeries& o) const {
        auto mo = o.ord();
        invariant(mo.has_value(), "division by zero series");
        long m = *mo;
        if (known_zero()) return PowerSeries();
        // unit part u of o = t^m u, and available precision of u
        PowerSeries u = o.shifted(-m);
        long Tu = (u.trunc == EXACT_ORDER && trunc == EXACT_ORDER) ? 0 : 0;
        long prec = std::min(u.trunc, trunc == EXACT_ORDER ? EXACT_ORDER : trunc - m + 1);
        (void)Tu;
        if (prec == EXACT_ORDER) {
            // both polynomials: divide up to a generous window beyond the data
            long hi = 1;
            if (!c.empty()) hi = std::max(hi, c.rbegin()->first + 1);
            if (!u.c.empty()) hi = std::max(hi, u.c.rbegin()->first + 1);
            prec = 4 * hi + 8 + division_window_extra();
        }
        Rat u0 = u.coeff(0);
        PowerSeries inv(prec);
        inv.c[0] = 1 / u0;
        for (long n = 1; n < prec; ++n) {
            Rat s(0);
            for (auto& [e, v] : inv.c) {
                if (e >= n) break;
                auto it = u.c.find(n - e);
                if (it != u.c.end()) s += v * it->second;
            }
            if (s != 0) inv.c[n] = -s / u0;
        }
        // exact division detection: if both inputs polynomial and remainder vanishes,
        // the quotient found within the window is exact
        PowerSeries q = (*this * inv).shifted(-m);
        if (trunc == EXACT_ORDER && o.trunc == EXACT_ORDER) {
            PowerSeries back = q;
            back.trunc = EXACT_ORDER;
            PowerSeries rem = *this - back * o;
            bool exact = true;
            for (auto& [e, v] : rem.c)
                if (e < rem.trunc && v != 0) { exact = false; break; }
            if (exact && rem.trunc >= q.trunc) q.trunc = EXACT_ORDER;
        }
        return q;
    }

    /* Substitute another series for t (inner of order >= 1), exact rational composition. */
    PowerSeries composed_with(const PowerSeries& inner) const {
        long T = trunc;
        if (inner.trunc != EXACT_ORDER) T = std::min(T, inner.trunc);
        if (inner.known_zero()) {
            PowerSeries r(T);
            auto it = c.find(0);
            if (it != c.end()) r.c[0] = it->second;
            return r;
        }
        long io = *inner.ord();
        invariant(io >= 1, "composition needs positive inner order");
        PowerSeries r(T);
        PowerSeries p = PowerSeries::monomial(0, 1); // inner^e, truncated at T
        long pe = 0;
        for (auto& [e, v] : c) {
            if (T != EXACT_ORDER && io >= 1 && e > T / io) break;
            p = p * inner.pow(e - pe);
            if (T != EXACT_ORDER) p = p.truncated(T);
            pe = e;
            PowerSeries term = p * v;
            for (auto& [te, tv] : term.c)
                if (te < r.trunc) r.set(te, r.coeff(te) + tv);
            r.trunc = std::min(r.trunc, term.trunc);
        }
        r.clamp();
        return r;
    }

    void clamp() {
        for (auto it = c.begin(); it != c.end();)
            it = (it->first >= trunc || it->second == 0) ? c.erase(it) : std::next(it);
    }

    PowerSeries pow(long k) const {
        PowerSeries r = PowerSeries::monomial(0, 1);
        PowerSeries base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            base = k > 1 ? base * base : base;
            k >>= 1;
        }
        return r;
    }

    bool operator==(const PowerSeries& o) const { return c == o.c && trunc == o.trunc; }
};

/* Puiseux polynomial y = sum alpha_e x^(e/den): exact input/serialized form of a branch. */
struct FractionalSeries {
    long den = 1;                 // exponent denominator n
    std::map<long, Rat> terms;    // numerator -> nonzero coefficient; exponent = num/den

    FractionalSeries() = default;
    FractionalSeries(long n, std::map<long, Rat> t) : den(n), terms(std::move(t)) {
        for (auto it = terms.begin(); it != terms.end();)
            it = it->second == 0 ? terms.erase(it) : std::next(it);
    }

    bool operator==(const FractionalSeries& o) const { return den == o.den && terms == o.terms; }

    bool reduced() const {
        long g = den;
        for (auto& [e, v] : terms) g = gcd_l(g, e);
        return g == 1 || terms.empty();
    }

    std::optional<Rat> ord() const {
        if (terms.empty()) return std::nullopt;
        return Rat(terms.begin()->first, den);
    }

    /* Branch multiplicity min(den, lowest numerator) for a reduced series; den if zero. */
    long multiplicity() const {
        if (terms.empty()) return 1;
        return std::min(den, terms.begin()->first);
    }

    Rat coeff_at(const Rat& expo) const {
        Rat k = expo * den;
        if (plcs::den(k) != 1) return Rat(0);
        Int n = num(k);
        if (n < 0 || n > std::numeric_limits<long>::max()) return Rat(0);
        auto it = terms.find((long)n);
        return it == terms.end() ? Rat(0) : it->second;
    }

    /* Least exponent where the two (exact) series differ; nullopt if identical. */
    std::optional<Rat> contact_with(const FractionalSeries& o) const {
        std::map<Rat, Rat> a, b;
        for (auto& [e, v] : terms) a[Rat(e, den)] = v;
        for (auto& [e, v] : o.terms) b[Rat(e, o.den)] = v;
        std::optional<Rat> best;
        for (auto& [e, v] : a) {
            auto it = b.find(e);
            if (it == b.end() || it->second != v)
                if (!best || e < *best) best = e;
        }
        for (auto& [e, v] : b)
            if (a.find(e) == a.end())
                if (!best || e < *best) best = e;
        return best;
    }
};

} // namespace plcs

#endif
