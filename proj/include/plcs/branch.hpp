#ifndef PLCS_BRANCH_HPP
#define PLCS_BRANCH_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "plcs/series.hpp"

namespace plcs {

/* A reduced local branch y = xi(x) (or x = xi(y) when transposed). */
struct BranchGerm {
    FractionalSeries xi;
    bool transposed = false;
    long extra_depth = 0;

    long multiplicity() const { return xi.terms.empty() ? 1 : std::min(xi.den, xi.terms.begin()->first); }
    bool smooth() const { return multiplicity() == 1; }

    /* Parametrization (x(t), y(t)) = (t^n, sum alpha_e t^e); swapped if transposed. */
    std::pair<PowerSeries, PowerSeries> parametrization() const {
        PowerSeries u = PowerSeries::monomial(xi.den, 1);
        PowerSeries v;
        for (auto& [e, a] : xi.terms) v.c[e] = a;
        if (transposed) return {v, u};
        return {u, v};
    }
};

/* Exponents where the denominator gcd strictly drops, as rationals. */
inline std::vector<Rat> characteristic_exponents(const FractionalSeries& xi) {
    std::vector<Rat> out;
    long g = xi.den;
    for (auto& [e, a] : xi.terms) {
        long ng = gcd_l(g, e);
        if (ng < g) {
            out.emplace_back(e, xi.den);
            g = ng;
        }
    }
    return out;
}

namespace detail {
/* Euclidean division chain on (a, b): emit floor/remainder multiplicities. */
inline void euclid_chain(long a, long b, std::vector<long>& out) {
    while (b > 0) {
        long q = a / b, r = a % b;
        for (long i = 0; i < q; ++i) out.push_back(b);
        a = b;
        b = r;
    }
}
} // namespace detail

/* Multiplicity sequence of the branch from its characteristic exponents (Euclidean expansion).
   Includes the full chain down to the last satellite point; no free trailing 1s. */
inline std::vector<long> mult_sequence(long m, const std::vector<Rat>& char_exps) {
    if (m == 1 || char_exps.empty()) return {1};
    std::vector<long> seq;
    long g = m;
    Rat prev(0);
    bool first = true;
    for (auto& ce : char_exps) {
        Rat delta = first ? ce : ce - prev;
        long dnum = (long)floor_rat(delta * m); // exact: delta has denominator dividing m
        invariant(Rat(dnum, m) == delta, "characteristic exponent outside 1/m lattice");
        detail::euclid_chain(dnum, g, seq);
        g = gcd_l(g, dnum);
        prev = ce;
        first = false;
    }
    invariant(g == 1, "characteristic exponents do not reduce the denominator to 1");
    return seq;
}

/* For a branch in normalized orientation (order >= 1, so multiplicity = denominator). */
inline std::vector<long> mult_sequence(const FractionalSeries& xi) {
    if (!xi.terms.empty())
        invariant(xi.terms.begin()->first >= xi.den, "branch series must have order >= 1");
    return mult_sequence(xi.den, characteristic_exponents(xi));
}

/* delta(Q) = sum m_q (m_q - 1)/2 over the multiplicity sequence. */
inline Int delta_of_sequence(const std::vector<long>& seq) {
    Int d = 0;
    for (long m : seq) d += Int(m) * (m - 1) / 2;
    return d;
}

/* Inverse of mult_sequence: characteristic exponents (numerators over seq[0]) from a
   multiplicity chain that contains the full satellite part (extra free 1s allowed). */
inline std::vector<Rat> char_exponents_from_sequence(const std::vector<long>& seq) {
    invariant(!seq.empty(), "empty multiplicity sequence");
    long m = seq[0];
    if (m == 1) return {};
    size_t pos = 0;
    auto run = [&](long v) {
        size_t n = 0;
        while (pos < seq.size() && seq[pos] == v) { ++pos; ++n; }
        return (long)n;
    };
    auto consume_chain = [&](long a, long b) {
        // consume the remainder of the Euclid chain below the first division
        while (b > 0) {
            long q = a / b, r = a % b;
            for (long i = 0; i < q; ++i) {
                invariant(pos < seq.size() && seq[pos] == b, "multiplicity sequence is not a valid Euclid chain");
                ++pos;
            }
            a = b;
            b = r;
        }
    };
    std::vector<Rat> chars;
    long g = m;
    long beta = 0;
    bool first = true;
    while (g > 1) {
        long q = run(g);
        invariant(pos < seq.size(), "multiplicity sequence ends before reaching multiplicity 1");
        long r = seq[pos];
        invariant(r < g, "multiplicity sequence increases inside a chain");
        long delta = q * g + r;
        beta = first ? delta : beta + delta;
        first = false;
        chars.emplace_back(beta, m);
        consume_chain(g, r);
        g = gcd_l(g, r);
    }
    for (; pos < seq.size(); ++pos)
        invariant(seq[pos] == 1, "leftover entries after the chain must be free simple points");
    return chars;
}

/* Contacts of the m conjugates y = xi(eta^i x^(1/m)) among themselves: for each residue
   d != 0 mod m, the value kappa_d = min{ e/m : alpha_e != 0, m does not divide d*e }.
   Computed from exponent residues only; exact for any nonzero coefficients. */
inline std::map<long, Rat> conjugate_contact_classes(const FractionalSeries& xi) {
    long m = xi.den;
    std::map<long, Rat> kappa;
    for (long d = 1; d < m; ++d) {
        for (auto& [e, a] : xi.terms) {
            if ((d * (e % m)) % m != 0) {
                kappa[d] = Rat(e, m);
                break;
            }
        }
        invariant(kappa.count(d), "series denominator not realized by its support");
    }
    return kappa;
}

/* The m(m-1) ordered-pair conjugate contacts as a multiset (m values per residue class). */
inline std::vector<Rat> conjugates_contact_profile(const FractionalSeries& xi) {
    auto kappa = conjugate_contact_classes(xi);
    std::vector<Rat> out;
    for (auto& [d, v] : kappa)
        for (long i = 0; i < xi.den; ++i) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

/* Maximal contact c between a conjugate of branch A and one of a branch B with
   multiplicity b_mult, recovered from the intersection number I = (Q_A, Q_B):
   I = b_mult * (c + sum_d min(c, kappa_d(A))), strictly increasing in c. */
inline Rat max_cross_contact(const FractionalSeries& a, long b_mult, const Int& inter) {
    auto kappa = conjugate_contact_classes(a);
    std::vector<Rat> ks;
    for (auto& [d, v] : kappa) ks.push_back(v);
    std::sort(ks.begin(), ks.end());
    Rat below(0); // sum of kappas < c
    size_t i = 0;
    Rat target(inter, Int(b_mult));
    for (;;) {
        long live = 1 + (long)(ks.size() - i); // slopes still growing with c
        Rat c = (target - below) / live;
        if (i == ks.size() || c <= ks[i]) {
            invariant(c > 0, "cross contact must be positive");
            return c;
        }
        below += ks[i];
        ++i;
    }
}

} // namespace plcs

#endif
