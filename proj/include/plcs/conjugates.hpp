#ifndef PLCS_CONJUGATES_HPP
#define PLCS_CONJUGATES_HPP

#include <optional>
#include <vector>

#include "plcs/branch.hpp"

namespace plcs {

/* Contact order between the ia-th conjugate of branch a and the jb-th conjugate of
   branch b: the conjugate substitutes x^(1/m) -> w^i x^(1/m), so the coefficient at
   exponent n/m picks up the phase w^(i*n). Coefficients are rational, so two phased
   terms alpha*zeta^u and beta*zeta^v (zeta a primitive N-th root of unity) are equal
   iff u = v mod N and alpha = beta, or u = v + N/2 mod N and alpha = -beta.
   Returns nullopt when the conjugates coincide identically. */
inline std::optional<Rat> conjugate_contact(const FractionalSeries& a, long ia,
                                            const FractionalSeries& b, long jb) {
    long N = lcm_l(a.den, b.den);
    // exponent numerator over N -> (coefficient, phase mod N)
    std::map<long, std::pair<Rat, long>> ta, tb;
    for (auto& [n, v] : a.terms) {
        long s = N / a.den;
        ta[n * s] = {v, ((ia % a.den) * (n % a.den) % a.den) * s % N};
    }
    for (auto& [n, v] : b.terms) {
        long s = N / b.den;
        tb[n * s] = {v, ((jb % b.den) * (n % b.den) % b.den) * s % N};
    }
    auto equal_terms = [&](const std::pair<Rat, long>& x, const std::pair<Rat, long>& y) {
        long du = (x.second - y.second + N) % N;
        if (du == 0) return x.first == y.first;
        if (2 * du == N) return x.first == -y.first;
        return false;
    };
    std::optional<Rat> best;
    auto note = [&](long n_over_N) {
        Rat e(n_over_N, N);
        if (!best || e < *best) best = e;
    };
    for (auto& [n, t] : ta) {
        auto it = tb.find(n);
        if (it == tb.end() || !equal_terms(t, it->second)) note(n);
    }
    for (auto& [n, t] : tb)
        if (ta.find(n) == ta.end()) note(n);
    return best;
}

/* True iff the two series define the same local branch (equal up to conjugation). */
inline bool same_branch(const FractionalSeries& a, const FractionalSeries& b) {
    if (a.den != b.den) return false;
    for (long i = 0; i < a.den; ++i)
        if (!conjugate_contact(a, i, b, 0)) return true;
    return false;
}

/* All pairwise contacts among the full list of Puiseux conjugates of a multigerm.
   Entry (i,j) for i != j; the diagonal is unused. */
struct ConjugateSet {
    std::vector<std::pair<size_t, long>> conj; // (branch index, rotation)
    std::vector<std::vector<Rat>> contact;     // full symmetric matrix

    static ConjugateSet of(const std::vector<FractionalSeries>& branches) {
        ConjugateSet cs;
        for (size_t bi = 0; bi < branches.size(); ++bi)
            for (long r = 0; r < branches[bi].den; ++r) cs.conj.emplace_back(bi, r);
        size_t m = cs.conj.size();
        cs.contact.assign(m, std::vector<Rat>(m, Rat(0)));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i + 1; j < m; ++j) {
                auto [bi, ri] = cs.conj[i];
                auto [bj, rj] = cs.conj[j];
                auto c = conjugate_contact(branches[bi], ri, branches[bj], rj);
                invariant(c.has_value(), "coincident conjugates across distinct list entries");
                cs.contact[i][j] = cs.contact[j][i] = *c;
            }
        return cs;
    }
};

} // namespace plcs

#endif
