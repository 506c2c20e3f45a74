#include "plcs/corpus.hpp"

#include <algorithm>

namespace plcs {

namespace {

Rat rand_coeff(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(1, 9), den(1, 4), sign(0, 1);
    Rat v(num(rng), den(rng));
    return sign(rng) ? v : -v;
}

FractionalSeries rand_branch(std::mt19937_64& rng, long max_mult) {
    long den = std::uniform_int_distribution<long>(1, max_mult)(rng);
    long nterms = std::uniform_int_distribution<long>(1, 3)(rng);
    long n = den + std::uniform_int_distribution<long>(0, 2)(rng); // ord >= 1
    std::map<long, Rat> terms;
    for (long i = 0; i < nterms; ++i) {
        terms[n] = rand_coeff(rng);
        n += std::uniform_int_distribution<long>(1, 3)(rng);
    }
    long g = den;
    for (auto& [e, c] : terms) g = gcd_l(g, e);
    std::map<long, Rat> red;
    for (auto& [e, c] : terms) red[e / g] = c;
    return FractionalSeries(den / g, std::move(red));
}

/* Conservative same-branch test: a fractional branch equals a conjugate of
   another whenever the reduced denominators and exponent sets coincide, so any
   such pair is rejected; integer branches clash only on literal equality. */
bool clashes(const FractionalSeries& a, const FractionalSeries& b) {
    auto profile = [](const FractionalSeries& f) {
        long g = f.den;
        for (auto& [n, c] : f.terms) g = gcd_l(g, n);
        std::pair<long, std::vector<long>> p{f.den / g, {}};
        for (auto& [n, c] : f.terms) p.second.push_back(n / g);
        return p;
    };
    auto pa = profile(a), pb = profile(b);
    if (pa != pb) return false;
    return pa.first > 1 || a.terms == b.terms;
}

} // namespace

GSScheme random_scheme(std::mt19937_64& rng, long max_branches, long max_mult) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        long r = std::uniform_int_distribution<long>(1, max_branches)(rng);
        std::vector<FractionalSeries> branches;
        while ((long)branches.size() < r) {
            auto b = rand_branch(rng, max_mult);
            bool dup = std::any_of(branches.begin(), branches.end(),
                                   [&](const FractionalSeries& o) { return clashes(o, b); });
            if (!dup) branches.push_back(std::move(b));
        }
        std::vector<long> depth;
        for (long i = 0; i < r; ++i)
            depth.push_back(std::uniform_int_distribution<long>(0, 2)(rng));
        try {
            return build_scheme(branches, depth);
        } catch (const InputError&) {
            // degenerate draw, redo the instance
        }
    }
    invariant(false, "random scheme generation failed repeatedly");
    return {};
}

std::vector<GSScheme> make_corpus(const CorpusOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    std::vector<GSScheme> out;
    out.reserve(opt.count);
    for (long i = 0; i < opt.count; ++i)
        out.push_back(random_scheme(rng, opt.max_branches, opt.max_mult));
    return out;
}

} // namespace plcs
