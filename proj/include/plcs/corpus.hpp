#ifndef PLCS_CORPUS_HPP
#define PLCS_CORPUS_HPP

#include <random>
#include <vector>

#include "plcs/scheme.hpp"

namespace plcs {

/* Seeded random scheme generator for property sweeps. Deterministic per seed. */

struct CorpusOptions {
    long count = 200;
    long max_branches = 4;
    long max_mult = 6;
    unsigned seed = 1;
};

/* One scheme with <= max_branches branches of multiplicity <= max_mult, all
   exponents >= 1, pairwise distinct branches. */
GSScheme random_scheme(std::mt19937_64& rng, long max_branches, long max_mult);

std::vector<GSScheme> make_corpus(const CorpusOptions& opt);

} // namespace plcs

#endif
