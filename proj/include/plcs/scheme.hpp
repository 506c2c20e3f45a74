#ifndef PLCS_SCHEME_HPP
#define PLCS_SCHEME_HPP

#include <vector>

#include "plcs/conjugates.hpp"
#include "plcs/tree.hpp"

namespace plcs {

/* The distinguished smooth germ through the centre. */
enum class Line { Y, X }; // {y=0} or {x=0}

inline constexpr long MARKER_Y = -1;
inline constexpr long MARKER_X = -2;
inline long marker_of(Line l) { return l == Line::Y ? MARKER_Y : MARKER_X; }

struct NotASingularityScheme : InputError {
    using InputError::InputError;
};

/* One branch of a scheme: y = xi(x) plus the number of marked infinitely near
   points along it (always counted from the centre; prefixes are forced). */
struct SchemeBranch {
    FractionalSeries xi;
    long depth = 0;
};

struct SchemeOnLine {
    Int degree = 0;
    std::vector<std::pair<int, long>> points; // (node id, m_q) along the on-L chain
};

/* Generalized singularity scheme: multigerm + marked subtree, caches filled. */
struct GSScheme {
    std::vector<SchemeBranch> branches;
    ResolutionTree tree; // markers MARKER_Y, MARKER_X always tracked for incidence
    Int deg = 0, delta = 0, mu = 0;
    long mt = 0, mt_s = 0;
    bool in_S = true, in_GS1 = true;

    bool empty() const { return branches.empty(); }
    std::vector<FractionalSeries> series() const {
        std::vector<FractionalSeries> out;
        for (auto& b : branches) out.push_back(b.xi);
        return out;
    }
    /* Discrete equivalence data: multiset of (sorted per-node branch mults, marked,
       essential) plus on-L pattern; equality of schemes up to ~ is equality of this. */
    std::string discrete_signature() const;
};

/* Build from absolute marked depths. */
GSScheme build_scheme_depths(std::vector<SchemeBranch> branches);

/* Build from the input convention: marked points per branch =
   max(essential count, 1) + extra_depth. */
GSScheme build_scheme(const std::vector<FractionalSeries>& branches,
                      const std::vector<long>& extra_depth);

SchemeOnLine intersect_line(const GSScheme& x, Line l);

/* Independent degree evaluation over all Puiseux conjugates:
   sum_{i<j} (xi_i,xi_j) + sum_i max_j (xi_i,xi_j) + (m-r)/2. */
Int degree_via_contacts(const GSScheme& x);

/* Raw value of the contact formula, which can be fractional: the max term
   under-counts a branch that runs on through marked points of another branch
   past their contact (e.g. a smooth branch tangent to a cusp). */
Rat contact_degree_total(const GSScheme& x);

/* Exact per-branch shortfall of the contact formula:
   sum over branches Q of (sum of marked-point mults of Q) - (mt Q - 1)
   - (max contacts of Q's conjugates); always contact_degree_total + deficit
   = cached degree, and the formula is exact iff the deficit vanishes. */
Rat contact_formula_deficit(const GSScheme& x);

/* Reduction X:L. */
GSScheme reduce(const GSScheme& x, Line l, unsigned seed);

/* Coefficient surgery moving the first m_size marked points of smooth branch q
   onto L = {y=0}. */
GSScheme specialize(const GSScheme& x, size_t branch, long m_size, unsigned seed);

/* Extension at the q_index-th point (>= 1) of the marked on-L chain, L = {y=0}:
   multiplies every through-branch series by x and inserts one point. */
GSScheme extend(const GSScheme& x, long q_index);

/* The separating exponent k at point q_index of the on-L chain (L = {y=0}). */
long split_exponent(const GSScheme& x, long q_index);

} // namespace plcs

#endif
