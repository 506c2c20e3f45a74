#ifndef PLCS_ORACLE_HPP
#define PLCS_ORACLE_HPP

#include <utility>
#include <vector>

#include "plcs/scheme.hpp"

namespace plcs {

/* Exact linear algebra on the coefficient space of degree-d plane curves:
   independent verification of h0/h1 of ideal sheaves of scheme realizations. */

struct Placement {
    Rat x0, y0;
};

/* Monomials x^i y^j with i+j <= d in a fixed canonical order. */
std::vector<std::pair<long, long>> monomial_basis(long d);
inline long ambient_dim(long d) { return (d + 1) * (d + 2) / 2; }

struct LinearConditionSystem {
    long d = 0;
    long ambient = 0;
    std::vector<std::vector<Rat>> rows; // exact functionals, duplicates removed
    std::vector<long> alphas;           // vanishing-order bound per branch
};

/* Vanishing conditions cutting out curves through the scheme realization placed
   at the given plane point: per branch, the t-coefficients 0..alpha-1 of the
   generic degree-d form along the parametrization, where
   alpha_j = 2 delta(Q_j) + sum_{i!=j}(Q_i,Q_j) + sum of marked multiplicities. */
LinearConditionSystem conditions_of(const GSScheme& x, const Placement& p, long d);

/* Fraction-free rank of an exact rational matrix. */
long rank_of(const std::vector<std::vector<Rat>>& rows);

/* Exact basis of the solution space of rows * v = 0 in the given dimension. */
std::vector<std::vector<Rat>> null_space(const std::vector<std::vector<Rat>>& rows, long cols);

struct Cohomology {
    Int h0 = 0, h1 = 0;
    long rank = 0, rows = 0, ambient = 0;
};

/* h0/h1 of the ideal sheaf of a union of scheme realizations at distinct points:
   h0 = ambient - rank, h1 = deg - rank. */
Cohomology h0_h1(const std::vector<std::pair<GSScheme, Placement>>& xs, long d);

/* Seeded generic rational plane points, no three collinear, pairwise distinct. */
std::vector<Placement> generic_placements(size_t n, unsigned seed);

struct ExactSequenceReport {
    Int h0_x = 0, h1_x = 0;        // scheme at degree d
    Int h0_red = 0, h1_red = 0;    // reduction at degree d-1
    Int on_line_deg = 0;
    Int h0_line = 0, h1_line = 0;  // trace on the line at degree d
    bool implication_holds = false; // vanishing on both quotients forces h1_x = 0
    bool bookkeeping_holds = false; // h0_x vs h0_red + h0_line
    bool equality_under_vanishing = false;
};

/* Checks the restriction sequence 0 -> J_{X:L}(d-1) -> J_X(d) -> J_{X on L}(d) -> 0
   numerically for the realization placed at the origin with L a global line. */
ExactSequenceReport exact_sequence_check(const GSScheme& x, Line l, long d, unsigned seed);

/* A plane curve germ as an exact coefficient list. */
using CurvePoly = std::map<std::pair<long, long>, Rat>; // (i,j) -> coeff of x^i y^j

/* True iff f defines exactly the singularity scheme y at the origin:
   mt(f) = mt(y) and, for each branch, the intersection multiplicity strictly
   exceeds the marked-tree bound sum m_q * mt(Q_(q), q). */
bool verify_realization(const CurvePoly& f, const GSScheme& y);

/* Intersection multiplicity of f with one parametrized branch. */
Int curve_branch_intersection(const CurvePoly& f, const FractionalSeries& xi);

struct NewtonDiagram {
    std::vector<std::pair<long, long>> gamma;     // integral points on the diagram
    std::vector<std::pair<long, long>> essential; // the distinguished subset
};

/* The Newton diagram of f at the origin and its essential part: interior integral
   points, plus an axis vertex unless it bounds an edge reaching height/width 1. */
NewtonDiagram essential_newton_part(const CurvePoly& f);

} // namespace plcs

#endif
