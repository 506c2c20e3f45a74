#ifndef PLCS_BOUNDS_HPP
#define PLCS_BOUNDS_HPP

#include <string>
#include <vector>

#include "plcs/scheme.hpp"

namespace plcs {

/* Closed-form degree bounds and existence criteria; every verdict is an exact
   integer or quadratic-irrational comparison, decimals appear only in notes. */

struct BoundCheck {
    std::string label;
    bool holds = false;
    std::string lhs, rhs;
    std::string note;
};

struct BoundReport {
    Int deg = 0, mu = 0;
    long mt = 0, mt_s = 0;
    long sigma_value = 0;
    bool ordinary = false, gs1 = false;
    std::vector<BoundCheck> checks;
};

/* Upper bound for the minimal degree of a curve with the prescribed singularity:
   ordinary floor(sqrt(2) mt)+1; smooth-branch class
   floor((1+sqrt 2) sqrt(deg+mt+1))+mt+3; general class
   floor(sqrt((deg+mt+1)/beta0))+mt+mt_s+3. */
long sigma(const GSScheme& x);

/* The arm of sigma backed by the irreducibility criterion (skips the sharper
   ordinary shortcut); sigma(x) <= sigma_from_criterion(x). */
long sigma_from_criterion(const GSScheme& x);

/* sum mu <= d^2/392 over a list of singularity types. */
BoundCheck check_theorem1(const std::vector<GSScheme>& types, long d);

/* sigma(X) < 14 sqrt(mu) for mu >= 2; reports the degree ceil(14 sqrt(mu)). */
BoundCheck check_theorem2(const GSScheme& x);
Int theorem2_degree(const GSScheme& x);

/* (sigma+1)(sigma+2) <= 196 mu; ordinary types also satisfy the 30 mu form. */
BoundCheck check_prop58(const GSScheme& x);

/* sum (sigma_i+1)(sigma_i+2)/2 < (d^2+6d-1)/4 - floor(d/2). */
BoundCheck check_lemma55(const std::vector<GSScheme>& types, long d);

/* Ordinary-multiplicity variant: sum m_i(m_i+1)/2 against the same right side. */
BoundCheck check_lemma53(const std::vector<long>& mults, long d);

/* Irreducible-curve criterion: deg+mt+1 < beta (d-mt-2)^2 for the smooth-branch
   class, deg+mt+1 < beta0 (d-mt-mt_s-2)^2 otherwise. */
BoundCheck check_lemma411(const GSScheme& x, long d);

struct PriorComparison {
    BoundCheck prior;   // sum (mu+4)(mu+5) <= (d+3)^2/2
    BoundCheck current; // sum mu <= d^2/392
    long prior_min_d = 0, current_min_d = 0;
};
PriorComparison compare_prior_bound(const std::vector<GSScheme>& types, long d);

/* All single-scheme checks bundled, for reports. */
BoundReport bound_report(const GSScheme& x, long d);

} // namespace plcs

#endif
