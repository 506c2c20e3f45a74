#include "plcs/bounds.hpp"

#include <sstream>

#include "plcs/quadratic.hpp"

namespace plcs {

namespace {

std::string rat_str(const Rat& v) {
    if (den(v) == 1) return num(v).str();
    return num(v).str() + "/" + den(v).str();
}

std::string quad_str(const Quad& x) {
    if (x.b == 0) return rat_str(x.a);
    std::ostringstream os;
    os << rat_str(x.a) << (x.b > 0 ? "+" : "") << rat_str(x.b) << "*sqrt(" << x.k << ")";
    return os.str();
}

bool is_ordinary(const GSScheme& x) { return x.tree.marked_count() <= 1; }

/* floor(sqrt(q)) for a non-negative quadratic irrational, exact. */
Int floor_sqrt(const Quad& q) {
    invariant(q.sgn() >= 0, "square root of a negative bound value");
    return isqrt(quad_floor(q));
}

long to_long(const Int& v) { return (long)v; }

} // namespace

long sigma(const GSScheme& x) {
    if (!x.in_S) throw NotASingularityScheme("sigma needs the pure essential tree");
    if (is_ordinary(x)) return to_long(isqrt(Int(2) * x.mt * x.mt)) + 1;
    return sigma_from_criterion(x);
}

long sigma_from_criterion(const GSScheme& x) {
    if (!x.in_S) throw NotASingularityScheme("sigma needs the pure essential tree");
    Rat v = Rat(x.deg + x.mt + 1);
    if (x.in_GS1) // (1+sqrt 2) sqrt(v) = sqrt((3+2 sqrt 2) v)
        return to_long(floor_sqrt(Quad(Rat(3) * v, Rat(2) * v, 2))) + x.mt + 3;
    // sqrt(v/beta0) = sqrt(v (47-3 sqrt 85)/2)
    return to_long(floor_sqrt(Quad(Rat(47) * v / 2, Rat(-3) * v / 2, 85))) + x.mt + x.mt_s + 3;
}

BoundCheck check_theorem1(const std::vector<GSScheme>& types, long d) {
    Int total = 0;
    for (auto& x : types) total += x.mu;
    Rat rhs(Int(d) * d, 392);
    return {"theorem1", Rat(total) <= rhs, total.str(), rat_str(rhs), ""};
}

Int theorem2_degree(const GSScheme& x) {
    Int r = isqrt(Int(196) * x.mu);
    return r * r == Int(196) * x.mu ? r : r + 1;
}

BoundCheck check_theorem2(const GSScheme& x) {
    long s = sigma(x);
    Int lhs = Int(s) * s, rhs = Int(196) * x.mu;
    bool applicable = x.mu >= 2;
    BoundCheck c{"theorem2", applicable ? lhs < rhs : true, lhs.str(), rhs.str(), ""};
    c.note = "d2=" + theorem2_degree(x).str() + (applicable ? "" : "; mu < 2, informational");
    return c;
}

BoundCheck check_prop58(const GSScheme& x) {
    long s = sigma(x);
    Int lhs = Int(s + 1) * (s + 2), rhs = Int(196) * x.mu;
    bool vacuous = x.mu == 0;
    BoundCheck c{"prop58", vacuous ? true : lhs <= rhs, lhs.str(), rhs.str(), ""};
    if (vacuous)
        c.note = "mu = 0, not a singularity";
    else if (is_ordinary(x))
        c.note = std::string("ordinary arm 30mu: ") +
                 (lhs <= Int(30) * x.mu ? "holds" : "fails");
    return c;
}

namespace {

BoundCheck crowding_check(const std::string& label, const Int& lhs_doubled, long d) {
    // lhs < (d^2+6d-1)/4 - floor(d/2), compared as rationals
    Rat rhs = Rat(Int(d) * d + 6 * d - 1, 4) - Rat(d / 2);
    Rat lhs(lhs_doubled, 2);
    return {label, lhs < rhs, rat_str(lhs), rat_str(rhs), ""};
}

} // namespace

BoundCheck check_lemma55(const std::vector<GSScheme>& types, long d) {
    Int lhs2 = 0;
    for (auto& x : types) {
        long s = sigma(x);
        lhs2 += Int(s + 1) * (s + 2);
    }
    return crowding_check("lemma55", lhs2, d);
}

BoundCheck check_lemma53(const std::vector<long>& mults, long d) {
    Int lhs2 = 0;
    for (long m : mults) lhs2 += Int(m) * (m + 1);
    return crowding_check("lemma53", lhs2, d);
}

BoundCheck check_lemma411(const GSScheme& x, long d) {
    long kf = x.in_GS1 ? 2 : 85;
    Quad beta = x.in_GS1 ? VanishingConstants::beta() : VanishingConstants::beta0();
    long def = d - x.mt - (x.in_GS1 ? 0 : x.mt_s) - 2;
    Quad lhs = Quad::rational(Rat(x.deg + x.mt + 1), kf);
    Quad rhs = beta * Quad::rational(Rat(def), kf).square();
    bool holds = def > 0 && lhs < rhs;
    BoundCheck c{"lemma411", holds, quad_str(lhs), quad_str(rhs), ""};
    c.note = std::string(x.in_GS1 ? "smooth-branch arm" : "general arm") +
             "; rhs ~ " + quad_decimal(rhs, 4) +
             (holds ? "; T-smooth irreducible curve of degree d exists" : "");
    return c;
}

PriorComparison compare_prior_bound(const std::vector<GSScheme>& types, long d) {
    Int mu_sum = 0, prior_sum = 0;
    for (auto& x : types) {
        mu_sum += x.mu;
        prior_sum += (x.mu + 4) * (x.mu + 5);
    }
    PriorComparison r;
    Rat prior_rhs(Int(d + 3) * (d + 3), 2);
    r.prior = {"prior-bound", Rat(prior_sum) <= prior_rhs, prior_sum.str(), rat_str(prior_rhs),
               ""};
    Rat cur_rhs(Int(d) * d, 392);
    r.current = {"theorem1", Rat(mu_sum) <= cur_rhs, mu_sum.str(), rat_str(cur_rhs), ""};
    // minimal degrees satisfying each side
    Int p = isqrt(Int(2) * prior_sum);
    while (p * p < Int(2) * prior_sum) ++p;
    r.prior_min_d = std::max(1L, to_long(p - 3));
    Int q = isqrt(Int(392) * mu_sum);
    while (q * q < Int(392) * mu_sum) ++q;
    r.current_min_d = std::max(1L, to_long(q));
    return r;
}

BoundReport bound_report(const GSScheme& x, long d) {
    BoundReport r;
    r.deg = x.deg;
    r.mu = x.mu;
    r.mt = x.mt;
    r.mt_s = x.mt_s;
    r.ordinary = is_ordinary(x);
    r.gs1 = x.in_GS1;
    r.sigma_value = sigma(x);
    r.checks = {check_theorem1({x}, d), check_theorem2(x), check_prop58(x),
                check_lemma55({x}, d), check_lemma411(x, d)};
    return r;
}

} // namespace plcs
