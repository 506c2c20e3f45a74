#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "plcs/scheme.hpp"

namespace plcs {

namespace {

Rat generic_tangent(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(1, 997);
    return Rat(num(rng), 1 + num(rng) % 13);
}

/* Multiplicity at the blow-down of a child-level branch: the order of the
   coordinate that becomes a unit factor of x (finite chart) or y (infinity chart). */
long blow_down_mult(const Ent& e, bool at_infinity) {
    const PowerSeries& s = at_infinity ? e.v : e.u;
    auto o = s.ord();
    invariant(o.has_value(), "branch collapses onto the exceptional line");
    return *o;
}

Ent blow_down(const Ent& e, bool at_infinity, const Rat& lambda) {
    Ent r = e;
    if (at_infinity) {
        r.u = e.u * e.v;
        r.v = e.v;
    } else {
        r.u = e.u;
        r.v = e.u * (e.v + PowerSeries::monomial(0, lambda));
    }
    r.budget = e.budget + 1;
    return r;
}

/* The recursive reduction of the proof: X given by parametrized branches with
   marked budgets, L a smooth germ at the same point. Returns branches of X:L. */
std::vector<Ent> reduce_rec(std::vector<Ent> X, const Ent& L, std::mt19937& rng,
                            long& next_id, int depth) {
    invariant(depth < 256, "reduction recursion does not terminate");
    std::erase_if(X, [](const Ent& e) { return e.budget <= 0; });
    if (X.empty()) return {};

    long m = 0;
    for (auto& e : X) m += e.mult();

    Ent Lm = L;
    Lm.marker = true;
    Lm.budget = 0;
    std::vector<Ent> all = X;
    all.push_back(Lm);
    auto kids = blow_up(all);

    struct Child {
        bool at_infinity;
        Rat lambda;
        std::vector<Ent> branches; // after the L-direction reduction, budget-0 dropped
    };
    std::vector<Child> children;
    for (auto& k : kids) {
        Child c{k.at_infinity, k.lambda, {}};
        std::optional<Ent> Lstar;
        for (auto& e : k.ents) {
            if (e.marker) Lstar = e;
            else c.branches.push_back(e);
        }
        if (Lstar) {
            Lstar->marker = false;
            c.branches = reduce_rec(std::move(c.branches), *Lstar, rng, next_id, depth + 1);
        } else {
            std::erase_if(c.branches, [](const Ent& e) { return e.budget <= 0; });
        }
        if (!c.branches.empty()) children.push_back(std::move(c));
    }

    long mtD = 0;
    for (auto& c : children)
        for (auto& e : c.branches) mtD += blow_down_mult(e, c.at_infinity);

    std::vector<Ent> result;
    long pads = 0;
    if (mtD < m) {
        // Case 1: the blown-down germ drops multiplicity by a >= 1
        long a = m - mtD;
        for (auto& c : children)
            for (auto& e : c.branches) result.push_back(blow_down(e, c.at_infinity, c.lambda));
        pads = a - 1;
    } else {
        // Case 2: multiplicity preserved; reduce the strict transform by the
        // exceptional line at every child point
        invariant(mtD == m, "blow-down multiplicity exceeds the centre multiplicity");
        long pE = 0;
        for (auto& c : children) {
            Ent E;
            if (c.at_infinity) E.u = PowerSeries::monomial(1, 1); // E = {v=0}
            else E.v = PowerSeries::monomial(1, 1);               // E = {u=0}
            E.id = -100;
            auto reduced = reduce_rec(std::move(c.branches), E, rng, next_id, depth + 1);
            for (auto& e : reduced) pE += blow_down_mult(e, c.at_infinity);
            for (auto& e : reduced) result.push_back(blow_down(e, c.at_infinity, c.lambda));
        }
        invariant(pE <= m, "reduction by the exceptional line raised its intersection");
        pads = m - pE;
    }
    for (long i = 0; i < pads; ++i) {
        Ent g;
        g.u = PowerSeries::monomial(1, 1);
        g.v = PowerSeries::monomial(1, generic_tangent(rng));
        g.id = next_id++;
        g.budget = 1;
        result.push_back(g);
    }
    return result;
}

std::string tree_signature_full(const ResolutionTree& t) {
    std::vector<std::vector<int>> children(t.nodes.size());
    for (auto& q : t.nodes)
        if (q.parent >= 0) children[(size_t)q.parent].push_back(q.id);
    std::function<std::string(int)> sig = [&](int id) {
        const TreeNode& q = t.node(id);
        std::vector<std::string> cs;
        for (int c : children[(size_t)id]) cs.push_back(sig(c));
        std::sort(cs.begin(), cs.end());
        std::ostringstream os;
        os << "(" << q.m << (q.marked ? "*" : "") << (q.essential ? "e" : "")
           << (q.satellite ? "s" : "");
        for (long mk : q.markers) os << "L" << -mk;
        os << ";";
        for (auto& c : cs) os << c;
        os << ")";
        return os.str();
    };
    return t.empty() ? "()" : sig(0);
}

/* Rebuild a canonical fractional-series realization from the discrete data of a
   parametrized result (tree multiplicities, pairwise intersections, incidence
   with the line {y=0}); the result is equivalent to the parametrized germ. */
std::vector<SchemeBranch> synthesize(const ResolutionTree& et, const std::vector<long>& ids,
                                     std::mt19937& rng) {
    auto pick = [&](const Rat& avoid) {
        std::uniform_int_distribution<long> num(1, 9973);
        for (;;) {
            Rat v(num(rng), 1 + num(rng) % 11);
            if (v != 0 && v != avoid) return v;
        }
    };

    std::vector<SchemeBranch> out;
    std::vector<long> mult0;
    auto ychain = et.marker_chain.count(MARKER_Y) ? et.marker_chain.at(MARKER_Y)
                                                  : std::vector<int>{};
    for (size_t bi = 0; bi < ids.size(); ++bi) {
        long id = ids[bi];
        const auto& chain = et.branch_chain.at(id);
        std::vector<long> seq;
        long marked_depth = 0;
        for (int nid : chain) {
            seq.push_back(et.node(nid).branch_mult.at(id));
            if (et.node(nid).marked) ++marked_depth;
        }
        long m = seq[0];
        auto chars = char_exponents_from_sequence(seq);

        // order of the branch from its incidence with {y=0}
        size_t shared_y = 0;
        while (shared_y < chain.size() && shared_y < ychain.size() &&
               chain[shared_y] == ychain[shared_y])
            ++shared_y;
        long prefix_mult = 0;
        for (size_t k = 0; k < shared_y; ++k) prefix_mult += seq[k];
        Rat e1(prefix_mult, m);
        invariant(e1 > 0, "synthesized branch must meet the line at the centre");

        // closest already-built branch and the contact to realize with it
        long best_j = -1;
        Rat best_c(0);
        for (size_t j = 0; j < out.size(); ++j) {
            Int inter = et.branch_intersection(id, ids[j]);
            Rat c = max_cross_contact(out[j].xi, m, inter);
            if (best_j < 0 || c > best_c) { best_j = (long)j; best_c = c; }
        }

        std::map<Rat, Rat> terms; // exponent -> coefficient
        if (best_j >= 0) {
            const FractionalSeries& anchor = out[(size_t)best_j].xi;
            for (auto& [n, v] : anchor.terms) {
                Rat e(n, anchor.den);
                if (e < best_c) terms[e] = v;
            }
            // a nonzero coefficient at the contact exponent is only admissible if
            // it keeps the multiplicity sequence: the exponent must lie in the
            // subgroup generated by 1 and the characteristic exponents below it
            long lattice = 1;
            for (auto& ce : chars)
                if (ce <= best_c) lattice = std::lcm(lattice, (long)den(ce));
            Rat cm = best_c * m;
            if (den(cm) == 1 && best_c >= e1 && lattice % (long)den(best_c) == 0)
                terms[best_c] = pick(anchor.coeff_at(best_c));
            else
                invariant(anchor.coeff_at(best_c) != 0,
                          "contact exponent missing from both branches");
        }
        if (!terms.count(e1) && (terms.empty() || terms.begin()->first > e1))
            terms[e1] = pick(Rat(0));
        for (auto& ce : chars)
            if (!terms.count(ce)) terms[ce] = pick(Rat(0));

        FractionalSeries xi;
        xi.den = m;
        for (auto& [e, v] : terms) {
            Rat n = e * m;
            invariant(den(n) == 1 && n > 0, "synthesized exponent outside the branch lattice");
            xi.terms[(long)num(n)] = v;
        }
        invariant(xi.reduced() && xi.multiplicity() == m,
                  "synthesized series has the wrong multiplicity");
        out.push_back({xi, marked_depth});
    }
    return out;
}

} // namespace

GSScheme reduce(const GSScheme& x, Line l, unsigned seed) {
    if (x.empty()) return GSScheme{};
    std::mt19937 rng(seed);

    std::vector<Ent> ents;
    for (size_t i = 0; i < x.branches.size(); ++i) {
        Ent e;
        e.u = PowerSeries::monomial(x.branches[i].xi.den, 1);
        for (auto& [n, v] : x.branches[i].xi.terms) e.v.c[n] = v;
        e.id = (long)i;
        e.budget = x.branches[i].depth;
        ents.push_back(e);
    }
    Ent L;
    if (l == Line::Y) L.u = PowerSeries::monomial(1, 1);
    else L.v = PowerSeries::monomial(1, 1);
    L.id = -200;

    long next_id = (long)x.branches.size();
    auto result = reduce_rec(ents, L, rng, next_id, 0);
    if (result.empty()) {
        GSScheme e;
        Int cap = intersect_line(x, l).degree;
        invariant(x.deg == cap, "empty reduction with leftover degree");
        return e;
    }

    // expected discrete data of the reduction, from the parametrized branches
    std::vector<Ent> expected = result;
    {
        Ent my, mx;
        my.u = PowerSeries::monomial(1, 1);
        my.id = MARKER_Y;
        my.marker = true;
        mx.v = PowerSeries::monomial(1, 1);
        mx.id = MARKER_X;
        mx.marker = true;
        expected.push_back(my);
        expected.push_back(mx);
    }
    ResolutionTree et = build_tree(expected);
    std::vector<long> ids;
    for (auto& e : result) ids.push_back(e.id);

    GSScheme y = build_scheme_depths(synthesize(et, ids, rng));
    invariant(tree_signature_full(y.tree) == tree_signature_full(et),
              "synthesized reduction does not reproduce the parametrized tree: " +
                  tree_signature_full(y.tree) + " vs " + tree_signature_full(et));
    invariant(y.deg + intersect_line(x, l).degree == x.deg,
              "reduction degree bookkeeping failed");
    return y;
}

} // namespace plcs
