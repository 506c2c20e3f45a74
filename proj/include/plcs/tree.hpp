#ifndef PLCS_TREE_HPP
#define PLCS_TREE_HPP

#include <map>
#include <optional>
#include <vector>

#include "plcs/branch.hpp"
#include "plcs/series.hpp"

namespace plcs {

/* A branch or marker germ in parametrized form at the current infinitely near point. */
struct Ent {
    PowerSeries u, v; // local coordinates of the parametrization
    long id = 0;      // branch index >= 0; markers are negative (L = -1, exceptional lines < -1)
    long budget = 0;  // marked points remaining along this branch, counting the current one
    bool marker = false;

    long mult() const {
        long ou = u.ord_bound(), ov = v.ord_bound();
        long m = std::min(ou, ov);
        if (m >= std::min(u.trunc, v.trunc))
            throw TruncationTooShort("branch multiplicity undecidable at working precision");
        return m;
    }
    bool tangent_to_u_axis() const { return ord_cmp() > 0; } // tangent to the line {u=0}
    bool tangent_to_v_axis() const { return ord_cmp() < 0; } // tangent to the line {v=0}
    /* sign of ord(u) - ord(v): >0 means tangent to {u=0}. */
    int ord_cmp() const {
        if (u.known_zero()) return 1;
        if (v.known_zero()) return -1;
        long ou = u.ord_bound(), ov = v.ord_bound();
        long m = std::min(ou, ov);
        if (m >= std::min(u.trunc, v.trunc))
            throw TruncationTooShort("tangent direction undecidable at working precision");
        return ou > ov ? 1 : (ou < ov ? -1 : 0);
    }
};

/* One tangent direction produced by blowing up a point. */
struct BlowUpChild {
    bool at_infinity = false;  // direction of the {u=0} axis (chart u/v)
    Rat lambda;                // finite tangent v = lambda*u otherwise
    std::vector<Ent> ents;     // strict transforms through this child, budgets decremented
    bool new_u_is_exceptional = false, new_v_is_exceptional = false;
    bool inherit_v_axis = false; // child keeps the old v-axis (lambda == 0)
    bool inherit_u_axis = false; // child keeps the old u-axis (infinity direction)
};

/* Group entities through a point by tangent direction and compute strict transforms. */
std::vector<BlowUpChild> blow_up(const std::vector<Ent>& ents);

struct TreeNode {
    int id = 0;
    int parent = -1;
    long m = 0;        // strict multiplicity of the germ (markers excluded)
    Int mhat = 0;      // total-transform multiplicity
    bool essential = false;
    bool marked = false;
    bool satellite = false;
    std::vector<int> prox;              // nodes this one is proximate to
    std::map<long, long> branch_mult;   // branch id -> strict multiplicity of that branch here
    std::vector<long> markers;          // marker ids through this node
};

struct ResolutionTree {
    std::vector<TreeNode> nodes;
    std::map<long, std::vector<int>> branch_chain; // branch id -> recorded node ids, root first
    std::map<long, std::vector<int>> marker_chain;

    const TreeNode& node(int id) const { return nodes[(size_t)id]; }
    bool empty() const { return nodes.empty(); }

    long marked_count() const {
        long n = 0;
        for (auto& q : nodes) n += q.marked ? 1 : 0;
        return n;
    }
    Int marked_degree() const { // sum of m(m+1)/2 over marked nodes
        Int d = 0;
        for (auto& q : nodes)
            if (q.marked) d += Int(q.m) * (q.m + 1) / 2;
        return d;
    }
    Int marked_delta() const {
        Int d = 0;
        for (auto& q : nodes)
            if (q.marked) d += Int(q.m) * (q.m - 1) / 2;
        return d;
    }
    /* Marked nodes on the strict transform of a marker (the on-L chain). */
    std::vector<int> marked_marker_chain(long marker_id) const {
        std::vector<int> out;
        auto it = marker_chain.find(marker_id);
        if (it == marker_chain.end()) return out;
        for (int id : it->second)
            if (node(id).marked) out.push_back(id);
        return out;
    }
    /* Marked nodes on a branch. */
    std::vector<int> marked_branch_chain(long branch_id) const {
        std::vector<int> out;
        auto it = branch_chain.find(branch_id);
        if (it == branch_chain.end()) return out;
        for (int id : it->second)
            if (node(id).marked) out.push_back(id);
        return out;
    }
    long essential_count_on_branch(long branch_id) const {
        long n = 0;
        auto it = branch_chain.find(branch_id);
        if (it == branch_chain.end()) return 0;
        for (int id : it->second)
            if (node(id).essential) ++n;
        return n;
    }
    /* Noether intersection number of two branches: sum of products of their strict
       multiplicities over the common infinitely near points. */
    Int branch_intersection(long a, long b) const;
};

/* Build the resolution tree of the germ given by the entities (markers included for
   incidence), exploring every essential point plus the marked budgets. */
ResolutionTree build_tree(const std::vector<Ent>& at_centre);

} // namespace plcs

#endif
