#include "plcs/tree.hpp"

#include <functional>

namespace plcs {

std::vector<BlowUpChild> blow_up(const std::vector<Ent>& ents) {
    std::map<Rat, BlowUpChild> finite;
    BlowUpChild inf_child;
    inf_child.at_infinity = true;
    inf_child.new_v_is_exceptional = true;
    inf_child.inherit_u_axis = true;

    for (const Ent& e : ents) {
        invariant(!(e.u.known_zero() && e.v.known_zero()), "entity with zero parametrization");
        int cmp = e.ord_cmp();
        Ent child = e;
        if (!e.marker && child.budget > 0) --child.budget;
        if (cmp > 0) {
            // tangent to {u=0}: lands at the infinity point of the exceptional line
            child.u = e.u.divided_by(e.v);
            child.v = e.v;
            inf_child.ents.push_back(std::move(child));
        } else {
            Rat lambda(0);
            if (cmp == 0) {
                long o = *e.u.ord();
                lambda = e.v.coeff(o) / e.u.coeff(o);
            }
            child.u = e.u;
            child.v = (e.v - e.u * lambda).divided_by(e.u);
            auto [it, fresh] = finite.try_emplace(lambda);
            if (fresh) {
                it->second.lambda = lambda;
                it->second.new_u_is_exceptional = true;
                it->second.inherit_v_axis = (lambda == 0);
            }
            it->second.ents.push_back(std::move(child));
        }
    }

    std::vector<BlowUpChild> out;
    for (auto& [l, ch] : finite) out.push_back(std::move(ch));
    if (!inf_child.ents.empty()) out.push_back(std::move(inf_child));
    return out;
}

namespace {

struct Frame {
    std::vector<Ent> ents;
    int parent = -1;
    std::optional<int> ex_u, ex_v; // node whose blow-up created the axis, if exceptional
};

struct Builder {
    ResolutionTree tree;
    long depth_limit = 512;

    void explore(const Frame& fr, long depth) {
        invariant(depth < depth_limit, "resolution recursion does not terminate (branches not distinct?)");

        long m = 0, nbranches = 0;
        bool marked = false;
        const Ent* only = nullptr;
        for (const Ent& e : fr.ents) {
            if (e.marker) continue;
            m += e.mult();
            ++nbranches;
            only = &e;
            if (e.budget >= 1) marked = true;
        }
        if (nbranches == 0) return;

        bool satellite = fr.ex_u.has_value() && fr.ex_v.has_value();
        bool essential;
        if (fr.parent < 0) {
            essential = m >= 2;
        } else if (satellite) {
            essential = true;
        } else {
            // free point: inessential iff one smooth branch transversal to the
            // exceptional line through the point
            bool transversal = true;
            if (nbranches == 1 && only->mult() == 1) {
                if (fr.ex_u && only->tangent_to_u_axis()) transversal = false;
                if (fr.ex_v && only->tangent_to_v_axis()) transversal = false;
            }
            essential = !(nbranches == 1 && only->mult() == 1 && transversal);
        }

        if (!essential && !marked) return;

        int id = (int)tree.nodes.size();
        invariant(id < 100000, "resolution tree too large");
        TreeNode q;
        q.id = id;
        q.parent = fr.parent;
        q.m = m;
        q.essential = essential;
        q.marked = marked;
        q.satellite = satellite;
        if (fr.ex_u) q.prox.push_back(*fr.ex_u);
        if (fr.ex_v && (!fr.ex_u || *fr.ex_v != *fr.ex_u)) q.prox.push_back(*fr.ex_v);
        std::sort(q.prox.begin(), q.prox.end());
        q.mhat = m;
        for (int p : q.prox) q.mhat += tree.nodes[(size_t)p].mhat;
        for (const Ent& e : fr.ents) {
            if (e.marker) {
                q.markers.push_back(e.id);
                tree.marker_chain[e.id].push_back(id);
            } else {
                q.branch_mult[e.id] = e.mult();
                tree.branch_chain[e.id].push_back(id);
            }
        }
        std::sort(q.markers.begin(), q.markers.end());
        tree.nodes.push_back(std::move(q));

        for (BlowUpChild& ch : blow_up(fr.ents)) {
            bool has_branch = false;
            for (auto& e : ch.ents)
                if (!e.marker) { has_branch = true; break; }
            if (!has_branch) continue;
            Frame child;
            child.ents = std::move(ch.ents);
            child.parent = id;
            if (ch.new_u_is_exceptional) child.ex_u = id;
            else if (ch.inherit_u_axis) child.ex_u = fr.ex_u;
            if (ch.new_v_is_exceptional) child.ex_v = id;
            else if (ch.inherit_v_axis) child.ex_v = fr.ex_v;
            explore(child, depth + 1);
        }
    }
};

} // namespace

ResolutionTree build_tree(const std::vector<Ent>& at_centre) {
    long saved = division_window_extra();
    for (long extra = 0;; extra = extra == 0 ? 64 : extra * 4) {
        division_window_extra() = saved + extra;
        try {
            Builder b;
            Frame root;
            root.ents = at_centre;
            b.explore(root, 0);
            division_window_extra() = saved;
            return std::move(b.tree);
        } catch (const TruncationTooShort&) {
            if (extra >= 4096) {
                division_window_extra() = saved;
                throw;
            }
        }
    }
}

Int ResolutionTree::branch_intersection(long a, long b) const {
    auto ia = branch_chain.find(a);
    invariant(ia != branch_chain.end(), "unknown branch in intersection");
    Int total = 0;
    for (int id : ia->second) {
        const TreeNode& q = node(id);
        auto mb = q.branch_mult.find(b);
        if (mb == q.branch_mult.end()) continue;
        auto ma = q.branch_mult.find(a);
        total += Int(ma->second) * mb->second;
    }
    return total;
}

} // namespace plcs
