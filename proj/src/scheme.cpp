#include "plcs/scheme.hpp"

#include <functional>
#include <random>
#include <sstream>

namespace plcs {

namespace {

Ent branch_to_ent(const FractionalSeries& xi, long id, long budget) {
    Ent e;
    e.u = PowerSeries::monomial(xi.den, 1);
    for (auto& [n, v] : xi.terms) e.v.c[n] = v;
    e.id = id;
    e.budget = budget;
    return e;
}

Ent marker_ent(Line l) {
    Ent e;
    if (l == Line::Y) e.u = PowerSeries::monomial(1, 1);
    else e.v = PowerSeries::monomial(1, 1);
    e.id = marker_of(l);
    e.marker = true;
    return e;
}

ResolutionTree tree_of(const std::vector<SchemeBranch>& branches,
                       const std::vector<long>* depth_override) {
    std::vector<Ent> ents;
    for (size_t i = 0; i < branches.size(); ++i) {
        long d = depth_override ? (*depth_override)[i] : branches[i].depth;
        ents.push_back(branch_to_ent(branches[i].xi, (long)i, d));
    }
    ents.push_back(marker_ent(Line::Y));
    ents.push_back(marker_ent(Line::X));
    return build_tree(ents);
}

void validate_branches(const std::vector<SchemeBranch>& branches) {
    for (auto& b : branches) {
        require(b.xi.reduced(), "branch series must be gcd-reduced");
        require(!b.xi.terms.empty() || b.xi.den == 1,
                "the zero series must have denominator 1");
        if (!b.xi.terms.empty())
            require(b.xi.terms.begin()->first > 0, "branch series must have positive order");
        require(b.depth >= 0, "negative marked depth");
    }
    for (size_t i = 0; i < branches.size(); ++i)
        for (size_t j = i + 1; j < branches.size(); ++j)
            require(!same_branch(branches[i].xi, branches[j].xi),
                    "branches must be pairwise distinct");
}

void fill_caches(GSScheme& x) {
    x.deg = x.tree.marked_degree();
    x.delta = x.tree.marked_delta();
    long r = (long)x.branches.size();
    x.mu = r ? 2 * x.delta - r + 1 : Int(0);
    x.mt = 0;
    x.mt_s = 0;
    x.in_GS1 = true;
    for (auto& b : x.branches) {
        long m = b.xi.multiplicity();
        x.mt += m;
        if (m >= 2) {
            x.mt_s += m;
            x.in_GS1 = false;
        }
    }
    x.in_S = true;
    for (auto& q : x.tree.nodes)
        if (q.marked != q.essential) { x.in_S = false; break; }
    if (!x.tree.empty() && x.tree.node(0).parent != -1)
        throw DisconnectedTree("tree root is not the centre");
}

Rat generic_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(1, 19);
    std::uniform_int_distribution<long> den(1, 7);
    std::uniform_int_distribution<int> sgn(0, 1);
    Rat v(num(rng), den(rng));
    return sgn(rng) ? v : -v;
}

} // namespace

GSScheme build_scheme_depths(std::vector<SchemeBranch> branches) {
    validate_branches(branches);
    GSScheme x;
    x.branches = std::move(branches);
    x.tree = tree_of(x.branches, nullptr);
    for (size_t i = 0; i < x.branches.size(); ++i) {
        long ess = x.tree.essential_count_on_branch((long)i);
        require(x.branches[i].depth >= std::max(ess, 1L),
                "marked depth must cover the essential points of the branch");
    }
    fill_caches(x);
    return x;
}

GSScheme build_scheme(const std::vector<FractionalSeries>& branches,
                      const std::vector<long>& extra_depth) {
    require(branches.size() == extra_depth.size(), "one extra_depth per branch");
    std::vector<SchemeBranch> bs;
    for (size_t i = 0; i < branches.size(); ++i) {
        require(extra_depth[i] >= 0, "extra_depth must be non-negative");
        bs.push_back({branches[i], 0});
    }
    validate_branches(bs);
    if (bs.empty()) return GSScheme{};
    std::vector<long> zero(bs.size(), 0);
    ResolutionTree essential = tree_of(bs, &zero);
    for (size_t i = 0; i < bs.size(); ++i) {
        long ess = essential.essential_count_on_branch((long)i);
        bs[i].depth = std::max(ess, 1L) + extra_depth[i];
    }
    return build_scheme_depths(std::move(bs));
}

std::string GSScheme::discrete_signature() const {
    // canonical isomorphism-invariant form of (multiplicities, marking, proximity)
    std::vector<std::vector<int>> children(tree.nodes.size());
    for (auto& q : tree.nodes)
        if (q.parent >= 0) children[(size_t)q.parent].push_back(q.id);
    std::function<std::string(int)> sig = [&](int id) {
        const TreeNode& q = tree.node(id);
        std::vector<std::string> cs;
        for (int c : children[(size_t)id]) cs.push_back(sig(c));
        std::sort(cs.begin(), cs.end());
        std::ostringstream os;
        os << "(" << q.m << (q.marked ? "*" : "") << (q.essential ? "e" : "")
           << (q.satellite ? "s" : "") << ";";
        for (auto& c : cs) os << c;
        os << ")";
        return os.str();
    };
    return tree.empty() ? "()" : sig(0);
}

SchemeOnLine intersect_line(const GSScheme& x, Line l) {
    SchemeOnLine r;
    for (int id : x.tree.marked_marker_chain(marker_of(l))) {
        long m = x.tree.node(id).m;
        r.degree += m;
        r.points.emplace_back(id, m);
    }
    return r;
}

static void check_contact_domain(const GSScheme& x) {
    if (!x.in_S) throw NotASingularityScheme("degree formula needs the pure essential tree");
    for (auto& b : x.branches)
        require(!b.xi.terms.empty() && b.xi.terms.begin()->first >= b.xi.den,
                "degree formula needs branches with order >= 1");
}

Rat contact_degree_total(const GSScheme& x) {
    check_contact_domain(x);
    if (x.empty()) return Rat(0);
    ConjugateSet cs = ConjugateSet::of(x.series());
    size_t m = cs.conj.size();
    long r = (long)x.branches.size();
    Rat total(0);
    for (size_t i = 0; i < m; ++i) {
        Rat best(0);
        for (size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            if (j > i) total += cs.contact[i][j];
            if (cs.contact[i][j] > best) best = cs.contact[i][j];
        }
        total += best;
    }
    return total + Rat((long)m - r, 2);
}

Int degree_via_contacts(const GSScheme& x) {
    Rat total = contact_degree_total(x);
    invariant(den(total) == 1, "contact degree formula must produce an integer");
    return num(total);
}

Rat contact_formula_deficit(const GSScheme& x) {
    check_contact_domain(x);
    if (x.empty()) return Rat(0);
    ConjugateSet cs = ConjugateSet::of(x.series());
    size_t m = cs.conj.size();
    std::vector<Rat> max_sum(x.branches.size(), Rat(0));
    for (size_t i = 0; i < m; ++i) {
        Rat best(0);
        for (size_t j = 0; j < m; ++j)
            if (j != i && cs.contact[i][j] > best) best = cs.contact[i][j];
        max_sum[cs.conj[i].first] += best;
    }
    Rat deficit(0);
    for (size_t b = 0; b < x.branches.size(); ++b) {
        Int on_marked = 0;
        for (auto& n : x.tree.nodes) {
            if (!n.marked) continue;
            auto it = n.branch_mult.find((long)b);
            if (it != n.branch_mult.end()) on_marked += it->second;
        }
        deficit += Rat(on_marked) - Rat(x.branches[b].xi.multiplicity() - 1) - max_sum[b];
    }
    return deficit;
}

GSScheme specialize(const GSScheme& x, size_t branch, long m_size, unsigned seed) {
    require(branch < x.branches.size(), "no such branch");
    const SchemeBranch& q = x.branches[branch];
    if (q.xi.multiplicity() != 1 || q.xi.den != 1)
        throw BranchNotSmooth("specialization needs a smooth branch y = series in x");
    long on_l = (long)x.tree.marked_marker_chain(MARKER_Y).size();
    if (m_size < std::max(on_l, 1L) || m_size > q.depth)
        throw MNotAdmissible("need |T* on L| <= |M| <= marked depth of the branch, got " +
                             std::to_string(m_size));

    std::mt19937 rng(seed);
    FractionalSeries xi = q.xi;
    for (auto it = xi.terms.begin(); it != xi.terms.end();)
        it = it->first <= m_size - 1 ? xi.terms.erase(it) : std::next(it);
    if (!xi.terms.count(m_size)) xi.terms[m_size] = generic_rational(rng);

    std::vector<SchemeBranch> bs = x.branches;
    bs[branch].xi = xi;
    GSScheme y = build_scheme_depths(std::move(bs));
    if (y.deg != x.deg || y.mt != x.mt || y.mt_s != x.mt_s ||
        y.discrete_signature() != x.discrete_signature())
        throw MNotAdmissible("subtree choice does not admit an equisingular specialization");
    return y;
}

long split_exponent(const GSScheme& x, long q_index) {
    auto chain = x.tree.marked_marker_chain(MARKER_Y);
    if (q_index == 0) throw QIsCentre("the split exponent is defined away from the centre");
    if (q_index < 0 || q_index >= (long)chain.size())
        throw QNotOnL("point index beyond the marked chain on L");
    long k = q_index;
    // verify both separating inequalities over conjugates
    auto through = [&](const FractionalSeries& xi) {
        // a branch lying on the line passes every point of the chain
        return xi.terms.empty() || Rat(xi.terms.begin()->first, xi.den) > k;
    };
    ConjugateSet cs = ConjugateSet::of(x.series());
    for (size_t i = 0; i < cs.conj.size(); ++i)
        for (size_t j = i + 1; j < cs.conj.size(); ++j) {
            bool ti = through(x.branches[cs.conj[i].first].xi);
            bool tj = through(x.branches[cs.conj[j].first].xi);
            if (ti && tj)
                invariant(cs.contact[i][j] > k, "through-pair contact must exceed the split");
            else if (ti != tj)
                invariant(cs.contact[i][j] <= k, "cross-split contact must not exceed the split");
        }
    return k;
}

GSScheme extend(const GSScheme& x, long q_index) {
    auto chain = x.tree.marked_marker_chain(MARKER_Y);
    if (q_index == 0) throw QIsCentre("extension is defined away from the centre");
    if (q_index < 0 || q_index >= (long)chain.size())
        throw QNotOnL("point index beyond the marked chain on L");

    int prev_node = chain[(size_t)q_index - 1];
    const TreeNode& qb = x.tree.node(prev_node);
    long n = 0;
    std::vector<SchemeBranch> bs = x.branches;
    bool any = false;
    for (size_t i = 0; i < bs.size(); ++i) {
        auto& xi = bs[i].xi;
        bool through = xi.terms.empty() || Rat(xi.terms.begin()->first, xi.den) > q_index;
        if (!through) continue;
        any = true;
        auto it = qb.branch_mult.find((long)i);
        invariant(it != qb.branch_mult.end(), "through branch missing at the predecessor");
        n += it->second;
        std::map<long, Rat> shifted;
        for (auto& [e, v] : xi.terms) shifted[e + xi.den] = v;
        xi.terms = std::move(shifted);
        bs[i].depth += 1;
    }
    require(any, "no branch passes through the chosen point");

    GSScheme y = build_scheme_depths(std::move(bs));
    invariant(y.deg == x.deg + Int(n) * (n + 1) / 2,
              "extension degree must grow by the triangular number of the new multiplicity");
    invariant(y.mt == x.mt && y.mt_s == x.mt_s, "extension must preserve mt and mt_s");
    return y;
}

} // namespace plcs
