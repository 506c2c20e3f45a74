#include "plcs/oracle.hpp"

#include <random>
#include <set>

namespace plcs {

namespace {

/* alpha_j of a placed branch: twice its delta, plus its intersections with the
   other branches, plus its multiplicities at the marked points it passes. */
long alpha_of(const GSScheme& x, size_t j) {
    const auto& chain = x.tree.branch_chain.at((long)j);
    Int a = 0;
    for (int nid : chain) {
        long mb = x.tree.node(nid).branch_mult.at((long)j);
        a += Int(mb) * (mb - 1); // 2 delta
        if (x.tree.node(nid).marked) a += mb;
    }
    for (size_t i = 0; i < x.branches.size(); ++i)
        if (i != j) a += x.tree.branch_intersection((long)j, (long)i);
    invariant(a >= 0 && a < 100000, "vanishing-order bound out of range");
    return (long)a;
}

std::pair<PowerSeries, PowerSeries> placed_param(const FractionalSeries& xi,
                                                 const Placement& p, long T) {
    PowerSeries X, Y;
    if (p.x0 != 0) X.c[0] = p.x0;
    X.c[xi.den] = 1;
    if (p.y0 != 0) Y.c[0] = p.y0;
    for (auto& [e, v] : xi.terms) Y.c[e] = v;
    return {X.truncated(T), Y.truncated(T)};
}

} // namespace

std::vector<std::pair<long, long>> monomial_basis(long d) {
    std::vector<std::pair<long, long>> out;
    for (long s = 0; s <= d; ++s)
        for (long j = 0; j <= s; ++j) out.emplace_back(s - j, j);
    return out;
}

LinearConditionSystem conditions_of(const GSScheme& x, const Placement& p, long d) {
    require(d >= 1, "curve degree must be positive");
    LinearConditionSystem sys;
    sys.d = d;
    sys.ambient = ambient_dim(d);
    auto basis = monomial_basis(d);
    std::set<std::vector<Rat>> seen;
    for (size_t j = 0; j < x.branches.size(); ++j) {
        long alpha = alpha_of(x, j);
        sys.alphas.push_back(alpha);
        auto [X, Y] = placed_param(x.branches[j].xi, p, alpha);
        std::vector<PowerSeries> Xp(d + 1), Yp(d + 1);
        Xp[0] = Yp[0] = PowerSeries::monomial(0, 1).truncated(alpha);
        for (long k = 1; k <= d; ++k) {
            Xp[k] = (Xp[k - 1] * X).truncated(alpha);
            Yp[k] = (Yp[k - 1] * Y).truncated(alpha);
        }
        std::vector<std::vector<Rat>> rows(alpha, std::vector<Rat>(basis.size(), Rat(0)));
        for (size_t b = 0; b < basis.size(); ++b) {
            PowerSeries mono = (Xp[basis[b].first] * Yp[basis[b].second]).truncated(alpha);
            for (auto& [e, v] : mono.c)
                if (e >= 0 && e < alpha) rows[(size_t)e][b] = v;
        }
        for (auto& r : rows)
            if (seen.insert(r).second) sys.rows.push_back(r);
    }
    return sys;
}

long rank_of(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return 0;
    size_t R = rows.size(), C = rows[0].size();
    std::vector<std::vector<Int>> M(R, std::vector<Int>(C));
    for (size_t i = 0; i < R; ++i) {
        Int l = 1;
        for (auto& v : rows[i]) l = lcm(l, den(v));
        for (size_t j = 0; j < C; ++j) M[i][j] = num(rows[i][j]) * (l / den(rows[i][j]));
    }
    // fraction-free elimination
    size_t r = 0;
    Int prev = 1;
    for (size_t c = 0; c < C && r < R; ++c) {
        size_t p = r;
        while (p < R && M[p][c] == 0) ++p;
        if (p == R) continue;
        std::swap(M[p], M[r]);
        for (size_t i = r + 1; i < R; ++i) {
            for (size_t jj = c + 1; jj < C; ++jj)
                M[i][jj] = (M[r][c] * M[i][jj] - M[i][c] * M[r][jj]) / prev;
            M[i][c] = 0;
        }
        prev = M[r][c];
        ++r;
    }
    return (long)r;
}

std::vector<std::vector<Rat>> null_space(const std::vector<std::vector<Rat>>& rows, long cols) {
    std::vector<std::vector<Rat>> M = rows;
    size_t C = (size_t)cols;
    for (auto& r : M) invariant((long)r.size() == cols, "ragged matrix");
    // reduced row echelon form
    size_t r = 0;
    std::vector<long> pivot_col;
    for (size_t c = 0; c < C && r < M.size(); ++c) {
        size_t p = r;
        while (p < M.size() && M[p][c] == 0) ++p;
        if (p == M.size()) continue;
        std::swap(M[p], M[r]);
        Rat pv = M[r][c];
        for (size_t jj = 0; jj < C; ++jj) M[r][jj] /= pv;
        for (size_t i = 0; i < M.size(); ++i)
            if (i != r && M[i][c] != 0) {
                Rat f = M[i][c];
                for (size_t jj = 0; jj < C; ++jj) M[i][jj] -= f * M[r][jj];
            }
        pivot_col.push_back((long)c);
        ++r;
    }
    std::vector<bool> is_pivot(C, false);
    for (long c : pivot_col) is_pivot[(size_t)c] = true;
    std::vector<std::vector<Rat>> basis;
    for (size_t free_c = 0; free_c < C; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rat> v(C, Rat(0));
        v[free_c] = 1;
        for (size_t k = 0; k < pivot_col.size(); ++k)
            v[(size_t)pivot_col[k]] = -M[k][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

Cohomology h0_h1(const std::vector<std::pair<GSScheme, Placement>>& xs, long d) {
    Cohomology out;
    out.ambient = ambient_dim(d);
    Int total = 0;
    std::vector<std::vector<Rat>> rows;
    for (auto& [x, p] : xs) {
        total += x.deg;
        auto sys = conditions_of(x, p, d);
        for (auto& r : sys.rows) rows.push_back(std::move(r));
    }
    out.rows = (long)rows.size();
    out.rank = rank_of(rows);
    out.h0 = Int(out.ambient) - out.rank;
    out.h1 = total - out.rank;
    invariant(out.h1 >= 0, "condition rank exceeds the scheme degree");
    return out;
}

std::vector<Placement> generic_placements(size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> coord(-40, 40);
    std::uniform_int_distribution<long> dn(1, 7);
    std::vector<Placement> pts;
    auto collinear = [](const Placement& a, const Placement& b, const Placement& c) {
        return (b.x0 - a.x0) * (c.y0 - a.y0) == (b.y0 - a.y0) * (c.x0 - a.x0);
    };
    while (pts.size() < n) {
        Placement p{Rat(coord(rng), dn(rng)), Rat(coord(rng), dn(rng))};
        bool ok = true;
        for (auto& q : pts)
            if (q.x0 == p.x0 && q.y0 == p.y0) ok = false;
        for (size_t i = 0; ok && i < pts.size(); ++i)
            for (size_t j = i + 1; ok && j < pts.size(); ++j)
                if (collinear(pts[i], pts[j], p)) ok = false;
        if (ok) pts.push_back(p);
    }
    return pts;
}

ExactSequenceReport exact_sequence_check(const GSScheme& x, Line l, long d, unsigned seed) {
    require(d >= 2, "need degree at least 2 to restrict");
    ExactSequenceReport rep;
    Placement origin{Rat(0), Rat(0)};
    auto hx = h0_h1({{x, origin}}, d);
    rep.h0_x = hx.h0;
    rep.h1_x = hx.h1;
    GSScheme red = reduce(x, l, seed);
    auto hr = h0_h1({{red, origin}}, d - 1);
    rep.h0_red = hr.h0;
    rep.h1_red = hr.h1;
    rep.on_line_deg = intersect_line(x, l).degree;
    Int line_free = Int(d + 1) - rep.on_line_deg; // sections of O(d) on the line left
    rep.h0_line = line_free > 0 ? line_free : Int(0);
    rep.h1_line = line_free < 0 ? -line_free : Int(0);
    bool premise = rep.h1_red == 0 && rep.h1_line == 0;
    rep.implication_holds = !premise || rep.h1_x == 0;
    rep.bookkeeping_holds = rep.h0_x >= rep.h0_red + line_free;
    rep.equality_under_vanishing = !premise || rep.h0_x == rep.h0_red + rep.h0_line;
    return rep;
}

Int curve_branch_intersection(const CurvePoly& f, const FractionalSeries& xi) {
    PowerSeries X = PowerSeries::monomial(xi.den, 1), Y;
    for (auto& [e, v] : xi.terms) Y.c[e] = v;
    long dmax = 0;
    for (auto& [ij, v] : f) dmax = std::max(dmax, std::max(ij.first, ij.second));
    std::vector<PowerSeries> Xp(dmax + 1), Yp(dmax + 1);
    Xp[0] = Yp[0] = PowerSeries::monomial(0, 1);
    for (long k = 1; k <= dmax; ++k) {
        Xp[k] = Xp[k - 1] * X;
        Yp[k] = Yp[k - 1] * Y;
    }
    PowerSeries s;
    for (auto& [ij, v] : f)
        if (v != 0) s = s + Xp[ij.first] * Yp[ij.second] * PowerSeries::monomial(0, v);
    auto o = s.ord();
    if (!o) return Int(-1); // the branch divides f: infinite intersection
    return Int(*o);
}

bool verify_realization(const CurvePoly& f, const GSScheme& y) {
    long mt_f = -1;
    for (auto& [ij, v] : f) {
        if (v == 0) continue;
        long t = ij.first + ij.second;
        if (mt_f < 0 || t < mt_f) mt_f = t;
    }
    require(mt_f >= 0, "zero polynomial");
    if (mt_f != y.mt) return false;
    for (size_t i = 0; i < y.branches.size(); ++i) {
        Int bound = 0;
        for (int nid : y.tree.branch_chain.at((long)i)) {
            const TreeNode& q = y.tree.node(nid);
            if (q.marked) bound += Int(q.m) * q.branch_mult.at((long)i);
        }
        Int inter = curve_branch_intersection(f, y.branches[i].xi);
        if (inter >= 0 && inter <= bound) return false;
    }
    return true;
}

NewtonDiagram essential_newton_part(const CurvePoly& f) {
    NewtonDiagram nd;
    // Pareto-minimal support points, then the lower convex chain toward the origin
    std::map<long, long> minj; // i -> min j
    for (auto& [ij, v] : f)
        if (v != 0) {
            auto it = minj.find(ij.first);
            if (it == minj.end() || ij.second < it->second) minj[ij.first] = ij.second;
        }
    std::vector<std::pair<long, long>> pts;
    long best = std::numeric_limits<long>::max();
    for (auto& [i, j] : minj) // i ascending; keep strictly dropping j
        if (j < best) {
            pts.emplace_back(i, j);
            best = j;
        }
    std::vector<std::pair<long, long>> hull;
    for (auto& p : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            // keep strictly convex turns (slopes increasing toward the i-axis)
            Int cross = Int(b.first - a.first) * (p.second - a.second) -
                        Int(b.second - a.second) * (p.first - a.first);
            if (cross <= 0) hull.pop_back();
            else break;
        }
        hull.push_back(p);
    }
    // all integral points on the chain
    for (size_t k = 0; k + 1 < hull.size(); ++k) {
        long dx = hull[k + 1].first - hull[k].first, dy = hull[k + 1].second - hull[k].second;
        long g = gcd_l(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
        for (long s = 0; s < g; ++s)
            nd.gamma.emplace_back(hull[k].first + s * dx / g, hull[k].second + s * dy / g);
    }
    if (!hull.empty()) nd.gamma.push_back(hull.back());

    for (auto& p : nd.gamma)
        if (p.first > 0 && p.second > 0) nd.essential.push_back(p);
    if (!nd.gamma.empty()) {
        auto right = nd.gamma.back(); // maximal i, minimal j
        if (right.second == 0) {
            bool excluded = false;
            if (hull.size() >= 2) {
                auto& a = hull[hull.size() - 2];
                long dx = right.first - a.first, dy = right.second - a.second;
                long g = gcd_l(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
                excluded = (-dy / g) == 1; // the edge steps through height 1
            }
            if (!excluded) nd.essential.push_back(right);
        }
        auto left = nd.gamma.front();
        if (left.first == 0) {
            bool excluded = false;
            if (hull.size() >= 2) {
                auto& a = hull[1];
                long dx = a.first - left.first, dy = a.second - left.second;
                long g = gcd_l(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
                excluded = (dx / g) == 1; // the edge steps through width 1
            }
            if (!excluded) nd.essential.push_back(left);
        }
    }
    std::sort(nd.essential.begin(), nd.essential.end());
    nd.essential.erase(std::unique(nd.essential.begin(), nd.essential.end()),
                       nd.essential.end());
    return nd;
}

} // namespace plcs
