#include "plcs/certify.hpp"

#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace plcs {

namespace {

using nlohmann::json;

Rat pick_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(1, 19);
    std::uniform_int_distribution<long> den(1, 7);
    std::uniform_int_distribution<int> sgn(0, 1);
    Rat v(num(rng), den(rng));
    return sgn(rng) ? v : -v;
}

/* Coordinate shear y -> y + tau*x applied to every branch. */
GSScheme shear(const GSScheme& x, const Rat& tau) {
    if (x.empty()) return x;
    std::vector<SchemeBranch> bs = x.branches;
    for (auto& b : bs) {
        Rat& c = b.xi.terms[b.xi.den];
        c += tau;
        if (c == 0) b.xi.terms.erase(b.xi.den);
    }
    return build_scheme_depths(std::move(bs));
}

struct Continuation {
    int node = -1; // the first marked point past the on-L chain
    bool satellite = false;
    long m = 0;    // total multiplicity of the germ there
};

/* The marked point continuing some branch past the endpoint of the on-L chain;
   free points are preferred, ties broken by node id. */
std::optional<Continuation> find_continuation(const GSScheme& x, const std::vector<int>& chain) {
    if (chain.empty()) return std::nullopt;
    int zs = chain.back();
    std::set<int> frees, sats;
    for (auto& [bid, ids] : x.tree.branch_chain) {
        auto mb = x.tree.marked_branch_chain(bid);
        for (size_t k = 0; k + 1 < mb.size(); ++k)
            if (mb[k] == zs) (x.tree.node(mb[k + 1]).satellite ? sats : frees).insert(mb[k + 1]);
    }
    if (frees.empty() && sats.empty()) return std::nullopt;
    Continuation c;
    c.satellite = frees.empty();
    c.node = c.satellite ? *sats.begin() : *frees.begin();
    c.m = x.tree.node(c.node).m;
    return c;
}

/* Moves one free marked point onto the line by coefficient surgery on every
   branch through it: drop the shared deviation term, ensure the next on-line
   step with a fresh shared coefficient where missing. */
GSScheme specialize_point(const GSScheme& x, int znext, const Rat& g, Int& new_dl) {
    const TreeNode& nd = x.tree.node(znext);
    std::vector<SchemeBranch> bs = x.branches;
    long s = -1;
    Rat c;
    bool first = true;
    for (auto& [bid, bm] : nd.branch_mult) {
        FractionalSeries& xi = bs[(size_t)bid].xi;
        require(!xi.terms.empty(), "a branch through an off-line point cannot lie on the line");
        long n0 = xi.terms.begin()->first;
        Rat e1(n0, xi.den);
        if (den(e1) != 1)
            throw MNotAdmissible("free continuation requires an integer deviation exponent");
        long ss = (long)num(e1);
        Rat cc = xi.terms.begin()->second;
        if (first) {
            s = ss;
            c = cc;
            first = false;
        } else if (ss != s || cc != c) {
            throw MNotAdmissible("branches through the moved point must share its coordinate");
        }
        xi.terms.erase(n0);
        if (!xi.terms.count(n0 + bm)) xi.terms[n0 + bm] = g;
        long gg = xi.den;
        for (auto& [e, v] : xi.terms) gg = gcd_l(gg, e);
        if (gg > 1) {
            std::map<long, Rat> t2;
            for (auto& [e, v] : xi.terms) t2[e / gg] = v;
            xi = FractionalSeries(xi.den / gg, std::move(t2));
        }
    }
    require(!first, "no branch passes through the chosen point");
    GSScheme y = build_scheme_depths(std::move(bs));
    if (y.deg != x.deg || y.mt != x.mt || y.mt_s != x.mt_s ||
        y.discrete_signature() != x.discrete_signature())
        throw MNotAdmissible("point specialization is not equisingular for this realization");
    new_dl = intersect_line(y, Line::Y).degree;
    Int old_dl = intersect_line(x, Line::Y).degree;
    if (new_dl != old_dl + nd.m)
        throw MNotAdmissible("specialization must add exactly the moved multiplicity on the line");
    return y;
}

/* Sum over branches through the endpoint of the on-L chain of their multiplicity
   at the preceding chain point. */
long endpoint_drop_mult(const GSScheme& x, const std::vector<int>& chain) {
    if (chain.size() < 2) return x.mt;
    const TreeNode& q_end = x.tree.node(chain.back());
    const TreeNode& q_prev = x.tree.node(chain[chain.size() - 2]);
    long total = 0;
    for (auto& [bid, bm] : q_end.branch_mult) {
        auto it = q_prev.branch_mult.find(bid);
        invariant(it != q_prev.branch_mult.end(), "through branch missing at the predecessor");
        total += it->second;
    }
    return total;
}

void block_bookkeeping(const std::vector<long>& m_primes, const std::vector<long>& s_counts,
                       std::vector<long>& lambda, std::vector<long>& n_counts) {
    lambda.clear();
    n_counts.clear();
    for (size_t j = 0; j + 1 < m_primes.size(); ++j)
        if (m_primes[j + 1] < m_primes[j]) lambda.push_back((long)j + 1);
    std::vector<long> bounds;
    bounds.push_back(0);
    for (long j : lambda) bounds.push_back(j);
    bounds.push_back((long)s_counts.size());
    for (size_t k = 0; k + 1 < bounds.size(); ++k) {
        long nsum = 0;
        for (long i = bounds[k] + 1; i <= bounds[k + 1]; ++i) nsum += s_counts[(size_t)i - 1];
        n_counts.push_back(nsum);
    }
}

struct Engine {
    bool smooth_class;
    CertMode mode;
    unsigned base_seed;
    long kf;
    Quad A, B;
    std::mt19937 rng;
    bool guaranteed = true;
    bool top_frozen = false;
    Certificate cert;
    GSScheme cur;
    long cur_d = 0;

    struct Halt {};

    Engine(bool smooth, CertMode md, unsigned seed)
        : smooth_class(smooth),
          mode(md),
          base_seed(seed),
          kf(smooth ? 2 : 85),
          A(smooth ? VanishingConstants::alpha() : VanishingConstants::alpha0()),
          B(smooth ? VanishingConstants::beta() : VanishingConstants::beta0()),
          rng(seed) {}

    Quad q(const Int& v) const { return Quad::rational(Rat(v), kf); }
    Quad q(long v) const { return Quad::rational(Rat(v), kf); }

    long mtt(const GSScheme& x) const { return smooth_class ? x.mt : x.mt + x.mt_s; }

    void fail(const std::string& why) {
        if (guaranteed) throw PaperInvariantViolation(why);
        cert.status = CertStatus::Failed;
        cert.reason = why;
        throw Halt{};
    }
    void check(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }

    CertSnapshot snap() const {
        return {cur.deg, cur.mt, cur.mt_s, intersect_line(cur, Line::Y).degree, cur_d};
    }
    void push(CertStep st) {
        st.after = snap();
        cert.steps.push_back(std::move(st));
    }
    void freeze_top() {
        if (!top_frozen) {
            cert.top = cur.branches;
            top_frozen = true;
        }
    }

    Rat choose_tau() const {
        std::set<Rat> forbidden{Rat(0)};
        for (auto& b : cur.branches) {
            auto it = b.xi.terms.find(b.xi.den);
            if (it != b.xi.terms.end()) forbidden.insert(-it->second);
        }
        std::mt19937 r2(base_seed ^ 0x9e3779b9u);
        for (int i = 0; i < 64; ++i) {
            Rat t = pick_rational(r2);
            if (!forbidden.count(t)) return t;
        }
        for (long v = 1;; ++v)
            if (!forbidden.count(Rat(v))) return Rat(v);
    }

    unsigned next_seed(unsigned salt) const {
        return base_seed * 1000003u + (unsigned)cert.steps.size() * 97u + salt;
    }

    void do_reduce() {
        freeze_top();
        unsigned sd = next_seed(1);
        GSScheme child = reduce(cur, Line::Y, sd);
        long d1 = cur_d - 1;
        CertStep st;
        st.kind = CertStep::Reduce;
        st.seed = sd;
        if (!child.empty()) {
            check(d1 >= 1, "degree exhausted before the scheme");
            Quad l1 = q(child.deg), r1 = B * q(d1 - mtt(child)).square();
            Quad l2 = q(intersect_line(child, Line::Y).degree);
            Quad r2 = q(d1) - A * q(child.deg) / q(d1);
            st.witnesses = {{"child-degree-bound", l1, r1, false, l1 <= r1},
                            {"child-line-bound", l2, r2, false, l2 <= r2}};
            if (guaranteed && (!st.witnesses[0].ok || !st.witnesses[1].ok))
                throw PaperInvariantViolation("reduction descent bounds failed");
        }
        cur = std::move(child);
        cur_d = d1;
        push(std::move(st));
    }

    void do_specialize(const Continuation& c, const std::vector<int>& chain) {
        GSScheme y;
        Int ndl = 0;
        Rat g;
        std::string err;
        bool done = false;
        for (int attempt = 0; attempt < 8 && !done; ++attempt) {
            g = pick_rational(rng);
            try {
                y = specialize_point(cur, c.node, g, ndl);
                done = true;
            } catch (const MNotAdmissible& e) {
                err = e.what();
            }
        }
        check(done, "specialization failed: " + err);
        CertStep st;
        st.kind = CertStep::Specialize;
        st.node_depth = (long)chain.size();
        st.m_node = c.m;
        st.g = g;
        st.new_deg_on_l = ndl;
        cur = std::move(y);
        push(std::move(st));
    }

    void do_extend_block(long mp) {
        freeze_top();
        long d0 = cur_d;
        Int deg0 = cur.deg;
        long mts0 = cur.mt + cur.mt_s;
        check(mp >= 2, "block multiplicity must come from singular branches");
        check(d0 - 2 * mp >= 1, "block degree budget exhausted");
        Quad thr = q(d0 - 2 * mp) - A * q(deg0) / q(d0 - mp);
        CertStep st;
        st.kind = CertStep::ExtendBlock;
        st.m_prime = mp;
        for (long j = 1; j <= mp; ++j) {
            if (cur.empty()) break;
            auto chain = cur.tree.marked_marker_chain(MARKER_Y);
            long s_now = (long)chain.size();
            long mpj = endpoint_drop_mult(cur, chain);
            st.m_primes.push_back(mpj);
            long sj = 0;
            Int dl = intersect_line(cur, Line::Y).degree;
            while (q(dl) < thr) {
                check(s_now >= 2 && mpj >= 1, "extension impossible at the chain endpoint");
                GSScheme ext = extend(cur, s_now - 1);
                Int dl2 = intersect_line(ext, Line::Y).degree;
                check(dl2 == dl + mpj, "extension must add the drop multiplicity on the line");
                cur = std::move(ext);
                dl = dl2;
                ++sj;
                ++s_now;
            }
            if (j == 1) check(sj >= 1, "the first block step must extend at least once");
            st.s_counts.push_back(sj);
            unsigned sd = next_seed(11u * (unsigned)j);
            st.reduce_seeds.push_back(sd);
            cur = reduce(cur, Line::Y, sd);
            cur_d -= 1;
        }
        if (!st.m_primes.empty())
            check(st.m_primes[0] == mp, "the first block multiplicity must be m'");
        for (size_t j = 0; j + 1 < st.m_primes.size(); ++j)
            check(st.m_primes[j + 1] == st.m_primes[j] || st.m_primes[j + 1] == st.m_primes[j] - 1,
                  "block multiplicities must be non-increasing with unit drops");
        block_bookkeeping(st.m_primes, st.s_counts, st.lambda_set, st.n_counts);
        st.ell = (long)st.lambda_set.size();
        st.ell_tilde = mts0 - (cur.mt + cur.mt_s);
        check(st.ell == 0 ? st.ell_tilde >= 0 : st.ell_tilde >= st.ell + 1,
              "the block must lose more multiplicity than it has drops");
        Quad l1 = q(cur.deg), r1 = q(deg0);
        Quad r2 = B * q(d0 - mp + st.ell_tilde - mts0).square();
        Quad c1 = (Quad::rational(Rat(1), kf) - A * B) / (B * Rat(4));
        Quad l3 = q(mp - st.ell_tilde) * q(d0 - 2 * mp);
        Quad r3 = c1 * q(mp - 1 - st.ell) * q(d0 - 2 * mp);
        st.witnesses = {{"block-degree-bound", l1, r1, false, l1 <= r1},
                        {"block-shifted-bound", l1, r2, false, l1 <= r2},
                        {"block-constant-bound", l3, r3, false, l3 <= r3}};
        if (guaranteed &&
            (!st.witnesses[0].ok || !st.witnesses[1].ok || !st.witnesses[2].ok))
            throw PaperInvariantViolation("block exit bounds failed");
        push(std::move(st));
    }

    Certificate run(const GSScheme& x, long d) {
        cert.initial = x.branches;
        cert.d = d;
        cert.smooth_class = smooth_class;
        cert.mode = mode;
        require(d >= 1, "positive degree required");
        long def = d - mtt(x);
        bool entry = x.empty() ||
                     (def >= 1 && (smooth_class ? q(x.deg) < B * q(def).square()
                                                : q(x.deg) <= B * q(def).square()));
        if (!entry && mode == CertMode::Strict) {
            cert.status = CertStatus::Refused;
            cert.reason = "EntryConditionFails";
            return cert;
        }
        guaranteed = entry;
        cur = x;
        cur_d = d;
        try {
            if (!cur.empty()) {
                Rat tau = choose_tau();
                GSScheme sheared = shear(cur, tau);
                check(sheared.deg == cur.deg && sheared.mt == cur.mt &&
                          sheared.mt_s == cur.mt_s &&
                          sheared.discrete_signature() == cur.discrete_signature(),
                      "normalization broke equisingularity");
                cur = std::move(sheared);
                check(intersect_line(cur, Line::Y).degree == Int(cur.mt),
                      "normalization must leave only the centre on the line");
                CertStep st;
                st.kind = CertStep::Normalize;
                st.tau = tau;
                push(std::move(st));
            }
            long guard = 10 * d + 64;
            while (true) {
                invariant(guard-- > 0, "certification loop exceeded its budget");
                if (cur.empty()) {
                    freeze_top();
                    CertStep st;
                    st.kind = CertStep::EmptyBase;
                    push(std::move(st));
                    cert.status = CertStatus::Success;
                    break;
                }
                check(cur_d >= 1, "degree exhausted before the scheme");
                long defc = cur_d - mtt(cur);
                if (guaranteed && !(defc >= 1 && q(cur.deg) <= B * q(defc).square()))
                    throw PaperInvariantViolation("descent lost the class degree bound");
                if (cur.tree.marked_count() == 1 && cur.mt < cur_d) {
                    freeze_top();
                    CertStep st;
                    st.kind = CertStep::OrdinaryBase;
                    push(std::move(st));
                    cert.status = CertStatus::Success;
                    break;
                }
                auto chain = cur.tree.marked_marker_chain(MARKER_Y);
                Int dl = intersect_line(cur, Line::Y).degree;
                Quad T = q(cur_d) - A * q(cur.deg) / q(cur_d);
                if (guaranteed && !(q(dl) <= T))
                    throw PaperInvariantViolation("descent lost the line intersection bound");
                auto cont = find_continuation(cur, chain);
                if (!cont) {
                    do_reduce();
                    continue;
                }
                if (!cont->satellite) {
                    if (q(dl + cont->m) > T)
                        do_reduce();
                    else
                        do_specialize(*cont, chain);
                    continue;
                }
                if (smooth_class)
                    throw PaperInvariantViolation(
                        "singular continuation inside the smooth-branch class");
                long m_q = cur.tree.node(chain.back()).m;
                if (q(dl) >= T - q(m_q)) {
                    do_reduce();
                    continue;
                }
                long mp = endpoint_drop_mult(cur, chain);
                if (cur_d - mp < 1 ||
                    q(dl) >= q(cur_d - 2 * mp) - A * q(cur.deg) / q(cur_d - mp)) {
                    do_reduce();
                    continue;
                }
                do_extend_block(mp);
            }
        } catch (const Halt&) {
        }
        return cert;
    }
};

std::vector<IneqWitness> reduce_witnesses(const GSScheme& child, long d1, bool smooth_class,
                                          const Quad& A, const Quad& B, long kf) {
    if (child.empty()) return {};
    auto q = [&](const Int& v) { return Quad::rational(Rat(v), kf); };
    long mtt = smooth_class ? child.mt : child.mt + child.mt_s;
    Quad l1 = q(child.deg), r1 = B * q(Int(d1 - mtt)).square();
    Quad l2 = q(intersect_line(child, Line::Y).degree);
    Quad r2 = q(Int(d1)) - A * q(child.deg) / q(Int(d1));
    return {{"child-degree-bound", l1, r1, false, l1 <= r1},
            {"child-line-bound", l2, r2, false, l2 <= r2}};
}

} // namespace

Certificate certify_gs1(const GSScheme& x, long d, CertMode mode, unsigned seed) {
    require(x.in_GS1, "the smooth-branch procedure needs a scheme with smooth branches");
    Engine e(true, mode, seed);
    return e.run(x, d);
}

Certificate certify_gs(const GSScheme& x, long d, CertMode mode, unsigned seed) {
    Engine e(false, mode, seed);
    return e.run(x, d);
}

ReplayReport replay(const Certificate& c) {
    GSScheme cur = c.initial.empty() ? GSScheme{} : build_scheme_depths(c.initial);
    long cur_d = c.d;
    long kf = c.smooth_class ? 2 : 85;
    Quad A = c.smooth_class ? VanishingConstants::alpha() : VanishingConstants::alpha0();
    Quad B = c.smooth_class ? VanishingConstants::beta() : VanishingConstants::beta0();
    GSScheme top;
    bool top_frozen = false;
    auto freeze = [&]() {
        if (!top_frozen) {
            top = cur;
            top_frozen = true;
        }
    };
    size_t idx = 0;
    auto mismatch = [&](const std::string& why) -> void {
        throw ReplayMismatch("step " + std::to_string(idx + 1) + ": " + why);
    };
    for (auto& st : c.steps) {
        switch (st.kind) {
        case CertStep::Normalize:
            cur = shear(cur, st.tau);
            break;
        case CertStep::Reduce: {
            freeze();
            GSScheme child = reduce(cur, Line::Y, st.seed);
            auto ws = reduce_witnesses(child, cur_d - 1, c.smooth_class, A, B, kf);
            if (ws.size() != st.witnesses.size()) mismatch("witness count diverged");
            for (size_t i = 0; i < ws.size(); ++i)
                if (ws[i].label != st.witnesses[i].label || !(ws[i].lhs == st.witnesses[i].lhs) ||
                    !(ws[i].rhs == st.witnesses[i].rhs) || ws[i].ok != st.witnesses[i].ok)
                    mismatch("witness " + st.witnesses[i].label + " diverged");
            cur = std::move(child);
            cur_d -= 1;
            break;
        }
        case CertStep::Specialize: {
            auto chain = cur.tree.marked_marker_chain(MARKER_Y);
            auto cont = find_continuation(cur, chain);
            if (!cont || cont->satellite) mismatch("no free continuation to specialize");
            if ((long)chain.size() != st.node_depth || cont->m != st.m_node)
                mismatch("specialized point diverged");
            Int ndl = 0;
            try {
                cur = specialize_point(cur, cont->node, st.g, ndl);
            } catch (const MNotAdmissible& e) {
                mismatch(e.what());
            }
            if (ndl != st.new_deg_on_l) mismatch("line intersection after specialization diverged");
            break;
        }
        case CertStep::ExtendBlock: {
            freeze();
            if (st.s_counts.size() != st.m_primes.size() ||
                st.reduce_seeds.size() != st.s_counts.size())
                mismatch("block shape invalid");
            long mts0 = cur.mt + cur.mt_s;
            for (size_t j = 0; j < st.s_counts.size(); ++j) {
                auto chain = cur.tree.marked_marker_chain(MARKER_Y);
                long s_now = (long)chain.size();
                if (endpoint_drop_mult(cur, chain) != st.m_primes[j])
                    mismatch("block multiplicity diverged");
                for (long t = 0; t < st.s_counts[j]; ++t) {
                    cur = extend(cur, s_now - 1);
                    ++s_now;
                }
                cur = reduce(cur, Line::Y, st.reduce_seeds[j]);
                cur_d -= 1;
            }
            std::vector<long> lambda, n_counts;
            block_bookkeeping(st.m_primes, st.s_counts, lambda, n_counts);
            if (lambda != st.lambda_set || n_counts != st.n_counts ||
                (long)lambda.size() != st.ell)
                mismatch("block drop bookkeeping diverged");
            if (mts0 - (cur.mt + cur.mt_s) != st.ell_tilde)
                mismatch("block multiplicity loss diverged");
            break;
        }
        case CertStep::OrdinaryBase:
            freeze();
            if (cur.empty() || cur.tree.marked_count() != 1 || !(cur.mt < cur_d))
                mismatch("ordinary base conditions diverged");
            break;
        case CertStep::EmptyBase:
            freeze();
            if (!cur.empty()) mismatch("scheme not empty at the empty base");
            break;
        }
        CertSnapshot got{cur.deg, cur.mt, cur.mt_s, intersect_line(cur, Line::Y).degree, cur_d};
        if (!(got == st.after)) mismatch("snapshot diverged");
        ++idx;
    }
    if (c.status == CertStatus::Success) {
        freeze();
        GSScheme declared = c.top.empty() ? GSScheme{} : build_scheme_depths(c.top);
        if (declared.deg != top.deg ||
            declared.discrete_signature() != top.discrete_signature())
            throw ReplayMismatch("declared top realization diverges from the replayed one");
    }
    return {std::move(cur), std::move(top), idx};
}

/* ---- serialization ---- */

namespace {

std::string rat_str(const Rat& v) {
    if (den(v) == 1) return num(v).str();
    return num(v).str() + "/" + den(v).str();
}

Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

json quad_json(const Quad& x) {
    return json{{"a", rat_str(x.a)}, {"b", rat_str(x.b)}, {"k", x.k}};
}

Quad quad_parse(const json& j) {
    return Quad(rat_parse(j.at("a").get<std::string>()), rat_parse(j.at("b").get<std::string>()),
                j.at("k").get<long>());
}

json branches_json(const std::vector<SchemeBranch>& bs) {
    json out = json::array();
    for (auto& b : bs) {
        json terms = json::array();
        for (auto& [e, v] : b.xi.terms) terms.push_back(json::array({e, rat_str(v)}));
        out.push_back(json{{"den", b.xi.den}, {"terms", terms}, {"depth", b.depth}});
    }
    return out;
}

std::vector<SchemeBranch> branches_parse(const json& j) {
    std::vector<SchemeBranch> out;
    for (auto& b : j) {
        std::map<long, Rat> terms;
        for (auto& t : b.at("terms"))
            terms[t.at(0).get<long>()] = rat_parse(t.at(1).get<std::string>());
        out.push_back({FractionalSeries(b.at("den").get<long>(), std::move(terms)),
                       b.at("depth").get<long>()});
    }
    return out;
}

json snapshot_json(const CertSnapshot& s) {
    return json{{"deg", s.deg.str()}, {"mt", s.mt},        {"mt_s", s.mt_s},
                {"on_l", s.deg_on_l.str()}, {"d", s.d}};
}

CertSnapshot snapshot_parse(const json& j) {
    return {Int(j.at("deg").get<std::string>()), j.at("mt").get<long>(),
            j.at("mt_s").get<long>(), Int(j.at("on_l").get<std::string>()),
            j.at("d").get<long>()};
}

json witnesses_json(const std::vector<IneqWitness>& ws) {
    json out = json::array();
    for (auto& w : ws)
        out.push_back(json{{"label", w.label},
                           {"lhs", quad_json(w.lhs)},
                           {"rhs", quad_json(w.rhs)},
                           {"strict", w.strict_less},
                           {"ok", w.ok}});
    return out;
}

std::vector<IneqWitness> witnesses_parse(const json& j) {
    std::vector<IneqWitness> out;
    for (auto& w : j)
        out.push_back({w.at("label").get<std::string>(), quad_parse(w.at("lhs")),
                       quad_parse(w.at("rhs")), w.at("strict").get<bool>(),
                       w.at("ok").get<bool>()});
    return out;
}

const char* kind_name(CertStep::Kind k) {
    switch (k) {
    case CertStep::Normalize: return "normalize";
    case CertStep::Reduce: return "reduce";
    case CertStep::Specialize: return "specialize";
    case CertStep::ExtendBlock: return "extend_block";
    case CertStep::OrdinaryBase: return "ordinary_base";
    case CertStep::EmptyBase: return "empty_base";
    }
    return "?";
}

CertStep::Kind kind_parse(const std::string& s) {
    if (s == "normalize") return CertStep::Normalize;
    if (s == "reduce") return CertStep::Reduce;
    if (s == "specialize") return CertStep::Specialize;
    if (s == "extend_block") return CertStep::ExtendBlock;
    if (s == "ordinary_base") return CertStep::OrdinaryBase;
    if (s == "empty_base") return CertStep::EmptyBase;
    throw InputError("unknown certificate step kind: " + s);
}

} // namespace

std::string certificate_to_jsonl(const Certificate& c) {
    std::ostringstream out;
    json header{{"kind", "header"},
                {"class", c.smooth_class ? "gs1" : "gs"},
                {"d", c.d},
                {"mode", c.mode == CertMode::Strict ? "strict" : "best_effort"},
                {"status", c.status == CertStatus::Success
                               ? "success"
                               : (c.status == CertStatus::Refused ? "refused" : "failed")},
                {"reason", c.reason},
                {"initial", branches_json(c.initial)},
                {"top", branches_json(c.top)}};
    out << header.dump() << "\n";
    for (auto& st : c.steps) {
        json j{{"kind", kind_name(st.kind)}, {"after", snapshot_json(st.after)}};
        switch (st.kind) {
        case CertStep::Normalize:
            j["tau"] = rat_str(st.tau);
            break;
        case CertStep::Reduce:
            j["seed"] = st.seed;
            j["witnesses"] = witnesses_json(st.witnesses);
            break;
        case CertStep::Specialize:
            j["s"] = st.node_depth;
            j["m"] = st.m_node;
            j["g"] = rat_str(st.g);
            j["new_on_l"] = st.new_deg_on_l.str();
            break;
        case CertStep::ExtendBlock:
            j["m_prime"] = st.m_prime;
            j["s_counts"] = st.s_counts;
            j["m_primes"] = st.m_primes;
            j["seeds"] = st.reduce_seeds;
            j["lambda"] = st.lambda_set;
            j["n_counts"] = st.n_counts;
            j["ell"] = st.ell;
            j["ell_tilde"] = st.ell_tilde;
            j["witnesses"] = witnesses_json(st.witnesses);
            break;
        default:
            break;
        }
        out << j.dump() << "\n";
    }
    return out.str();
}

Certificate certificate_from_jsonl(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Certificate c;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        if (!have_header) {
            require(j.at("kind").get<std::string>() == "header",
                    "certificate must start with a header line");
            c.smooth_class = j.at("class").get<std::string>() == "gs1";
            c.d = j.at("d").get<long>();
            c.mode = j.at("mode").get<std::string>() == "strict" ? CertMode::Strict
                                                                 : CertMode::BestEffort;
            std::string status = j.at("status").get<std::string>();
            c.status = status == "success"
                           ? CertStatus::Success
                           : (status == "refused" ? CertStatus::Refused : CertStatus::Failed);
            c.reason = j.at("reason").get<std::string>();
            c.initial = branches_parse(j.at("initial"));
            c.top = branches_parse(j.at("top"));
            have_header = true;
            continue;
        }
        CertStep st;
        st.kind = kind_parse(j.at("kind").get<std::string>());
        st.after = snapshot_parse(j.at("after"));
        switch (st.kind) {
        case CertStep::Normalize:
            st.tau = rat_parse(j.at("tau").get<std::string>());
            break;
        case CertStep::Reduce:
            st.seed = j.at("seed").get<unsigned>();
            st.witnesses = witnesses_parse(j.at("witnesses"));
            break;
        case CertStep::Specialize:
            st.node_depth = j.at("s").get<long>();
            st.m_node = j.at("m").get<long>();
            st.g = rat_parse(j.at("g").get<std::string>());
            st.new_deg_on_l = Int(j.at("new_on_l").get<std::string>());
            break;
        case CertStep::ExtendBlock:
            st.m_prime = j.at("m_prime").get<long>();
            st.s_counts = j.at("s_counts").get<std::vector<long>>();
            st.m_primes = j.at("m_primes").get<std::vector<long>>();
            st.reduce_seeds = j.at("seeds").get<std::vector<unsigned>>();
            st.lambda_set = j.at("lambda").get<std::vector<long>>();
            st.n_counts = j.at("n_counts").get<std::vector<long>>();
            st.ell = j.at("ell").get<long>();
            st.ell_tilde = j.at("ell_tilde").get<long>();
            st.witnesses = witnesses_parse(j.at("witnesses"));
            break;
        default:
            break;
        }
        c.steps.push_back(std::move(st));
    }
    require(have_header, "empty certificate text");
    return c;
}

} // namespace plcs
