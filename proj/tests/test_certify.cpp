#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "plcs/certify.hpp"
#include "plcs/oracle.hpp"

using namespace plcs;

static FractionalSeries fs(long den, std::initializer_list<std::pair<long, long>> terms) {
    std::map<long, Rat> t;
    for (auto& [e, v] : terms) t[e] = Rat(v);
    return FractionalSeries(den, std::move(t));
}

static GSScheme node_scheme() {
    return build_scheme({fs(1, {{1, 1}}), fs(1, {{1, -1}})}, {0, 0});
}

static GSScheme cusp_scheme() { return build_scheme({fs(2, {{3, 1}})}, {0}); }

TEST_CASE("constants are exact and match their decimal shadows") {
    Quad a = VanishingConstants::alpha(), b = VanishingConstants::beta();
    Quad a0 = VanishingConstants::alpha0(), b0 = VanishingConstants::beta0();
    CHECK(b0 * (a0 + Quad(8, 0, 85)) == Quad::rational(Rat(1), 85));
    CHECK(b == (a - Quad::rational(Rat(1), 2)) / (a + a.square()));
    // alpha0 is a root of x^2 - 31 x + 49
    CHECK(a0.square() - a0 * Rat(31) + Quad::rational(Rat(49), 85) == Quad::rational(Rat(0), 85));
    CHECK(quad_decimal(a, 4) == "2.4142");
    CHECK(quad_decimal(b, 5) == "0.17157");
    CHECK(quad_decimal(a0, 4) == "1.6706");
    CHECK(quad_decimal(b0, 5) == "0.10340");
}

TEST_CASE("node certificates") {
    auto node = node_scheme();
    // ordinary base without the entry bound
    auto c3 = certify_gs1(node, 3, CertMode::BestEffort);
    CHECK(c3.status == CertStatus::Success);
    REQUIRE(c3.steps.size() == 2);
    CHECK(c3.steps[0].kind == CertStep::Normalize);
    CHECK(c3.steps[1].kind == CertStep::OrdinaryBase);

    // strict entry holds at d = 7: 3 (3 + 2 sqrt 2) < 25
    auto c7 = certify_gs1(node, 7, CertMode::Strict);
    CHECK(c7.status == CertStatus::Success);
    CHECK(c7.steps.back().kind == CertStep::OrdinaryBase);

    // strict entry fails at d = 3: 3 >= beta (3-2)^2
    auto r = certify_gs1(node, 3, CertMode::Strict);
    CHECK(r.status == CertStatus::Refused);
    CHECK(r.reason == "EntryConditionFails");
    CHECK(r.steps.empty());

    auto rep = replay(c7);
    CHECK(rep.steps_checked == c7.steps.size());
    auto h = h0_h1({{rep.top, Placement{Rat(0), Rat(0)}}}, 7);
    CHECK(h.h1 == 0);
}

TEST_CASE("empty scheme certifies trivially") {
    auto c = certify_gs1(GSScheme{}, 4, CertMode::Strict);
    CHECK(c.status == CertStatus::Success);
    REQUIRE(c.steps.size() == 1);
    CHECK(c.steps[0].kind == CertStep::EmptyBase);
    CHECK(replay(c).terminal.empty());
}

TEST_CASE("ordinary multiple point in the smooth class") {
    std::vector<FractionalSeries> bs;
    for (long c = 1; c <= 4; ++c) bs.push_back(fs(1, {{1, c}}));
    auto x = build_scheme(bs, {0, 0, 0, 0}); // deg 10, mt 4
    auto cert = certify_gs1(x, 12, CertMode::Strict); // 10 < beta (12-4)^2
    CHECK(cert.status == CertStatus::Success);
    CHECK(cert.steps.back().kind == CertStep::OrdinaryBase);
    auto refused = certify_gs1(x, 7, CertMode::Strict); // 10 >= beta 9
    CHECK(refused.status == CertStatus::Refused);
}

TEST_CASE("tangential smooth pair descends by specialization and reduction") {
    auto tac = build_scheme({fs(1, {{2, 1}}), fs(1, {{2, -1}})}, {0, 0}); // deg 6
    auto c = certify_gs1(tac, 11, CertMode::Strict); // 6 < beta 81
    CHECK(c.status == CertStatus::Success);
    std::vector<CertStep::Kind> kinds;
    for (auto& st : c.steps) kinds.push_back(st.kind);
    // the second reduction strips the whole on-line chain at once
    CHECK(kinds == std::vector<CertStep::Kind>{CertStep::Normalize, CertStep::Specialize,
                                               CertStep::Reduce, CertStep::Reduce,
                                               CertStep::EmptyBase});
    CHECK(c.steps[1].m_node == 2);
    CHECK(c.steps[1].new_deg_on_l == 4);
    auto rep = replay(c);
    CHECK(rep.terminal.empty());
    auto h = h0_h1({{rep.top, Placement{Rat(0), Rat(0)}}}, 11);
    CHECK(h.h1 == 0);
}

TEST_CASE("cusp certification runs the extension block") {
    auto cusp = cusp_scheme();
    auto c = certify_gs(cusp, 20, CertMode::Strict); // 5 (alpha0+8) <= 256
    REQUIRE(c.status == CertStatus::Success);
    std::vector<CertStep::Kind> kinds;
    for (auto& st : c.steps) kinds.push_back(st.kind);
    REQUIRE(kinds == std::vector<CertStep::Kind>{CertStep::Normalize, CertStep::Specialize,
                                                 CertStep::ExtendBlock, CertStep::EmptyBase});
    const CertStep& blk = c.steps[2];
    CHECK(blk.m_prime == 2);
    CHECK(blk.s_counts == std::vector<long>{7, 7});
    CHECK(blk.m_primes == std::vector<long>{2, 1});
    CHECK(blk.lambda_set == std::vector<long>{1});
    CHECK(blk.n_counts == std::vector<long>{7, 7});
    CHECK(blk.ell == 1);
    CHECK(blk.ell_tilde == 4);
    CHECK(blk.after.deg == 0);
    CHECK(blk.after.d == 18);

    auto rep = replay(c);
    CHECK(rep.terminal.empty());
    CHECK(rep.top.deg == 5);
    auto h = h0_h1({{rep.top, Placement{Rat(0), Rat(0)}}}, 20);
    CHECK(h.h1 == 0);
}

TEST_CASE("cusp strict entry refusal and best-effort success at d = 8") {
    auto cusp = cusp_scheme();
    auto r = certify_gs(cusp, 8, CertMode::Strict); // 5 > beta0 16
    CHECK(r.status == CertStatus::Refused);
    CHECK(r.reason == "EntryConditionFails");

    auto c = certify_gs(cusp, 8, CertMode::BestEffort);
    CHECK(c.status == CertStatus::Success);
    auto rep = replay(c);
    CHECK(rep.terminal.empty());
    auto h = h0_h1({{rep.top, Placement{Rat(0), Rat(0)}}}, 8);
    CHECK(h.h1 == 0);
}

TEST_CASE("singular branch beyond the cusp") {
    auto e6 = build_scheme({fs(3, {{4, 1}})}, {0}); // deg 9, mt 3, mt_s 3
    auto c = certify_gs(e6, 30, CertMode::Strict);  // 9 <= beta0 (30-6)^2
    CHECK(c.status == CertStatus::Success);
    bool has_block = false;
    for (auto& st : c.steps) has_block = has_block || st.kind == CertStep::ExtendBlock;
    CHECK(has_block);
    auto rep = replay(c);
    CHECK(rep.steps_checked == c.steps.size());

    CHECK_THROWS_AS((void)certify_gs1(e6, 30, CertMode::Strict), InputError);
}

TEST_CASE("certificates replay after a serialization round trip") {
    auto c = certify_gs(cusp_scheme(), 20, CertMode::Strict);
    std::string text = certificate_to_jsonl(c);
    auto back = certificate_from_jsonl(text);
    CHECK(certificate_to_jsonl(back) == text);
    CHECK(replay(back).terminal.empty());

    // determinism for a fixed seed
    auto again = certify_gs(cusp_scheme(), 20, CertMode::Strict);
    CHECK(certificate_to_jsonl(again) == text);
}

TEST_CASE("tampered certificates are rejected on replay") {
    auto c = certify_gs(cusp_scheme(), 20, CertMode::Strict);

    auto tampered = c;
    for (auto& st : tampered.steps)
        if (st.kind == CertStep::ExtendBlock) st.s_counts[0] -= 1;
    CHECK_THROWS_AS((void)replay(tampered), ReplayMismatch);

    auto snap = c;
    snap.steps[1].after.deg += 1;
    CHECK_THROWS_AS((void)replay(snap), ReplayMismatch);

    auto wit = certify_gs1(build_scheme({fs(1, {{2, 1}}), fs(1, {{2, -1}})}, {0, 0}), 11,
                           CertMode::Strict);
    bool flipped = false;
    for (auto& st : wit.steps)
        for (auto& w : st.witnesses)
            if (!flipped) {
                w.lhs = w.lhs + Quad::rational(Rat(1), w.lhs.k);
                flipped = true;
            }
    REQUIRE(flipped);
    CHECK_THROWS_AS((void)replay(wit), ReplayMismatch);
}
