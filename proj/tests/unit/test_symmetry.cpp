#include <doctest.h>

#include "pacert/errors.hpp"
#include "pacert/symmetry.hpp"

#include <json.hpp>

using namespace pacert;

namespace {

const LedgerEntry& entry(const HypothesisLedger& L, const std::string& prefix) {
    for (const auto& e : L.entries)
        if (e.name.rfind(prefix, 0) == 0) return e;
    FAIL("no ledger entry " << prefix);
    throw std::logic_error("unreachable");
}

} // namespace

TEST_CASE("standard configurations are obstructed") {
    for (auto [r, g, k] : {std::tuple{2, 4, 1}, std::tuple{3, 5, 1}, std::tuple{2, 6, 3}, std::tuple{4, 6, 2}}) {
        ObstructionCertificate c = obstruction_check(build_chain(r, g, k));
        CHECK(c.conclusion == Conclusion::obstructed);
        CHECK(c.automorphism_count == 2);
        REQUIRE(c.involution);
        CHECK(c.delta_moved);
        CHECK(c.fixes_marked_vertex);
        CHECK_FALSE(c.assumptions.empty());
    }
}

TEST_CASE("obstruction check is deterministic") {
    ChainConfig cfg = build_chain(2, 4, 1);
    CHECK(certificate_json(obstruction_check(cfg)) == certificate_json(obstruction_check(cfg)));
}

TEST_CASE("rho-invariant arc gives not_obstructed") {
    RibbonGraph g = build_figure1();
    ObstructionCertificate c = obstruction_check(build_chain(2, 4, 1));
    REQUIRE(c.involution);
    auto fixed = involution_invariant_arc(g, *c.involution);
    REQUIRE(fixed);
    ObstructionCertificate d = obstruction_check(build_chain(2, 4, 1), g, *fixed);
    CHECK(d.conclusion == Conclusion::not_obstructed);
    CHECK_FALSE(d.delta_moved);
}

TEST_CASE("rigid piece is obstructed") {
    // the Figure 1 pair with one more a-strand through v1 and v2 breaks rho
    RibbonGraph g = build_genus4_model(1);
    g.marked_arcs.clear();
    g.marked_arcs.push_back({g.find_edge("beta2"), +1});
    ObstructionCertificate c = obstruction_check(build_chain(2, 4, 1), g);
    CHECK(c.automorphism_count == 1);
    CHECK_FALSE(c.involution);
    CHECK(c.conclusion == Conclusion::obstructed);
}

TEST_CASE("ledger in the tail") {
    ChainConfig cfg = build_chain(2, 4, 1);
    SweepResult s = sweep(cfg, 1, 10);
    HypothesisLedger L = hypothesis_ledger(cfg, family_word(cfg, 10), s.rows.back(), s.onset);
    CHECK(L.all_checks_pass());
    CHECK_FALSE(L.any_failed());
    CHECK_FALSE(L.any_unobserved());
    CHECK(entry(L, "stretch factor degree").status == LedgerStatus::pass);
    CHECK(entry(L, "some consecutive pair").status == LedgerStatus::pass);
    int assumptions = 0;
    for (const auto& e : L.entries) assumptions += e.status == LedgerStatus::assumption;
    CHECK(assumptions >= 3);
}

TEST_CASE("ledger below the onset") {
    ChainConfig cfg = build_chain(2, 4, 1);
    SweepRow row;
    row.m = 1;
    row.primitive = true;
    row.degree = 2;
    HypothesisLedger L = hypothesis_ledger(cfg, family_word(cfg, 1), row, 3L);
    CHECK(entry(L, "stretch factor degree").status == LedgerStatus::not_yet_observed);
    CHECK(L.any_unobserved());
    HypothesisLedger past = hypothesis_ledger(cfg, family_word(cfg, 5), SweepRow{5, true, 2, "", "", false, false, {}}, 3L);
    CHECK(entry(past, "stretch factor degree").status == LedgerStatus::fail);
}

TEST_CASE("ledger with the chain edge removed") {
    ChainConfig chain = build_chain(2, 4, 2);
    IntMatrix N = chain.N;
    N(1, 0) = 0;  // i(a2, b1)
    ChainConfig cut = custom_config(chain.A, chain.B, N);
    SweepRow row{10, true, 4, "", "", true, false, {}};
    HypothesisLedger L = hypothesis_ledger(cut, family_word(chain, 10), row, 1L);
    CHECK(entry(L, "some consecutive pair").status == LedgerStatus::fail);
    CHECK(L.any_failed());
}

TEST_CASE("certificate round trip") {
    ChainConfig cfg = build_chain(3, 5, 1);
    SweepResult s = sweep(cfg, 1, 8);
    HypothesisLedger L = hypothesis_ledger(cfg, family_word(cfg, 8), s.rows.back(), s.onset);
    std::string text = certificate_json(obstruction_check(cfg), L);
    CertificateCheck ok = verify_certificate(text);
    CHECK(ok.ok);
    CHECK(ok.recomputed == Conclusion::obstructed);

    auto j = nlohmann::json::parse(text);
    j["conclusion"] = "not_obstructed";
    CHECK_FALSE(verify_certificate(j.dump()).ok);
    CHECK_FALSE(verify_certificate("{").ok);
    CHECK(parse_conclusion(to_string(Conclusion::inconclusive)) == Conclusion::inconclusive);
}
