#include <doctest.h>
#include <stdexcept>

#include <json.hpp>

#include "domtree/lemma_audit.hpp"
#include "domtree/solver.hpp"

using namespace domtree;

TEST_CASE("the registry carries all six per-family claims") {
    const auto& reg = claims_registry();
    CHECK(reg.size() == 6);
    std::size_t ht = 0, st = 0;
    for (const auto& c : reg) {
        CHECK_FALSE(c.quote.empty());
        (c.family == Family::Hypertree ? ht : st) += 1;
    }
    CHECK(ht == 3);
    CHECK(st == 3);
}

TEST_CASE("claim bounds") {
    const auto& reg = claims_registry();
    auto find = [&](const std::string& id, Family f) -> const Claim& {
        for (const auto& c : reg)
            if (c.id == id && c.family == f) return c;
        throw std::logic_error("claim not found");
    };
    CHECK(find("dom-levels", Family::Hypertree).bound(3) == 4);
    CHECK(find("ld-level-n", Family::Hypertree).bound(2) == 2);
    CHECK(find("ltd-levels", Family::Hypertree).bound(2) == 3);
    CHECK(find("ltd-levels", Family::Hypertree).bound(3) == 6);
    CHECK(find("ltd-levels", Family::SiblingTree).bound(2) == 4);
}

TEST_CASE("the level-n lemma is refuted on HT(2) by {2,3,4}") {
    auto findings = audit("ld-level-n", {Family::Hypertree}, 2, 2);
    REQUIRE(findings.size() == 1);
    const Finding& f = findings[0];
    CHECK(f.status == FindingStatus::Refuted);
    REQUIRE(f.counterexample.has_value());
    CHECK(*f.counterexample == VertexSet{{2, 3, 4}});

    // the counterexample re-verifies: valid, minimum, and under the bound
    Graph g = generate(f.instance);
    CHECK(check(g, *f.counterexample, Variant::LocatingDominating).valid);
    CHECK(static_cast<int>(f.counterexample->size()) ==
          solve_minimum(g, Variant::LocatingDominating).value);
    CHECK(count_in_levels(g, *f.counterexample, {2}) < f.claimed_bound);
}

TEST_CASE("every refuted finding carries a verified counterexample") {
    for (const auto& f : audit("all", {Family::Hypertree, Family::SiblingTree}, 2, 3)) {
        if (f.status != FindingStatus::Refuted) continue;
        REQUIRE(f.counterexample.has_value());
        Graph g = generate(f.instance);
        const Claim* claim = nullptr;
        for (const auto& c : claims_registry())
            if (c.id == f.claim_id && c.family == f.instance.family) claim = &c;
        REQUIRE(claim);
        CHECK(check(g, *f.counterexample, claim->variant).valid);
        CHECK(static_cast<int>(f.counterexample->size()) ==
              solve_minimum(g, claim->variant).value);
        std::vector<int> levels = claim->last_level_only
                                      ? std::vector<int>{f.instance.levels}
                                      : std::vector<int>{f.instance.levels - 1,
                                                         f.instance.levels};
        CHECK(count_in_levels(g, *f.counterexample, levels) < f.claimed_bound);
    }
}

TEST_CASE("instances beyond oracle scale are skipped with their size") {
    auto findings = audit("dom-levels", {Family::Hypertree}, 4, 5);
    REQUIRE(findings.size() == 2);
    for (const auto& f : findings) {
        CHECK(f.status == FindingStatus::Skipped);
        CHECK(f.graph_size > kOracleCap);
        CHECK_FALSE(f.counterexample.has_value());
    }
}

TEST_CASE("audit output is deterministic and well-formed") {
    auto a = audit("all", {Family::Hypertree, Family::SiblingTree}, 2, 3);
    auto b = audit("all", {Family::Hypertree, Family::SiblingTree}, 2, 3);
    CHECK(findings_to_json(a) == findings_to_json(b));
    CHECK(a.size() == 12);  // 6 claims x 2 levels

    auto parsed = nlohmann::json::parse(findings_to_json(a));
    REQUIRE(parsed.is_array());
    for (const auto& f : parsed) {
        CHECK(f.contains("claim_id"));
        CHECK(f.contains("quote"));
        CHECK(f.contains("family"));
        CHECK(f.contains("n"));
        CHECK(f.contains("status"));
        CHECK(f.contains("counterexample"));
    }

    std::string md = findings_to_markdown(a);
    CHECK(md.find("ld-level-n") != std::string::npos);
    CHECK(md.find("counterexample: {2, 3, 4}") != std::string::npos);
}

TEST_CASE("unknown claims and bad ranges are rejected") {
    CHECK_THROWS_AS(audit("no-such-claim", {Family::Hypertree}, 2, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(audit("dom-levels", {Family::Hypertree}, 3, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(audit("dom-levels", {Family::Hypertree}, 0, 2),
                    std::invalid_argument);
}
