#include <doctest.h>

#include <algorithm>
#include <set>

#include "domtree/generators.hpp"
#include "domtree/io.hpp"

using namespace domtree;

TEST_CASE("family generation matches the defining counts") {
    Graph ht3 = generate({Family::Hypertree, 3});
    CHECK(ht3.vertex_count() == 15);
    CHECK(ht3.edge_count() == 21);

    Graph st3 = generate({Family::SiblingTree, 3});
    CHECK(st3.has_edge(4, 5));
    CHECK(st3.has_edge(6, 7));
    CHECK_FALSE(st3.has_edge(4, 6));

    Graph ht1 = generate({Family::Hypertree, 1});
    Graph st1 = generate({Family::SiblingTree, 1});
    CHECK(ht1.edges() == st1.edges());
    CHECK(ht1.edges() == std::vector<std::pair<Label, Label>>{{1, 2}, {1, 3}, {2, 3}});

    for (int n = 1; n <= 8; ++n) {
        for (Family f : {Family::Hypertree, Family::SiblingTree}) {
            Graph g = generate({f, n});
            CHECK(g.vertex_count() == (std::size_t{1} << (n + 1)) - 1);
            CHECK(g.edge_count() == 3 * ((std::size_t{1} << n) - 1));
        }
        Graph cbt = generate({Family::CompleteBinaryTree, n});
        CHECK(cbt.edge_count() == (std::size_t{1} << (n + 1)) - 2);
    }
}

TEST_CASE("single-vertex and out-of-range level counts") {
    CHECK(generate({Family::Hypertree, 0}).vertex_count() == 1);
    CHECK(generate({Family::SiblingTree, 0}).vertex_count() == 1);
    CHECK_THROWS_WITH_AS(generate({Family::RootFaultHypertree, 1}),
                         "unsupported level count", std::invalid_argument);
    CHECK_THROWS_WITH_AS(generate({Family::Hypertree, 22}),
                         "unsupported level count", std::invalid_argument);
    CHECK_THROWS_WITH_AS(generate({Family::Hypertree, -1}),
                         "unsupported level count", std::invalid_argument);
}

TEST_CASE("within-level edges form a perfect matching on every level") {
    for (Family f : {Family::Hypertree, Family::SiblingTree}) {
        for (int n = 1; n <= 6; ++n) {
            Graph g = generate({f, n});
            for (int level = 1; level <= n; ++level) {
                auto verts = g.level_vertices(level);
                CHECK(verts.size() == std::size_t{1} << level);
                for (Label v : verts) {
                    std::size_t within = 0;
                    Label partner = 0;
                    for (Label u : g.neighbors(v))
                        if (g.level_of(u) == level) {
                            ++within;
                            partner = u;
                        }
                    CHECK(within == 1);
                    Label expected = f == Family::Hypertree
                                         ? (v & (Label{1} << (level - 1))) ? v - (Label{1} << (level - 1))
                                                                           : v + (Label{1} << (level - 1))
                                         : (v ^ Label{1});
                    CHECK(partner == expected);
                }
            }
        }
    }
}

TEST_CASE("the root-fault hypertree HT*(2) has the lemma's degree profile") {
    Graph g = generate({Family::RootFaultHypertree, 2});
    std::size_t deg3 = 0, deg2 = 0;
    for (Label v : g.vertex_labels()) {
        if (g.degree(v) == 3) ++deg3;
        if (g.degree(v) == 2) ++deg2;
    }
    CHECK(deg3 == 2);
    CHECK(deg2 == 4);
    CHECK(g.vertex_count() == 6);
}

TEST_CASE("bottom decompositions produce the canonical copies") {
    Graph ht3 = generate({Family::Hypertree, 3});
    auto copies2 = decompose_bottom(ht3, {Family::Hypertree, 3}, CopyKind::HTStar2);
    REQUIRE(copies2.size() == 2);
    CHECK(copies2[0].vertices == std::vector<Label>{4, 6, 8, 9, 12, 13});
    CHECK(copies2[1].vertices == std::vector<Label>{5, 7, 10, 11, 14, 15});
    CHECK(copies2[0].top_pair == std::pair<Label, Label>{4, 6});

    auto copies3 = decompose_bottom(ht3, {Family::Hypertree, 3}, CopyKind::HTStar3);
    REQUIRE(copies3.size() == 1);
    std::vector<Label> all;
    for (Label v = 2; v <= 15; ++v) all.push_back(v);
    CHECK(copies3[0].vertices == all);

    Graph st2 = generate({Family::SiblingTree, 2});
    auto tris = decompose_bottom(st2, {Family::SiblingTree, 2}, CopyKind::TerminalTriangle);
    REQUIRE(tris.size() == 2);
    CHECK(tris[0].vertices == std::vector<Label>{2, 4, 5});
    CHECK(tris[1].vertices == std::vector<Label>{3, 6, 7});
}

TEST_CASE("decomposition counts, disjointness and level coverage up to n=12") {
    for (int n = 2; n <= 12; ++n) {
        Graph ht = generate({Family::Hypertree, n});
        auto check_cover = [&](const std::vector<BottomCopy>& copies, int lo_level) {
            std::set<Label> seen;
            for (const auto& c : copies)
                for (Label v : c.vertices) {
                    CHECK(seen.insert(v).second);  // pairwise disjoint
                    CHECK(ht.level_of(v) >= lo_level);
                }
            std::size_t expected = 0;
            for (int l = lo_level; l <= n; ++l) expected += std::size_t{1} << l;
            CHECK(seen.size() == expected);  // exactly the claimed levels
        };
        auto c2 = decompose_bottom(ht, {Family::Hypertree, n}, CopyKind::HTStar2);
        CHECK(c2.size() == std::size_t{1} << (n - 2));
        check_cover(c2, n - 1);
        if (n >= 3) {
            auto c3 = decompose_bottom(ht, {Family::Hypertree, n}, CopyKind::HTStar3);
            CHECK(c3.size() == std::size_t{1} << (n - 3));
            check_cover(c3, n - 2);
        }

        Graph st = generate({Family::SiblingTree, n});
        auto tris = decompose_bottom(st, {Family::SiblingTree, n}, CopyKind::TerminalTriangle);
        CHECK(tris.size() == std::size_t{1} << (n - 1));
        std::set<Label> seen;
        for (const auto& t : tris)
            for (Label v : t.vertices) CHECK(seen.insert(v).second);
        CHECK(seen.size() == (std::size_t{3} << (n - 1)));
    }
}

TEST_CASE("decomposition rejects incompatible kinds") {
    Graph st2 = generate({Family::SiblingTree, 2});
    CHECK_THROWS_AS(decompose_bottom(st2, {Family::SiblingTree, 2}, CopyKind::HTStar2),
                    std::invalid_argument);
    Graph ht2 = generate({Family::Hypertree, 2});
    CHECK_THROWS_AS(decompose_bottom(ht2, {Family::Hypertree, 2}, CopyKind::TerminalTriangle),
                    std::invalid_argument);
    CHECK_THROWS_AS(decompose_bottom(ht2, {Family::Hypertree, 2}, CopyKind::HTStar3),
                    std::invalid_argument);
    // mismatched spec/graph pair
    CHECK_THROWS_AS(decompose_bottom(ht2, {Family::Hypertree, 3}, CopyKind::HTStar2),
                    std::invalid_argument);
}

TEST_CASE("root-fault hypertrees decompose like their full counterparts") {
    Graph g = generate({Family::RootFaultHypertree, 3});
    auto copies = decompose_bottom(g, {Family::RootFaultHypertree, 3}, CopyKind::HTStar2);
    CHECK(copies.size() == 2);
}

TEST_CASE("exports are canonical and JSON round-trips") {
    FamilySpec spec{Family::SiblingTree, 1};
    Graph g = generate(spec);
    CHECK(to_edgelist(g) == "1 2\n1 3\n2 3\n");
    CHECK(to_dot(g, spec) == "graph st_1 {\n  1 -- 2;\n  1 -- 3;\n  2 -- 3;\n}\n");

    FamilySpec spec3{Family::Hypertree, 3};
    Graph ht3 = generate(spec3);
    auto [back, back_spec] = graph_from_json(to_json(ht3, spec3));
    CHECK(back_spec == spec3);
    CHECK(back.vertex_labels() == ht3.vertex_labels());
    CHECK(back.edges() == ht3.edges());
    CHECK(back.level_of(9) == 3);

    // byte stability across repeated exports
    CHECK(to_json(ht3, spec3) == to_json(generate(spec3), spec3));

    FamilySpec star{Family::RootFaultHypertree, 2};
    Graph gs = generate(star);
    auto [back2, spec2] = graph_from_json(to_json(gs, star));
    CHECK(spec2 == star);
    CHECK(back2.edges() == gs.edges());

    // a single isolated vertex still renders as a DOT node
    FamilySpec k1{Family::Hypertree, 0};
    CHECK(to_dot(generate(k1), k1) == "graph ht_0 {\n  1;\n}\n");
}
