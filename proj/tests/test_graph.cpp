#include <doctest.h>

#include <algorithm>

#include "domtree/generators.hpp"
#include "domtree/graph.hpp"
#include "test_util.hpp"

using namespace domtree;

TEST_CASE("open neighborhoods follow the label arithmetic") {
    Graph ht1 = generate({Family::Hypertree, 1});
    CHECK(neighbors(ht1, 1) == std::vector<Label>{2, 3});

    Graph ht3 = generate({Family::Hypertree, 3});
    CHECK(neighbors(ht3, 9) == std::vector<Label>{4, 13});

    Graph ht2 = generate({Family::Hypertree, 2});
    CHECK(neighbors(ht2, 5) == std::vector<Label>{2, 7});

    CHECK_THROWS_WITH_AS(neighbors(ht2, 42), "vertex not in graph", std::invalid_argument);
}

TEST_CASE("signatures are sorted in-set neighborhoods") {
    Graph ht2 = generate({Family::Hypertree, 2});
    VertexSet s{{2, 3, 4}};
    CHECK(signature(ht2, s, 6).in_set_neighbors == std::vector<Label>{3, 4});
    CHECK(signature(ht2, s, 1).in_set_neighbors == std::vector<Label>{2, 3});
    CHECK(signature(ht2, VertexSet{}, 7).in_set_neighbors.empty());
}

TEST_CASE("induced subgraphs keep exactly the inner edges") {
    Graph ht2 = generate({Family::Hypertree, 2});
    Graph bottom = induced_subgraph(ht2, {4, 5, 6, 7});
    CHECK(bottom.edges() == std::vector<std::pair<Label, Label>>{{4, 6}, {5, 7}});
    CHECK(bottom.level_of(4) == 2);

    // the first bottom HT*(2) copy of HT(3), canonically relabelled
    Graph ht3 = generate({Family::Hypertree, 3});
    Graph copy = induced_subgraph(ht3, {4, 6, 8, 9, 12, 13});
    Graph ref = generate({Family::RootFaultHypertree, 2});
    CHECK(copy.vertex_count() == ref.vertex_count());
    CHECK(copy.edge_count() == ref.edge_count());
    const std::vector<std::pair<Label, Label>> map = {
        {2, 4}, {3, 6}, {4, 8}, {5, 9}, {6, 12}, {7, 13}};
    for (auto [a, b] : ref.edges()) {
        auto find = [&](Label r) {
            return std::find_if(map.begin(), map.end(),
                                [&](auto p) { return p.first == r; })->second;
        };
        CHECK(copy.has_edge(find(a), find(b)));
    }

    Graph empty = induced_subgraph(ht3, {});
    CHECK(empty.vertex_count() == 0);
    CHECK_THROWS_AS(induced_subgraph(ht2, {99}), std::invalid_argument);
}

TEST_CASE("adjacency is symmetric and irreflexive on generated graphs") {
    for (Family f : {Family::Hypertree, Family::SiblingTree, Family::CompleteBinaryTree}) {
        Graph g = generate({f, 4});
        for (Label v : g.vertex_labels()) {
            auto nv = g.neighbors(v);
            CHECK(std::find(nv.begin(), nv.end(), v) == nv.end());
            for (Label u : nv) {
                auto nu = g.neighbors(u);
                CHECK(std::find(nu.begin(), nu.end(), v) != nu.end());
            }
        }
    }
}

TEST_CASE("inducing on the full vertex set is the identity") {
    Graph g = generate({Family::SiblingTree, 4});
    Graph h = induced_subgraph(g, g.vertex_labels());
    CHECK(h.vertex_labels() == g.vertex_labels());
    CHECK(h.edges() == g.edges());
}

TEST_CASE("construction rejects malformed input") {
    CHECK_THROWS_AS(testutil::make_graph({1, 1, 2}, {}), std::invalid_argument);
    CHECK_THROWS_AS(testutil::make_graph({1, 2}, {{1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(testutil::make_graph({1, 2}, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(testutil::make_graph({0, 1}, {}), std::invalid_argument);
}

TEST_CASE("index bit conversions round-trip") {
    Graph g = generate({Family::Hypertree, 3});
    VertexSet s{{1, 4, 5, 6, 7}};
    CHECK(g.from_index_bits(g.to_index_bits(s)) == s);
    CHECK_THROWS_AS(g.to_index_bits(VertexSet{{100}}), std::invalid_argument);
}
