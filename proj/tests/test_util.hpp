#pragma once

#include <random>
#include <vector>

#include "domtree/generators.hpp"
#include "domtree/graph.hpp"

namespace domtree::testutil {

inline Graph make_graph(std::vector<Label> vertices,
                        std::vector<std::pair<Label, Label>> edges) {
    return Graph::from_edges(std::move(vertices), edges);
}

inline Graph path3() { return make_graph({1, 2, 3}, {{1, 2}, {2, 3}}); }

// Seeded G(n, p)-style graphs for oracle/solver agreement sweeps.
inline Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
    std::vector<Label> vertices;
    for (std::size_t v = 1; v <= n; ++v) vertices.push_back(static_cast<Label>(v));
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<Label, Label>> edges;
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = a + 1; b <= n; ++b)
            if (coin(rng)) edges.emplace_back(static_cast<Label>(a), static_cast<Label>(b));
    return make_graph(std::move(vertices), std::move(edges));
}

}  // namespace domtree::testutil
