#pragma once

#include <string>
#include <utility>

#include "domtree/generators.hpp"
#include "domtree/graph.hpp"

namespace domtree {

// Undirected DOT, node ids = decimal labels, one "--" edge per line in
// canonical order. Isolated vertices get a bare node line.
std::string to_dot(const Graph& g, const FamilySpec& spec);

// {"family","n","vertices":[...],"edges":[[a,b],...],"levels":{label:level}}
std::string to_json(const Graph& g, const FamilySpec& spec);

// One "a b" line per edge, canonical order.
std::string to_edgelist(const Graph& g);

// Re-ingests the JSON export; returns the graph and the recorded family spec.
std::pair<Graph, FamilySpec> graph_from_json(const std::string& text);

}  // namespace domtree
