#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "domtree/checkers.hpp"
#include "domtree/graph.hpp"

namespace domtree {

inline constexpr std::size_t kOracleCap = 24;
inline constexpr std::size_t kSolveCap = std::size_t{1} << 15;

enum class SolveStatus { Solved, Infeasible, BoundOnly };

struct SolveOptions {
    std::chrono::milliseconds time_limit{0};  // 0 = no limit
    int workers = 1;
    bool deterministic = true;  // report the lexicographically least minimum set
};

struct SolveResult {
    Variant variant = Variant::Dominating;
    SolveStatus status = SolveStatus::Infeasible;
    int value = -1;          // meaningful when status == Solved
    VertexSet witness_set;   // passes check() for the variant when Solved
    int lower_bound = 0;
    int upper_bound = -1;    // -1 = no feasible set known
    std::uint64_t nodes_explored = 0;
    std::chrono::milliseconds elapsed{0};
};

// Ground-truth enumerator: subsets by increasing cardinality, lexicographic
// within each cardinality; first valid set wins. Requires |V| <= kOracleCap
// ("oracle cap exceeded" otherwise). Infeasible only when no subset of V is
// valid.
SolveResult oracle_minimum(const Graph& g, Variant variant);

// Exact minimum via iterative deepening on the cardinality with a pruned
// depth-first search (undominated-vertex branching; signature-capacity and
// clash-resolution pruning for the locating variants). Agrees with
// oracle_minimum wherever both run. With opts.deterministic the witness is
// the lexicographically least minimum set, independent of worker count.
// A hit time limit yields a BoundOnly result, never an error.
SolveResult solve_minimum(const Graph& g, Variant variant, const SolveOptions& opts = {});

struct EnumerationResult {
    Variant variant = Variant::Dominating;
    int value = -1;               // -1 when no valid set exists
    std::vector<VertexSet> sets;  // all minimum sets, lexicographic order
    bool truncated = false;
};

// All minimum-cardinality valid sets, lexicographic, truncated at cap.
// Requires |V| <= kOracleCap.
EnumerationResult enumerate_minimum_sets(const Graph& g, Variant variant, std::size_t cap);

}  // namespace domtree
