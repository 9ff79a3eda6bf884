#pragma once

#include <array>

#include "domtree/checkers.hpp"
#include "domtree/generators.hpp"
#include "domtree/graph.hpp"

namespace domtree {

// Per-copy templates used by the inductive constructions, frozen after
// checker validation. The HT templates are in HT*(2)/HT*(3) reference labels
// (matching BottomCopy::correspondence); the ST templates are root-relative
// with the copy root at 1.
inline constexpr std::array<Label, 6> kHtStar3LdTemplate{2, 3, 8, 9, 10, 15};
inline constexpr std::array<Label, 3> kHtStar2LtdTemplate{2, 3, 4};
inline constexpr std::array<Label, 6> kSt3LdTemplate{2, 3, 8, 10, 12, 14};
inline constexpr std::array<Label, 4> kSt2LtdTemplate{2, 3, 4, 6};

// The paper's dominating/total-dominating level pattern:
//   n ≡ 0 (mod 3): {2} ∪ levels {2, 5, ..., n-1}
//   n ≡ 1 (mod 3): {2} ∪ levels {3, 6, ..., n-1}, plus {3} when total
//   n ≡ 2 (mod 3): levels {1, 4, ..., n-1}
// Vertex 2 stands in for the root choice so one pattern serves both
// variants; the same pattern is valid for hypertrees and sibling trees.
VertexSet dominating_level_pattern(Family family, int n, bool total);

// A deterministic vertex set that passes check() for the variant and has
// cardinality closed_form(family, variant, n). Supported for Hypertree and
// SiblingTree, all four variants, every n >= 1. Minimality is asserted only
// at oracle scale (tests), not by this function.
VertexSet construct(Family family, Variant variant, int n);

}  // namespace domtree
