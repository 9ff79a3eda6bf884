#pragma once

#include <string>
#include <utility>
#include <vector>

#include "domtree/graph.hpp"

namespace domtree {

enum class Family { CompleteBinaryTree, Hypertree, RootFaultHypertree, SiblingTree };

// One paper graph instance: family kind plus level count n.
struct FamilySpec {
    Family family = Family::Hypertree;
    int levels = 0;

    bool operator==(const FamilySpec&) const = default;
};

// Tokens used by the CLI and the JSON export: cbt, ht, ht-star, st.
std::string family_token(Family f);
Family family_from_token(const std::string& token);

// Builds the family graph with the paper's decimal labeling.
//   Hypertree(n):          vertices 1..2^(n+1)-1, tree edges x-2x / x-(2x+1),
//                          horizontal edges x-(x+2^(i-1)) within level i >= 1
//   SiblingTree(n):        tree edges plus sibling edges 2x-(2x+1)
//   RootFaultHypertree(n): Hypertree(n) minus vertex 1, n >= 2
//   CompleteBinaryTree(n): tree edges only
// Throws "unsupported level count" when n is out of range.
Graph generate(const FamilySpec& spec);

enum class CopyKind { HTStar2, HTStar3, TerminalTriangle };

std::string copy_kind_token(CopyKind k);

// A vertex-disjoint bottom-level copy used by the inductive constructions.
// top_pair is the copy's matched pair: the two degree-3 vertices for the
// HT*(k) kinds, the terminal edge for triangles. correspondence maps each
// reference-graph label to the copy label realizing it.
struct BottomCopy {
    CopyKind kind = CopyKind::HTStar2;
    std::vector<Label> vertices;  // sorted ascending
    std::pair<Label, Label> top_pair{0, 0};
    std::vector<std::pair<Label, Label>> correspondence;  // (reference, copy)
};

// The reference graph a BottomCopy is checked against: HT*(2), HT*(3), or K3.
Graph reference_copy(CopyKind kind);

// Splits the bottom levels of a family graph into disjoint copies:
//   HTStar2 (hypertrees, n >= 2): per horizontal pair {x, x+2^(n-2)} in level
//     n-1, the pair plus its four children; 2^(n-2) copies over levels n-1..n.
//   HTStar3 (hypertrees, n >= 3): per horizontal pair {x, x+2^(n-3)} in level
//     n-2, the pair plus all descendants; 2^(n-3) copies over levels n-2..n.
//   TerminalTriangle (sibling trees, n >= 1): {p, 2p, 2p+1} per level-(n-1)
//     vertex p; 2^(n-1) copies over levels n-1..n.
// Each copy is verified isomorphic to its reference via the canonical label
// correspondence. Throws on incompatible kind/family.
std::vector<BottomCopy> decompose_bottom(const Graph& g, const FamilySpec& spec,
                                         CopyKind kind);

}  // namespace domtree
