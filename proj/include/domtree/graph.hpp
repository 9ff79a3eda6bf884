#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "domtree/bitset.hpp"

namespace domtree {

using Label = std::uint32_t;

// Vertex labels follow the complete-binary-tree numbering: root 1, children
// of x are 2x and 2x+1, level of x is floor(log2 x).
struct VertexSet {
    std::vector<Label> members;  // sorted ascending, no duplicates

    VertexSet() = default;
    explicit VertexSet(std::vector<Label> m);

    std::size_t size() const { return members.size(); }
    bool contains(Label v) const;
    bool operator==(const VertexSet&) const = default;
};

struct Signature {
    Label vertex = 0;
    std::vector<Label> in_set_neighbors;  // N(vertex) ∩ S, sorted ascending
};

// Immutable undirected graph. Adjacency is stored as sorted neighbor lists in
// label space plus an index-space CSR; bit rows are materialized for graphs
// small enough for exact search (see kBitRowCap).
class Graph {
public:
    static constexpr std::size_t kMaxVertices = std::size_t{1} << 22;
    static constexpr std::size_t kBitRowCap = 4096;

    Graph() = default;

    // Validates: labels positive and unique, edges between known labels,
    // irreflexive; symmetry is established by construction.
    static Graph from_edges(std::vector<Label> vertices,
                            const std::vector<std::pair<Label, Label>>& edges,
                            std::optional<std::vector<int>> levels = std::nullopt);

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<Label>& vertex_labels() const { return labels_; }
    bool contains(Label v) const;
    std::size_t index_of(Label v) const;  // throws "vertex not in graph"
    Label label_at(std::size_t i) const { return labels_[i]; }

    std::span<const Label> neighbors(Label v) const;
    std::span<const std::uint32_t> neighbor_indices(std::size_t i) const;
    std::size_t degree(Label v) const { return neighbors(v).size(); }
    std::size_t max_degree() const { return max_degree_; }
    bool has_edge(Label a, Label b) const;

    // Edges in canonical order: lexicographic by (min label, max label).
    std::vector<std::pair<Label, Label>> edges() const;

    bool has_levels() const { return !levels_.empty(); }
    int level_of(Label v) const;  // throws if level metadata absent
    int max_level() const;
    std::vector<Label> level_vertices(int level) const;

    bool has_bit_rows() const { return !bit_rows_.empty(); }
    const Bitset& neighbor_bits(std::size_t i) const { return bit_rows_[i]; }

    Bitset to_index_bits(const VertexSet& s) const;  // validates membership
    VertexSet from_index_bits(const Bitset& b) const;

private:
    std::vector<Label> labels_;          // sorted ascending
    std::vector<std::uint32_t> adj_off_; // CSR offsets, size N+1
    std::vector<std::uint32_t> adj_idx_; // CSR neighbor indices, sorted
    std::vector<Label> adj_lab_;         // same order as adj_idx_, label values
    std::vector<int> levels_;            // per index; empty = no metadata
    std::vector<Bitset> bit_rows_;       // per index; empty when N > kBitRowCap
    std::size_t edge_count_ = 0;
    std::size_t max_degree_ = 0;
};

// Open neighborhood N(v), ascending. Throws on unknown label.
std::vector<Label> neighbors(const Graph& g, Label v);

// N(v) ∩ S, sorted ascending.
Signature signature(const Graph& g, const VertexSet& s, Label v);

// Subgraph induced by vs; level metadata restricted when present.
Graph induced_subgraph(const Graph& g, const std::vector<Label>& vs);

}  // namespace domtree
