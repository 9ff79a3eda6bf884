#include "domtree/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace domtree {

VertexSet::VertexSet(std::vector<Label> m) : members(std::move(m)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool VertexSet::contains(Label v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

Graph Graph::from_edges(std::vector<Label> vertices,
                        const std::vector<std::pair<Label, Label>>& edges,
                        std::optional<std::vector<int>> levels) {
    if (vertices.size() > kMaxVertices)
        throw std::invalid_argument("graph exceeds the 2^22 vertex cap");

    Graph g;
    g.labels_ = std::move(vertices);
    std::sort(g.labels_.begin(), g.labels_.end());
    if (std::adjacent_find(g.labels_.begin(), g.labels_.end()) != g.labels_.end())
        throw std::invalid_argument("duplicate vertex label");
    for (Label v : g.labels_)
        if (v == 0) throw std::invalid_argument("vertex labels must be positive");

    const std::size_t n = g.labels_.size();
    auto index_of = [&](Label v) -> std::size_t {
        auto it = std::lower_bound(g.labels_.begin(), g.labels_.end(), v);
        if (it == g.labels_.end() || *it != v)
            throw std::invalid_argument("vertex not in graph");
        return static_cast<std::size_t>(it - g.labels_.begin());
    };

    std::vector<std::vector<std::uint32_t>> adj(n);
    for (auto [a, b] : edges) {
        if (a == b) throw std::invalid_argument("self-loops are not allowed");
        auto ia = static_cast<std::uint32_t>(index_of(a));
        auto ib = static_cast<std::uint32_t>(index_of(b));
        adj[ia].push_back(ib);
        adj[ib].push_back(ia);
    }

    g.adj_off_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        auto& row = adj[i];
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        g.adj_off_[i + 1] = g.adj_off_[i] + static_cast<std::uint32_t>(row.size());
        g.max_degree_ = std::max(g.max_degree_, row.size());
    }
    g.adj_idx_.reserve(g.adj_off_[n]);
    g.adj_lab_.reserve(g.adj_off_[n]);
    for (auto& row : adj)
        for (auto j : row) {
            g.adj_idx_.push_back(j);
            g.adj_lab_.push_back(g.labels_[j]);
        }
    g.edge_count_ = g.adj_idx_.size() / 2;

    if (levels) {
        if (levels->size() != n)
            throw std::invalid_argument("level metadata must cover exactly the vertex set");
        g.levels_ = std::move(*levels);
    }

    if (n > 0 && n <= kBitRowCap) {
        g.bit_rows_.assign(n, Bitset(n));
        for (std::size_t i = 0; i < n; ++i)
            for (auto j : g.neighbor_indices(i)) g.bit_rows_[i].set(j);
    }
    return g;
}

bool Graph::contains(Label v) const {
    return std::binary_search(labels_.begin(), labels_.end(), v);
}

std::size_t Graph::index_of(Label v) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    if (it == labels_.end() || *it != v)
        throw std::invalid_argument("vertex not in graph");
    return static_cast<std::size_t>(it - labels_.begin());
}

std::span<const Label> Graph::neighbors(Label v) const {
    std::size_t i = index_of(v);
    return {adj_lab_.data() + adj_off_[i], adj_off_[i + 1] - adj_off_[i]};
}

std::span<const std::uint32_t> Graph::neighbor_indices(std::size_t i) const {
    return {adj_idx_.data() + adj_off_[i], adj_off_[i + 1] - adj_off_[i]};
}

bool Graph::has_edge(Label a, Label b) const {
    std::size_t ia = index_of(a);
    std::size_t ib = index_of(b);
    if (!bit_rows_.empty()) return bit_rows_[ia].test(ib);
    auto row = neighbor_indices(ia);
    return std::binary_search(row.begin(), row.end(), static_cast<std::uint32_t>(ib));
}

std::vector<std::pair<Label, Label>> Graph::edges() const {
    std::vector<std::pair<Label, Label>> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < labels_.size(); ++i)
        for (auto j : neighbor_indices(i))
            if (i < j) out.emplace_back(labels_[i], labels_[j]);
    // labels_ ascending implies (min,max) lexicographic order already
    return out;
}

int Graph::level_of(Label v) const {
    if (levels_.empty()) throw std::logic_error("graph has no level metadata");
    return levels_[index_of(v)];
}

int Graph::max_level() const {
    if (levels_.empty()) throw std::logic_error("graph has no level metadata");
    return *std::max_element(levels_.begin(), levels_.end());
}

std::vector<Label> Graph::level_vertices(int level) const {
    if (levels_.empty()) throw std::logic_error("graph has no level metadata");
    std::vector<Label> out;
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (levels_[i] == level) out.push_back(labels_[i]);
    return out;
}

Bitset Graph::to_index_bits(const VertexSet& s) const {
    Bitset b(vertex_count());
    for (Label v : s.members) b.set(index_of(v));
    return b;
}

VertexSet Graph::from_index_bits(const Bitset& b) const {
    VertexSet s;
    s.members.reserve(b.count());
    b.for_each([&](std::size_t i) { s.members.push_back(labels_[i]); });
    return s;
}

std::vector<Label> neighbors(const Graph& g, Label v) {
    auto span = g.neighbors(v);
    return {span.begin(), span.end()};
}

Signature signature(const Graph& g, const VertexSet& s, Label v) {
    Signature sig;
    sig.vertex = v;
    for (Label u : g.neighbors(v))
        if (s.contains(u)) sig.in_set_neighbors.push_back(u);
    return sig;
}

Graph induced_subgraph(const Graph& g, const std::vector<Label>& vs) {
    VertexSet keep{vs};
    for (Label v : keep.members)
        if (!g.contains(v)) throw std::invalid_argument("vertex not in graph");

    std::vector<std::pair<Label, Label>> edges;
    for (Label v : keep.members)
        for (Label u : g.neighbors(v))
            if (v < u && keep.contains(u)) edges.emplace_back(v, u);

    std::optional<std::vector<int>> levels;
    if (g.has_levels()) {
        levels.emplace();
        levels->reserve(keep.members.size());
        for (Label v : keep.members) levels->push_back(g.level_of(v));
    }
    return Graph::from_edges(keep.members, edges, std::move(levels));
}

}  // namespace domtree
