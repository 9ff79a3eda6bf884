#include "domtree/generators.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace domtree {

namespace {

constexpr int kMaxLevels = 21;  // 2^(n+1)-1 <= 2^22

int level_of_label(Label v) { return std::bit_width(v) - 1; }

void append_tree_edges(std::vector<std::pair<Label, Label>>& edges, int n) {
    for (Label x = 1; x < (Label{1} << n); ++x) {
        edges.emplace_back(x, 2 * x);
        edges.emplace_back(x, 2 * x + 1);
    }
}

}  // namespace

std::string family_token(Family f) {
    switch (f) {
        case Family::CompleteBinaryTree: return "cbt";
        case Family::Hypertree: return "ht";
        case Family::RootFaultHypertree: return "ht-star";
        case Family::SiblingTree: return "st";
    }
    throw std::logic_error("unreachable family");
}

Family family_from_token(const std::string& token) {
    if (token == "cbt") return Family::CompleteBinaryTree;
    if (token == "ht") return Family::Hypertree;
    if (token == "ht-star") return Family::RootFaultHypertree;
    if (token == "st") return Family::SiblingTree;
    throw std::invalid_argument("unknown family '" + token + "' (expected cbt, ht, ht-star or st)");
}

std::string copy_kind_token(CopyKind k) {
    switch (k) {
        case CopyKind::HTStar2: return "ht-star-2";
        case CopyKind::HTStar3: return "ht-star-3";
        case CopyKind::TerminalTriangle: return "terminal-triangle";
    }
    throw std::logic_error("unreachable copy kind");
}

Graph generate(const FamilySpec& spec) {
    const int n = spec.levels;
    const int min_n = spec.family == Family::RootFaultHypertree ? 2 : 0;
    if (n < min_n || n > kMaxLevels) throw std::invalid_argument("unsupported level count");

    const Label top = (Label{1} << (n + 1)) - 1;
    std::vector<Label> vertices;
    vertices.reserve(top);
    for (Label v = 1; v <= top; ++v) vertices.push_back(v);

    std::vector<std::pair<Label, Label>> edges;
    append_tree_edges(edges, n);

    switch (spec.family) {
        case Family::CompleteBinaryTree:
            break;
        case Family::Hypertree:
        case Family::RootFaultHypertree:
            // horizontal: within level i, x is matched with x + 2^(i-1)
            for (int i = 1; i <= n; ++i) {
                const Label half = Label{1} << (i - 1);
                for (Label x = Label{1} << i; x < (Label{1} << i) + half; ++x)
                    edges.emplace_back(x, x + half);
            }
            break;
        case Family::SiblingTree:
            for (Label x = 1; x < (Label{1} << n); ++x)
                edges.emplace_back(2 * x, 2 * x + 1);
            break;
    }

    if (spec.family == Family::RootFaultHypertree) {
        vertices.erase(vertices.begin());  // drop root 1
        std::erase_if(edges, [](const auto& e) { return e.first == 1 || e.second == 1; });
    }

    std::vector<int> levels;
    levels.reserve(vertices.size());
    for (Label v : vertices) levels.push_back(level_of_label(v));
    return Graph::from_edges(std::move(vertices), edges, std::move(levels));
}

Graph reference_copy(CopyKind kind) {
    switch (kind) {
        case CopyKind::HTStar2: return generate({Family::RootFaultHypertree, 2});
        case CopyKind::HTStar3: return generate({Family::RootFaultHypertree, 3});
        case CopyKind::TerminalTriangle: return generate({Family::SiblingTree, 1});
    }
    throw std::logic_error("unreachable copy kind");
}

namespace {

// Canonical map for HT*(k) copies: reference label t*2^d + r (t in {2,3})
// realizes base_t*2^d + r, where base_2/base_3 are the copy's top pair.
BottomCopy make_htstar_copy(CopyKind kind, Label base2, Label base3, int depth) {
    BottomCopy copy;
    copy.kind = kind;
    copy.top_pair = {base2, base3};
    for (Label t : {Label{2}, Label{3}}) {
        const Label base = t == 2 ? base2 : base3;
        for (int d = 0; d <= depth; ++d)
            for (Label r = 0; r < (Label{1} << d); ++r) {
                const Label ref = (t << d) + r;
                const Label lab = (base << d) + r;
                copy.correspondence.emplace_back(ref, lab);
                copy.vertices.push_back(lab);
            }
    }
    std::sort(copy.vertices.begin(), copy.vertices.end());
    std::sort(copy.correspondence.begin(), copy.correspondence.end());
    return copy;
}

void verify_copy(const Graph& g, const BottomCopy& copy, const Graph& ref) {
    VertexSet members{copy.vertices};
    if (members.size() != ref.vertex_count())
        throw std::logic_error("bottom copy has wrong vertex count");

    std::size_t induced_edges = 0;
    for (Label v : copy.vertices)
        for (Label u : g.neighbors(v))
            if (members.contains(u)) ++induced_edges;
    induced_edges /= 2;
    if (induced_edges != ref.edge_count())
        throw std::logic_error("bottom copy induces extra edges");

    auto mapped = [&](Label ref_label) {
        auto it = std::lower_bound(copy.correspondence.begin(), copy.correspondence.end(),
                                   std::make_pair(ref_label, Label{0}));
        return it->second;
    };
    for (auto [a, b] : ref.edges())
        if (!g.has_edge(mapped(a), mapped(b)))
            throw std::logic_error("bottom copy misses a reference edge");
}

}  // namespace

std::vector<BottomCopy> decompose_bottom(const Graph& g, const FamilySpec& spec,
                                         CopyKind kind) {
    const int n = spec.levels;
    const bool hyper = spec.family == Family::Hypertree ||
                       spec.family == Family::RootFaultHypertree;
    switch (kind) {
        case CopyKind::HTStar2:
            if (!hyper || n < 2)
                throw std::invalid_argument("HT*(2) decomposition needs a hypertree with n >= 2");
            break;
        case CopyKind::HTStar3:
            if (!hyper || n < 3)
                throw std::invalid_argument("HT*(3) decomposition needs a hypertree with n >= 3");
            break;
        case CopyKind::TerminalTriangle:
            if (spec.family != Family::SiblingTree || n < 1)
                throw std::invalid_argument("triangle decomposition needs a sibling tree with n >= 1");
            break;
    }

    const std::size_t expected =
        (Label{1} << (n + 1)) - (spec.family == Family::RootFaultHypertree ? 2 : 1);
    if (g.vertex_count() != expected)
        throw std::invalid_argument("graph does not match the family spec");

    std::vector<BottomCopy> copies;
    const Graph ref = reference_copy(kind);

    if (kind == CopyKind::TerminalTriangle) {
        for (Label p = Label{1} << (n - 1); p < (Label{1} << n); ++p) {
            BottomCopy copy;
            copy.kind = kind;
            copy.vertices = {p, 2 * p, 2 * p + 1};
            copy.top_pair = {2 * p, 2 * p + 1};
            copy.correspondence = {{1, p}, {2, 2 * p}, {3, 2 * p + 1}};
            verify_copy(g, copy, ref);
            copies.push_back(std::move(copy));
        }
        return copies;
    }

    const int top_level = kind == CopyKind::HTStar2 ? n - 1 : n - 2;
    const int depth = kind == CopyKind::HTStar2 ? 1 : 2;
    const Label half = Label{1} << (top_level - 1);
    for (Label x = Label{1} << top_level; x < (Label{1} << top_level) + half; ++x) {
        BottomCopy copy = make_htstar_copy(kind, x, x + half, depth);
        verify_copy(g, copy, ref);
        copies.push_back(std::move(copy));
    }
    return copies;
}

}  // namespace domtree
