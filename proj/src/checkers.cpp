#include "domtree/checkers.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace domtree {

std::string variant_token(Variant v) {
    switch (v) {
        case Variant::Dominating: return "dom";
        case Variant::TotalDominating: return "td";
        case Variant::LocatingDominating: return "ld";
        case Variant::LocatingTotalDominating: return "ltd";
    }
    throw std::logic_error("unreachable variant");
}

Variant variant_from_token(const std::string& token) {
    if (token == "dom") return Variant::Dominating;
    if (token == "td") return Variant::TotalDominating;
    if (token == "ld") return Variant::LocatingDominating;
    if (token == "ltd") return Variant::LocatingTotalDominating;
    throw std::invalid_argument("unknown variant '" + token + "' (expected dom, td, ld or ltd)");
}

Certificate check(const Graph& g, const VertexSet& s, Variant variant) {
    Certificate cert;
    cert.variant = variant;
    cert.set = s;

    for (Label v : s.members)
        if (!g.contains(v)) throw std::invalid_argument("vertex not in graph");

    auto in_set = [&](Label v) { return s.contains(v); };
    auto has_set_neighbor = [&](Label v) {
        for (Label u : g.neighbors(v))
            if (in_set(u)) return true;
        return false;
    };

    for (Label v : g.vertex_labels()) {
        const bool member = in_set(v);
        if (member && !is_total(variant)) continue;
        if (!has_set_neighbor(v)) {
            auto kind = member ? Violation::Kind::IsolatedInSet : Violation::Kind::Undominated;
            cert.witnesses.push_back({kind, v, 0});
        }
    }

    if (is_locating(variant)) {
        // group the outside vertices by signature; every equal pair clashes
        std::vector<std::pair<std::vector<Label>, Label>> sigs;
        for (Label v : g.vertex_labels()) {
            if (in_set(v)) continue;
            std::vector<Label> sig;
            for (Label u : g.neighbors(v))
                if (in_set(u)) sig.push_back(u);
            sigs.emplace_back(std::move(sig), v);
        }
        std::sort(sigs.begin(), sigs.end());
        for (std::size_t lo = 0; lo < sigs.size();) {
            std::size_t hi = lo + 1;
            while (hi < sigs.size() && sigs[hi].first == sigs[lo].first) ++hi;
            for (std::size_t i = lo; i < hi; ++i)
                for (std::size_t j = i + 1; j < hi; ++j)
                    cert.witnesses.push_back(
                        {Violation::Kind::SignatureClash, sigs[i].second, sigs[j].second});
            lo = hi;
        }
    }

    std::sort(cert.witnesses.begin(), cert.witnesses.end(),
              [](const Violation& a, const Violation& b) {
                  return std::tie(a.kind, a.u, a.v) < std::tie(b.kind, b.u, b.v);
              });
    cert.valid = cert.witnesses.empty();
    return cert;
}

namespace {

// Word-mask fast path for graphs with at most 64 vertices.
bool is_valid_small(const Graph& g, std::uint64_t members, Variant variant) {
    const std::size_t n = g.vertex_count();
    std::array<std::uint64_t, 64> sigs{};
    std::size_t outside = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t row = g.neighbor_bits(i).words()[0];
        const std::uint64_t sig = row & members;
        const bool member = (members >> i) & 1;
        if (is_total(variant) ? sig == 0 : (!member && sig == 0)) return false;
        if (!member) sigs[outside++] = sig;
    }
    if (is_locating(variant)) {
        std::sort(sigs.begin(), sigs.begin() + static_cast<std::ptrdiff_t>(outside));
        for (std::size_t i = 1; i < outside; ++i)
            if (sigs[i] == sigs[i - 1]) return false;
    }
    return true;
}

}  // namespace

bool is_valid(const Graph& g, const Bitset& members, Variant variant) {
    const std::size_t n = g.vertex_count();
    if (members.size() != n)
        throw std::invalid_argument("member bitset does not match the graph");
    if (n == 0) return true;
    if (n <= 64 && g.has_bit_rows())
        return is_valid_small(g, members.words()[0], variant);
    return check(g, g.from_index_bits(members), variant).valid;
}

std::size_t count_in_levels(const Graph& g, const VertexSet& s,
                            const std::vector<int>& levels) {
    if (!g.has_levels()) throw std::logic_error("graph has no level metadata");
    std::size_t count = 0;
    for (Label v : s.members)
        if (std::find(levels.begin(), levels.end(), g.level_of(v)) != levels.end()) ++count;
    return count;
}

}  // namespace domtree
