#pragma once

#include <string>
#include <vector>

#include "domtree/graph.hpp"

namespace domtree {

enum class Variant { Dominating, TotalDominating, LocatingDominating, LocatingTotalDominating };

constexpr bool is_total(Variant v) {
    return v == Variant::TotalDominating || v == Variant::LocatingTotalDominating;
}
constexpr bool is_locating(Variant v) {
    return v == Variant::LocatingDominating || v == Variant::LocatingTotalDominating;
}

// Tokens used by the CLI and reports: dom, td, ld, ltd.
std::string variant_token(Variant v);
Variant variant_from_token(const std::string& token);

struct Violation {
    enum class Kind { Undominated, IsolatedInSet, SignatureClash };
    Kind kind = Kind::Undominated;
    Label u = 0;
    Label v = 0;  // second vertex of a clash pair; 0 otherwise

    bool operator==(const Violation&) const = default;
};

struct Certificate {
    Variant variant = Variant::Dominating;
    VertexSet set;
    bool valid = false;
    // Every violation, ordered by (kind, u, v): undominated vertices first,
    // then set members without a set neighbor, then clashing pairs.
    std::vector<Violation> witnesses;
};

// Decides validity of s for the variant. Invalid sets yield valid=false with
// witnesses, never errors.
Certificate check(const Graph& g, const VertexSet& s, Variant variant);

// Witness-free fast path over index-space members; same verdict as check().
bool is_valid(const Graph& g, const Bitset& members, Variant variant);

// |{v in s : level_of(v) in levels}|; requires level metadata.
std::size_t count_in_levels(const Graph& g, const VertexSet& s,
                            const std::vector<int>& levels);

}  // namespace domtree
