#include "domtree/lemma_audit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "domtree/solver.hpp"

namespace domtree {

std::size_t Claim::bound(int n) const {
    const int shift = n + exp_offset;
    if (shift >= 0) return static_cast<std::size_t>(coeff) << shift;
    // fractional claim below its natural range; round up
    return (static_cast<std::size_t>(coeff) + (std::size_t{1} << -shift) - 1) >> -shift;
}

const std::vector<Claim>& claims_registry() {
    static const std::vector<Claim> registry = {
        {"dom-levels", Family::Hypertree, Variant::Dominating, false, 1, -1,
         "any minimum dominating set of $G$ contains at least $2_{}^{n-1}$ vertices "
         "from levels $n-1$ and $n$"},
        {"dom-levels", Family::SiblingTree, Variant::Dominating, false, 1, -1,
         "any minimum dominating set of $G$ contains at least $2_{}^{n-1}$ vertices "
         "from levels $n-1$ and $n$"},
        {"ld-level-n", Family::Hypertree, Variant::LocatingDominating, true, 1, -1,
         "any minimum locating-dominating set of $G$ contains at least $2_{}^{n-1}$ "
         "vertices of $G$ from level $n$"},
        {"ld-level-n", Family::SiblingTree, Variant::LocatingDominating, true, 1, -1,
         "any minimum locating-dominating set of $G$ contains at least $2_{}^{n-1}$ "
         "vertices of $G$ from level $n$"},
        {"ltd-levels", Family::Hypertree, Variant::LocatingTotalDominating, false, 3, -2,
         "Any minimum locating-total dominating set contains at least $3(2^{n-2}_{})$ "
         "vertices from levels $n-1$ and $n$ in $G$"},
        {"ltd-levels", Family::SiblingTree, Variant::LocatingTotalDominating, false, 1, 0,
         "Any minimum locating-total dominating set of $G$ contains at least $2^{n}_{}$ "
         "vertices from levels $n-1$ and $n$"},
    };
    return registry;
}

std::vector<Finding> audit(const std::string& claim_id,
                           const std::vector<Family>& families, int n_lo, int n_hi) {
    std::vector<const Claim*> selected;
    for (const auto& claim : claims_registry()) {
        if (claim_id != "all" && claim.id != claim_id) continue;
        if (std::find(families.begin(), families.end(), claim.family) == families.end())
            continue;
        selected.push_back(&claim);
    }
    if (claim_id != "all") {
        bool known = false;
        for (const auto& claim : claims_registry()) known |= claim.id == claim_id;
        if (!known) throw std::invalid_argument("unknown claim id '" + claim_id + "'");
    }
    if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("bad level range");

    std::vector<Finding> findings;
    for (const Claim* claim : selected) {
        for (int n = n_lo; n <= n_hi; ++n) {
            Finding f;
            f.claim_id = claim->id;
            f.quote = claim->quote;
            f.instance = {claim->family, n};
            f.claimed_bound = claim->bound(n);
            f.graph_size = (std::size_t{1} << (n + 1)) - 1;

            if (f.graph_size > kOracleCap) {
                f.status = FindingStatus::Skipped;
                findings.push_back(std::move(f));
                continue;
            }

            const Graph g = generate(f.instance);
            auto optima = enumerate_minimum_sets(g, claim->variant, std::size_t{1} << 20);
            if (optima.truncated)
                throw std::logic_error("minimum-set enumeration truncated during audit");
            f.minimum_size = static_cast<std::size_t>(optima.value);
            f.sets_checked = optima.sets.size();

            std::vector<int> levels = claim->last_level_only
                                          ? std::vector<int>{n}
                                          : std::vector<int>{n - 1, n};
            f.status = FindingStatus::Confirmed;
            for (const VertexSet& s : optima.sets) {
                if (count_in_levels(g, s, levels) < f.claimed_bound) {
                    f.status = FindingStatus::Refuted;
                    f.counterexample = s;  // lexicographically first violator
                    break;
                }
            }
            findings.push_back(std::move(f));
        }
    }
    return findings;
}

namespace {

std::string status_token(FindingStatus s) {
    switch (s) {
        case FindingStatus::Confirmed: return "confirmed";
        case FindingStatus::Refuted: return "refuted";
        case FindingStatus::Skipped: return "skipped";
    }
    throw std::logic_error("unreachable status");
}

}  // namespace

std::string findings_to_json(const std::vector<Finding>& findings) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& f : findings) {
        nlohmann::ordered_json j;
        j["claim_id"] = f.claim_id;
        j["quote"] = f.quote;
        j["family"] = family_token(f.instance.family);
        j["n"] = f.instance.levels;
        j["status"] = status_token(f.status);
        if (f.counterexample)
            j["counterexample"] = f.counterexample->members;
        else
            j["counterexample"] = nullptr;
        j["claimed_bound"] = f.claimed_bound;
        if (f.status == FindingStatus::Skipped) {
            j["graph_size"] = f.graph_size;
        } else {
            j["minimum_size"] = f.minimum_size;
            j["sets_checked"] = f.sets_checked;
        }
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string findings_to_markdown(const std::vector<Finding>& findings) {
    std::ostringstream out;
    out << "# Level-lemma audit\n\n";
    for (const auto& f : findings) {
        out << "- **" << f.claim_id << "** on " << family_token(f.instance.family)
            << " n=" << f.instance.levels << ": " << status_token(f.status);
        if (f.status == FindingStatus::Skipped) {
            out << " (" << f.graph_size << " vertices exceeds oracle scale)";
        } else {
            out << " — bound " << f.claimed_bound << ", " << f.sets_checked
                << " minimum sets of size " << f.minimum_size << " checked";
        }
        out << "\n  > " << f.quote << "\n";
        if (f.counterexample) {
            out << "  counterexample: {";
            for (std::size_t i = 0; i < f.counterexample->members.size(); ++i)
                out << (i ? ", " : "") << f.counterexample->members[i];
            out << "}\n";
        }
    }
    return out.str();
}

}  // namespace domtree
