#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domtree/checkers.hpp"
#include "domtree/generators.hpp"

namespace domtree {

// A structural lower-bound claim from the level lemmas: every minimum set of
// the given variant contains at least coeff * 2^(n + exp_offset) vertices
// from level n (last_level_only) or levels n-1..n.
struct Claim {
    std::string id;
    Family family = Family::Hypertree;
    Variant variant = Variant::Dominating;
    bool last_level_only = false;
    int coeff = 1;
    int exp_offset = 0;
    std::string quote;  // the claim, verbatim

    std::size_t bound(int n) const;
};

// Registered claims: dom-levels (ht, st), ld-level-n (ht, st),
// ltd-levels (ht: 3*2^(n-2), st: 2^n).
const std::vector<Claim>& claims_registry();

enum class FindingStatus { Confirmed, Refuted, Skipped };

struct Finding {
    std::string claim_id;
    std::string quote;
    FamilySpec instance;
    FindingStatus status = FindingStatus::Skipped;
    std::size_t claimed_bound = 0;
    std::size_t minimum_size = 0;           // cardinality of the minimum sets
    std::size_t sets_checked = 0;           // minimum sets enumerated
    std::size_t graph_size = 0;             // |V|; explains a Skipped status
    std::optional<VertexSet> counterexample;  // verified minimum set violating
                                              // the claim; present iff Refuted
};

// Enumerates ALL minimum sets for each requested instance and tests the
// claim's count on every one of them; Confirmed only when all satisfy it.
// Instances beyond oracle scale (|V| > kOracleCap, i.e. n > 3) are Skipped.
// claim_id "all" audits the whole registry. Unknown ids are an error.
std::vector<Finding> audit(const std::string& claim_id,
                           const std::vector<Family>& families, int n_lo, int n_hi);

std::string findings_to_json(const std::vector<Finding>& findings);
std::string findings_to_markdown(const std::vector<Finding>& findings);

}  // namespace domtree
