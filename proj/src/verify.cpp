#include "domtree/verify.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

#include "domtree/constructions.hpp"
#include "domtree/solver.hpp"
#include "domtree/version.hpp"

namespace domtree {

std::string agreement_token(Agreement a) {
    switch (a) {
        case Agreement::FullMatch: return "full-match";
        case Agreement::UpperBoundOnly: return "upper-bound-only";
        case Agreement::Mismatch: return "mismatch";
    }
    throw std::logic_error("unreachable agreement");
}

std::vector<VerificationRow> run_verification(const VerifyOptions& opts) {
    std::vector<VerificationRow> rows;
    std::map<std::pair<Family, int>, Graph> graphs;

    for (Family family : opts.families) {
        for (Variant variant : opts.variants) {
            for (int n = 1; n <= opts.max_n; ++n) {
                VerificationRow row;
                row.family = family;
                row.variant = variant;
                row.n = n;
                row.formula_value = closed_form(family, variant, n).value;
                if (opts.corrupt_formula &&
                    *opts.corrupt_formula == std::make_tuple(family, variant, n))
                    row.formula_value += 1;

                auto key = std::make_pair(family, n);
                auto it = graphs.find(key);
                if (it == graphs.end())
                    it = graphs.emplace(key, generate({family, n})).first;
                const Graph& g = it->second;

                VertexSet s = construct(family, variant, n);
                row.construction_size = s.size();
                row.construction_valid = check(g, s, variant).valid;

                if (n <= opts.solve_up_to) {
                    SolveOptions sopts;
                    sopts.time_limit = std::chrono::duration_cast<std::chrono::milliseconds>(
                        opts.solver_budget);
                    sopts.workers = opts.workers;
                    sopts.deterministic = opts.deterministic;
                    SolveResult res = solve_minimum(g, variant, sopts);
                    if (res.status == SolveStatus::Solved) row.solver_value = res.value;
                }

                const bool size_matches =
                    row.construction_valid && BigInt(row.construction_size) == row.formula_value;
                if (row.solver_value) {
                    row.agreement = size_matches && BigInt(*row.solver_value) == row.formula_value
                                        ? Agreement::FullMatch
                                        : Agreement::Mismatch;
                } else {
                    row.agreement = size_matches ? Agreement::UpperBoundOnly : Agreement::Mismatch;
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

bool any_mismatch(const std::vector<VerificationRow>& rows) {
    for (const auto& row : rows)
        if (row.agreement == Agreement::Mismatch) return true;
    return false;
}

std::string rows_to_csv(const std::vector<VerificationRow>& rows) {
    std::ostringstream out;
    out << "family,variant,n,formula_value,construction_size,construction_valid,"
           "solver_value,agreement\n";
    for (const auto& row : rows) {
        out << family_token(row.family) << ',' << variant_token(row.variant) << ','
            << row.n << ',' << row.formula_value << ',' << row.construction_size << ','
            << (row.construction_valid ? "true" : "false") << ',';
        if (row.solver_value) out << *row.solver_value;
        out << ',' << agreement_token(row.agreement) << '\n';
    }
    return out.str();
}

std::string rows_to_json(const std::vector<VerificationRow>& rows, const VerifyOptions& opts) {
    nlohmann::ordered_json j;
    j["header"]["tool"] = "domtree";
    j["header"]["version"] = kVersion;
    auto families = nlohmann::ordered_json::array();
    for (Family f : opts.families) families.push_back(family_token(f));
    auto variants = nlohmann::ordered_json::array();
    for (Variant v : opts.variants) variants.push_back(variant_token(v));
    j["header"]["families"] = std::move(families);
    j["header"]["variants"] = std::move(variants);
    j["header"]["max_n"] = opts.max_n;
    j["header"]["solve_up_to"] = opts.solve_up_to;

    auto arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json r;
        r["family"] = family_token(row.family);
        r["variant"] = variant_token(row.variant);
        r["n"] = row.n;
        r["formula_value"] = row.formula_value.str();
        r["construction_size"] = row.construction_size;
        r["construction_valid"] = row.construction_valid;
        if (row.solver_value)
            r["solver_value"] = *row.solver_value;
        else
            r["solver_value"] = nullptr;
        r["agreement"] = agreement_token(row.agreement);
        arr.push_back(std::move(r));
    }
    j["rows"] = std::move(arr);
    return j.dump(2) + "\n";
}

}  // namespace domtree
