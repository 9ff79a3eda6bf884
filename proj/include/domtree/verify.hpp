#pragma once

#include <chrono>
#include <optional>
#include <tuple>
#include <vector>

#include "domtree/formulas.hpp"

namespace domtree {

enum class Agreement { FullMatch, UpperBoundOnly, Mismatch };

struct VerificationRow {
    Family family = Family::Hypertree;
    Variant variant = Variant::Dominating;
    int n = 1;
    BigInt formula_value;
    std::size_t construction_size = 0;
    bool construction_valid = false;
    std::optional<int> solver_value;
    Agreement agreement = Agreement::Mismatch;
};

struct VerifyOptions {
    std::vector<Family> families = {Family::Hypertree, Family::SiblingTree};
    std::vector<Variant> variants = {Variant::Dominating, Variant::TotalDominating,
                                     Variant::LocatingDominating,
                                     Variant::LocatingTotalDominating};
    int max_n = 3;
    int solve_up_to = 3;  // solver attempted for n <= solve_up_to
    std::chrono::seconds solver_budget{30};
    int workers = 1;
    bool deterministic = true;
    // test fixture: bumps one formula value by +1 to exercise Mismatch paths
    std::optional<std::tuple<Family, Variant, int>> corrupt_formula;
};

// One row per (family, variant, n <= max_n), ordered (family, variant, n):
// closed form vs construction-plus-checker vs (budgeted) exact solver.
// Budget exhaustion downgrades a row to UpperBoundOnly, never aborts.
std::vector<VerificationRow> run_verification(const VerifyOptions& opts);

bool any_mismatch(const std::vector<VerificationRow>& rows);

std::string rows_to_csv(const std::vector<VerificationRow>& rows);
std::string rows_to_json(const std::vector<VerificationRow>& rows, const VerifyOptions& opts);

std::string agreement_token(Agreement a);

}  // namespace domtree
