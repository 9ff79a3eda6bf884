#include <doctest.h>

#include <json.hpp>

#include "domtree/verify.hpp"

using namespace domtree;

TEST_CASE("all theorem base cases verify as full matches") {
    VerifyOptions opts;
    opts.max_n = 3;
    auto rows = run_verification(opts);
    REQUIRE(rows.size() == 24);
    for (const auto& row : rows) {
        CAPTURE(family_token(row.family));
        CAPTURE(variant_token(row.variant));
        CAPTURE(row.n);
        CHECK(row.agreement == Agreement::FullMatch);
        CHECK(row.construction_valid);
        REQUIRE(row.solver_value.has_value());
        CHECK(BigInt(*row.solver_value) == row.formula_value);
    }
    CHECK_FALSE(any_mismatch(rows));
}

TEST_CASE("rows beyond the solver horizon degrade to upper bounds") {
    VerifyOptions opts;
    opts.max_n = 5;
    opts.solve_up_to = 3;
    auto rows = run_verification(opts);
    REQUIRE(rows.size() == 40);
    for (const auto& row : rows) {
        if (row.n <= 3) {
            CHECK(row.agreement == Agreement::FullMatch);
        } else {
            CHECK(row.agreement == Agreement::UpperBoundOnly);
            CHECK(row.construction_valid);
            CHECK_FALSE(row.solver_value.has_value());
        }
    }
}

TEST_CASE("a corrupted formula produces a mismatch") {
    VerifyOptions opts;
    opts.max_n = 2;
    opts.corrupt_formula = {Family::Hypertree, Variant::Dominating, 2};
    auto rows = run_verification(opts);
    bool found = false;
    for (const auto& row : rows)
        if (row.family == Family::Hypertree && row.variant == Variant::Dominating &&
            row.n == 2) {
            CHECK(row.agreement == Agreement::Mismatch);
            found = true;
        } else {
            CHECK(row.agreement != Agreement::Mismatch);
        }
    CHECK(found);
    CHECK(any_mismatch(rows));
}

TEST_CASE("report serialization") {
    VerifyOptions opts;
    opts.max_n = 1;
    auto rows = run_verification(opts);

    std::string csv = rows_to_csv(rows);
    CHECK(csv.rfind("family,variant,n,formula_value,construction_size,"
                    "construction_valid,solver_value,agreement\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);  // header + 8 rows

    auto parsed = nlohmann::json::parse(rows_to_json(rows, opts));
    CHECK(parsed["header"]["tool"] == "domtree");
    CHECK(parsed["header"].contains("version"));
    CHECK(parsed["rows"].size() == 8);
    CHECK(parsed["rows"][0].contains("agreement"));

    // byte-stable across runs
    CHECK(rows_to_json(rows, opts) == rows_to_json(run_verification(opts), opts));
}
