#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "domtree/constructions.hpp"
#include "domtree/io.hpp"
#include "domtree/lemma_audit.hpp"
#include "domtree/solver.hpp"
#include "domtree/verify.hpp"
#include "domtree/version.hpp"

namespace {

using namespace domtree;

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<Family> parse_families(const std::vector<std::string>& tokens) {
    std::vector<Family> out;
    for (const auto& t : tokens) out.push_back(family_from_token(t));
    return out;
}

std::vector<Variant> parse_variants(const std::vector<std::string>& tokens) {
    std::vector<Variant> out;
    for (const auto& t : tokens) out.push_back(variant_from_token(t));
    return out;
}

nlohmann::ordered_json make_header(const std::optional<FamilySpec>& spec,
                                   const std::optional<Variant>& variant) {
    nlohmann::ordered_json h;
    h["tool"] = "domtree";
    h["version"] = kVersion;
    if (spec) {
        h["family"] = family_token(spec->family);
        h["n"] = spec->levels;
    }
    if (variant) h["variant"] = variant_token(*variant);
    return h;
}

struct GraphArgs {
    std::string family;
    int levels = -1;
    std::string input;

    // Graph either from --family/--levels or re-ingested from a JSON export.
    std::pair<Graph, FamilySpec> load() const {
        if (!input.empty()) return graph_from_json(read_file(input));
        if (family.empty() || levels < 0)
            throw CLI::ValidationError("either --input or --family with --levels is required");
        FamilySpec spec{family_from_token(family), levels};
        return {generate(spec), spec};
    }
};

void add_graph_options(CLI::App* cmd, GraphArgs& args) {
    auto* fam = cmd->add_option("--family", args.family, "graph family: cbt, ht, ht-star, st");
    auto* lev = cmd->add_option("--levels", args.levels, "level count n");
    auto* inp = cmd->add_option("--input", args.input, "re-ingest a JSON graph export");
    fam->needs(lev);
    inp->excludes(fam)->excludes(lev);
}

int run(int argc, char** argv) {
    CLI::App app{"domination parameters on hypertree and sibling-tree networks"};
    app.set_version_flag("--version", std::string("domtree ") + kVersion);
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "emit a family graph");
    std::string gen_family;
    int gen_levels = 0;
    std::string gen_format = "edgelist";
    std::string gen_output;
    gen->add_option("--family", gen_family, "graph family: cbt, ht, ht-star, st")->required();
    gen->add_option("--levels", gen_levels, "level count n")->required();
    gen->add_option("--format", gen_format, "dot, json or edgelist")
        ->check(CLI::IsMember({"dot", "json", "edgelist"}));
    gen->add_option("--output", gen_output, "output path (default stdout)");

    // solve
    auto* solve = app.add_subcommand("solve", "exact minimum for a variant");
    GraphArgs solve_graph;
    add_graph_options(solve, solve_graph);
    std::string solve_variant;
    int time_limit = 0;
    int workers = 1;
    bool deterministic = true;
    bool use_oracle = false;
    solve->add_option("--variant", solve_variant, "dom, td, ld or ltd")->required();
    solve->add_option("--time-limit", time_limit, "seconds, 0 = unlimited")
        ->envname("DOMTREE_TIME_LIMIT");
    solve->add_option("--workers", workers, "parallel workers")->envname("DOMTREE_WORKERS");
    solve->add_flag("--seedless,!--no-seedless", deterministic,
                    "deterministic witness (lexicographically least)");
    solve->add_flag("--oracle", use_oracle, "use the exhaustive oracle (|V| <= 24)");

    // construct
    auto* cons = app.add_subcommand("construct", "paper construction for a variant");
    GraphArgs cons_graph;
    add_graph_options(cons, cons_graph);
    std::string cons_variant;
    bool cons_check = false;
    cons->add_option("--variant", cons_variant, "dom, td, ld or ltd")->required();
    cons->add_flag("--check", cons_check, "run the checker on the constructed set");

    // verify
    auto* verify = app.add_subcommand("verify", "formula vs construction vs solver table");
    std::vector<std::string> verify_families{"ht", "st"};
    std::vector<std::string> verify_variants{"dom", "td", "ld", "ltd"};
    VerifyOptions vopts;
    std::string verify_csv, verify_json, verify_corrupt;
    verify->add_option("--families", verify_families, "families to verify")->delimiter(',');
    verify->add_option("--variants", verify_variants, "variants to verify")->delimiter(',');
    verify->add_option("--max-n", vopts.max_n, "verify n = 1..max_n")
        ->check(CLI::Range(1, 21));
    int budget = 30;
    verify->add_option("--solver-budget", budget, "seconds per solver attempt")
        ->envname("DOMTREE_TIME_LIMIT");
    verify->add_option("--solve-up-to", vopts.solve_up_to,
                       "run the exact solver for n up to this bound");
    verify->add_option("--workers", vopts.workers, "parallel workers")
        ->envname("DOMTREE_WORKERS");
    verify->add_option("--csv", verify_csv, "write the CSV table here");
    verify->add_option("--json", verify_json, "write the JSON report here");
    verify->add_option("--corrupt-formula", verify_corrupt, "self-test fixture, family:variant:n")
        ->group("");  // hidden

    // table
    auto* table = app.add_subcommand("table", "closed-form values as CSV");
    int table_max_n = 10;
    std::string table_output;
    table->add_option("--max-n", table_max_n, "tabulate n = 1..max_n")->check(CLI::Range(1, 64));
    table->add_option("--output", table_output, "output path (default stdout)");

    // audit
    auto* audit_cmd = app.add_subcommand("audit", "audit the level lemmas against all optima");
    std::string audit_claim = "all";
    std::vector<std::string> audit_families{"ht", "st"};
    int audit_min = 2, audit_max = 3;
    std::string audit_format = "json", audit_output;
    audit_cmd->add_option("--claim", audit_claim, "dom-levels, ld-level-n, ltd-levels or all");
    audit_cmd->add_option("--families", audit_families, "families to audit")->delimiter(',');
    audit_cmd->add_option("--min-level", audit_min, "smallest n");
    audit_cmd->add_option("--max-level", audit_max, "largest n");
    audit_cmd->add_option("--format", audit_format, "json or md")
        ->check(CLI::IsMember({"json", "md"}));
    audit_cmd->add_option("--output", audit_output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (gen->parsed()) {
        FamilySpec spec{family_from_token(gen_family), gen_levels};
        Graph g = generate(spec);
        std::string text = gen_format == "dot"    ? to_dot(g, spec)
                           : gen_format == "json" ? to_json(g, spec)
                                                  : to_edgelist(g);
        write_output(text, gen_output);
        return 0;
    }

    if (solve->parsed()) {
        auto [g, spec] = solve_graph.load();
        Variant variant = variant_from_token(solve_variant);
        SolveResult res;
        if (use_oracle) {
            res = oracle_minimum(g, variant);
        } else {
            SolveOptions opts;
            opts.time_limit = std::chrono::seconds(time_limit);
            opts.workers = workers;
            opts.deterministic = deterministic;
            res = solve_minimum(g, variant, opts);
        }
        nlohmann::ordered_json j;
        j["header"] = make_header(spec, variant);
        j["value"] = res.status == SolveStatus::Solved ? nlohmann::ordered_json(res.value)
                                                       : nlohmann::ordered_json(nullptr);
        j["status"] = res.status == SolveStatus::Solved       ? "solved"
                      : res.status == SolveStatus::Infeasible ? "infeasible"
                                                              : "bound-only";
        j["witness"] = res.witness_set.members;
        j["lower_bound"] = res.lower_bound;
        if (res.upper_bound >= 0)
            j["upper_bound"] = res.upper_bound;
        else
            j["upper_bound"] = nullptr;
        j["nodes_explored"] = res.nodes_explored;
        j["elapsed_ms"] = res.elapsed.count();
        std::cout << j.dump(2) << '\n';
        return 0;
    }

    if (cons->parsed()) {
        auto [g, spec] = cons_graph.load();
        Variant variant = variant_from_token(cons_variant);
        VertexSet s = construct(spec.family, variant, spec.levels);
        nlohmann::ordered_json j;
        j["header"] = make_header(spec, variant);
        j["set"] = s.members;
        j["size"] = s.size();
        if (cons_check) {
            Certificate cert = check(g, s, variant);
            j["valid"] = cert.valid;
        }
        std::cout << j.dump(2) << '\n';
        return 0;
    }

    if (verify->parsed()) {
        vopts.families = parse_families(verify_families);
        vopts.variants = parse_variants(verify_variants);
        vopts.solver_budget = std::chrono::seconds(budget);
        if (!verify_corrupt.empty()) {
            std::istringstream in(verify_corrupt);
            std::string f, v, nstr;
            if (!std::getline(in, f, ':') || !std::getline(in, v, ':') || !std::getline(in, nstr))
                throw std::runtime_error("--corrupt-formula expects family:variant:n");
            vopts.corrupt_formula = {family_from_token(f), variant_from_token(v),
                                     std::stoi(nstr)};
        }
        auto rows = run_verification(vopts);
        if (!verify_csv.empty()) write_output(rows_to_csv(rows), verify_csv);
        if (!verify_json.empty()) write_output(rows_to_json(rows, vopts), verify_json);
        if (verify_csv.empty() && verify_json.empty())
            write_output(rows_to_csv(rows), "");
        return any_mismatch(rows) ? 1 : 0;
    }

    if (table->parsed()) {
        std::ostringstream out;
        out << "family,variant,n,value\n";
        for (Family family : {Family::Hypertree, Family::SiblingTree})
            for (Variant variant : {Variant::Dominating, Variant::TotalDominating,
                                    Variant::LocatingDominating,
                                    Variant::LocatingTotalDominating})
                for (int n = 1; n <= table_max_n; ++n)
                    out << family_token(family) << ',' << variant_token(variant) << ',' << n
                        << ',' << closed_form(family, variant, n).value << '\n';
        write_output(out.str(), table_output);
        return 0;
    }

    if (audit_cmd->parsed()) {
        auto findings = audit(audit_claim, parse_families(audit_families), audit_min, audit_max);
        write_output(audit_format == "md" ? findings_to_markdown(findings)
                                          : findings_to_json(findings),
                     audit_output);
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "domtree: " << e.what() << '\n';
        return 2;
    }
}
