#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "domtree/constructions.hpp"
#include "domtree/formulas.hpp"
#include "domtree/io.hpp"
#include "domtree/lemma_audit.hpp"
#include "domtree/solver.hpp"
#include "domtree/version.hpp"

namespace py = pybind11;
using namespace domtree;

namespace {

py::int_ big_to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.str().c_str(), nullptr, 10));
}

VertexSet as_set(const std::vector<Label>& members) { return VertexSet{members}; }

py::dict solve_result_to_dict(const SolveResult& res) {
    py::dict d;
    d["variant"] = variant_token(res.variant);
    d["status"] = res.status == SolveStatus::Solved       ? "solved"
                  : res.status == SolveStatus::Infeasible ? "infeasible"
                                                          : "bound-only";
    if (res.status == SolveStatus::Solved)
        d["value"] = res.value;
    else
        d["value"] = py::none();
    d["witness"] = res.witness_set.members;
    d["lower_bound"] = res.lower_bound;
    if (res.upper_bound >= 0)
        d["upper_bound"] = res.upper_bound;
    else
        d["upper_bound"] = py::none();
    d["nodes_explored"] = res.nodes_explored;
    d["elapsed_ms"] = res.elapsed.count();
    return d;
}

}  // namespace

PYBIND11_MODULE(pydomtree, m) {
    m.doc() = "domination, total, locating and locating-total domination on "
              "hypertree and sibling-tree interconnection networks";
    m.attr("__version__") = kVersion;

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("has_levels", &Graph::has_levels)
        .def("vertices", [](const Graph& g) { return g.vertex_labels(); })
        .def("edges", &Graph::edges)
        .def("neighbors", [](const Graph& g, Label v) { return neighbors(g, v); })
        .def("has_edge", &Graph::has_edge)
        .def("degree", &Graph::degree)
        .def("level_of", &Graph::level_of)
        .def("max_level", &Graph::max_level)
        .def("level_vertices", &Graph::level_vertices);

    m.def("generate", [](const std::string& family, int n) {
        return generate({family_from_token(family), n});
    }, py::arg("family"), py::arg("n"));

    m.def("graph_from_edges",
          [](std::vector<Label> vertices, std::vector<std::pair<Label, Label>> edges,
             std::optional<std::vector<int>> levels) {
              return Graph::from_edges(std::move(vertices), edges, std::move(levels));
          },
          py::arg("vertices"), py::arg("edges"), py::arg("levels") = py::none());

    m.def("induced_subgraph", [](const Graph& g, std::vector<Label> vs) {
        return induced_subgraph(g, vs);
    });

    m.def("signature", [](const Graph& g, std::vector<Label> members, Label v) {
        return signature(g, as_set(members), v).in_set_neighbors;
    });

    m.def("check", [](const Graph& g, std::vector<Label> members, const std::string& variant) {
        Certificate cert = check(g, as_set(members), variant_from_token(variant));
        py::list witnesses;
        for (const auto& w : cert.witnesses) {
            const char* kind = w.kind == Violation::Kind::Undominated     ? "undominated"
                               : w.kind == Violation::Kind::IsolatedInSet ? "isolated-in-set"
                                                                          : "signature-clash";
            if (w.kind == Violation::Kind::SignatureClash)
                witnesses.append(py::make_tuple(kind, w.u, w.v));
            else
                witnesses.append(py::make_tuple(kind, w.u));
        }
        py::dict d;
        d["valid"] = cert.valid;
        d["witnesses"] = witnesses;
        return d;
    });

    m.def("count_in_levels",
          [](const Graph& g, std::vector<Label> members, std::vector<int> levels) {
              return count_in_levels(g, as_set(members), levels);
          });

    m.def("oracle_minimum", [](const Graph& g, const std::string& variant) {
        return solve_result_to_dict(oracle_minimum(g, variant_from_token(variant)));
    });

    m.def("solve_minimum",
          [](const Graph& g, const std::string& variant, double time_limit, int workers,
             bool deterministic) {
              SolveOptions opts;
              opts.time_limit =
                  std::chrono::milliseconds(static_cast<long long>(time_limit * 1000));
              opts.workers = workers;
              opts.deterministic = deterministic;
              return solve_result_to_dict(
                  solve_minimum(g, variant_from_token(variant), opts));
          },
          py::arg("graph"), py::arg("variant"), py::arg("time_limit") = 0.0,
          py::arg("workers") = 1, py::arg("deterministic") = true);

    m.def("enumerate_minimum_sets",
          [](const Graph& g, const std::string& variant, std::size_t cap) {
              auto res = enumerate_minimum_sets(g, variant_from_token(variant), cap);
              py::list sets;
              for (const auto& s : res.sets) sets.append(s.members);
              py::dict d;
              if (res.value >= 0)
                  d["value"] = res.value;
              else
                  d["value"] = py::none();
              d["sets"] = sets;
              d["truncated"] = res.truncated;
              return d;
          },
          py::arg("graph"), py::arg("variant"), py::arg("cap") = 1 << 20);

    m.def("closed_form", [](const std::string& family, const std::string& variant, int n) {
        return big_to_py(
            closed_form(family_from_token(family), variant_from_token(variant), n).value);
    });

    m.def("lemma_table", []() {
        py::list rows;
        for (const auto& e : lemma_table())
            rows.append(py::make_tuple(family_token(e.graph.family), e.graph.levels,
                                       variant_token(e.variant), e.value));
        return rows;
    });

    m.def("construct", [](const std::string& family, const std::string& variant, int n) {
        return construct(family_from_token(family), variant_from_token(variant), n).members;
    });

    m.def("dominating_level_pattern", [](const std::string& family, int n, bool total) {
        return dominating_level_pattern(family_from_token(family), n, total).members;
    });

    m.def("decompose_bottom",
          [](const Graph& g, const std::string& family, int n, const std::string& kind) {
              CopyKind ck = kind == "ht-star-2"   ? CopyKind::HTStar2
                            : kind == "ht-star-3" ? CopyKind::HTStar3
                                                  : CopyKind::TerminalTriangle;
              py::list out;
              for (const auto& c : decompose_bottom(g, {family_from_token(family), n}, ck)) {
                  py::dict d;
                  d["kind"] = copy_kind_token(c.kind);
                  d["vertices"] = c.vertices;
                  d["top_pair"] = c.top_pair;
                  d["correspondence"] = c.correspondence;
                  out.append(std::move(d));
              }
              return out;
          });

    m.def("audit", [](const std::string& claim_id, std::vector<std::string> families,
                      int n_lo, int n_hi) {
        std::vector<Family> fams;
        for (const auto& f : families) fams.push_back(family_from_token(f));
        py::list out;
        for (const auto& f : audit(claim_id, fams, n_lo, n_hi)) {
            py::dict d;
            d["claim_id"] = f.claim_id;
            d["quote"] = f.quote;
            d["family"] = family_token(f.instance.family);
            d["n"] = f.instance.levels;
            d["status"] = f.status == FindingStatus::Confirmed ? "confirmed"
                          : f.status == FindingStatus::Refuted ? "refuted"
                                                               : "skipped";
            d["claimed_bound"] = f.claimed_bound;
            if (f.counterexample)
                d["counterexample"] = f.counterexample->members;
            else
                d["counterexample"] = py::none();
            out.append(std::move(d));
        }
        return out;
    }, py::arg("claim_id") = "all",
       py::arg("families") = std::vector<std::string>{"ht", "st"},
       py::arg("n_lo") = 2, py::arg("n_hi") = 3);

    m.def("to_dot", [](const Graph& g, const std::string& family, int n) {
        return to_dot(g, {family_from_token(family), n});
    });
    m.def("to_json", [](const Graph& g, const std::string& family, int n) {
        return to_json(g, {family_from_token(family), n});
    });
    m.def("to_edgelist", [](const Graph& g) { return to_edgelist(g); });
    m.def("graph_from_json", [](const std::string& text) {
        auto [g, spec] = graph_from_json(text);
        return py::make_tuple(std::move(g), family_token(spec.family), spec.levels);
    });
}
