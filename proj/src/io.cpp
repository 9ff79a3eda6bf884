#include "domtree/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace domtree {

std::string to_dot(const Graph& g, const FamilySpec& spec) {
    std::ostringstream out;
    std::string name = family_token(spec.family) + "_" + std::to_string(spec.levels);
    std::replace(name.begin(), name.end(), '-', '_');
    out << "graph " << name << " {\n";
    std::vector<bool> touched(g.vertex_count(), false);
    for (auto [a, b] : g.edges()) {
        out << "  " << a << " -- " << b << ";\n";
        touched[g.index_of(a)] = true;
        touched[g.index_of(b)] = true;
    }
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        if (!touched[i]) out << "  " << g.label_at(i) << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_json(const Graph& g, const FamilySpec& spec) {
    nlohmann::ordered_json j;
    j["family"] = family_token(spec.family);
    j["n"] = spec.levels;
    j["vertices"] = g.vertex_labels();
    auto edges = nlohmann::ordered_json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    j["edges"] = std::move(edges);
    auto levels = nlohmann::ordered_json::object();
    if (g.has_levels())
        for (Label v : g.vertex_labels())
            levels[std::to_string(v)] = g.level_of(v);
    j["levels"] = std::move(levels);
    return j.dump(2) + "\n";
}

std::string to_edgelist(const Graph& g) {
    std::ostringstream out;
    for (auto [a, b] : g.edges()) out << a << ' ' << b << '\n';
    return out.str();
}

std::pair<Graph, FamilySpec> graph_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    FamilySpec spec;
    spec.family = family_from_token(j.at("family").get<std::string>());
    spec.levels = j.at("n").get<int>();

    std::vector<Label> vertices = j.at("vertices").get<std::vector<Label>>();
    std::vector<std::pair<Label, Label>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("edge entries must be [a, b] pairs");
        edges.emplace_back(e[0].get<Label>(), e[1].get<Label>());
    }

    std::optional<std::vector<int>> levels;
    if (j.contains("levels") && !j["levels"].empty()) {
        std::vector<Label> sorted = vertices;
        std::sort(sorted.begin(), sorted.end());
        levels.emplace();
        levels->reserve(sorted.size());
        for (Label v : sorted) levels->push_back(j["levels"].at(std::to_string(v)).get<int>());
    }
    return {Graph::from_edges(std::move(vertices), edges, std::move(levels)), spec};
}

}  // namespace domtree
