#include "rvclab/json_io.hpp"
#include "rvclab/errors.hpp"

#include <sstream>

namespace rvclab {

ordered_json graph_to_json(const Graph& g) {
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        j["vertices"].push_back({{"id", v}, {"label", g.label(v).str()}});
    j["edges"] = ordered_json::array();
    for (auto [a, b] : g.edges())
        j["edges"].push_back({a, b});
    return j;
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw InvalidParameter("graph JSON needs 'vertices' and 'edges'");
    const auto& vs = j.at("vertices");
    std::vector<VertexLabel> labels(vs.size());
    std::vector<char> seen(vs.size(), 0);
    for (const auto& v : vs) {
        int id = v.at("id").get<int>();
        if (id < 0 || id >= static_cast<int>(vs.size()) || seen[id])
            throw InvalidParameter("vertex ids must be unique and cover 0..|V|-1");
        seen[id] = 1;
        labels[id] = VertexLabel::parse(v.at("label").get<std::string>());
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw InvalidParameter("each edge must be a pair of vertex ids");
        edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    }
    return Graph::from_parts(std::move(labels), std::move(edges));
}

std::string graph_to_dot(const Graph& g, const VertexColoring* coloring) {
    std::ostringstream os;
    os << "graph G {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        os << "  \"" << g.label(v).str() << "\"";
        if (coloring)
            os << " [color=" << coloring->colors[v] << "]";
        os << ";\n";
    }
    for (auto [a, b] : g.edges())
        os << "  \"" << g.label(a).str() << "\" -- \"" << g.label(b).str() << "\";\n";
    os << "}\n";
    return os.str();
}

ordered_json coloring_to_json(const VertexColoring& c) {
    ordered_json colors = ordered_json::object();
    for (size_t v = 0; v < c.colors.size(); ++v)
        colors[std::to_string(v)] = c.colors[v];
    return ordered_json{{"k", c.k}, {"colors", std::move(colors)}};
}

VertexColoring coloring_from_json(const nlohmann::json& j, const Graph& g) {
    if (!j.is_object() || !j.contains("k") || !j.contains("colors"))
        throw InvalidParameter("coloring JSON needs 'k' and 'colors'");
    int k = j.at("k").get<int>();
    if (k < 1)
        throw InvalidParameter("coloring needs k >= 1");
    const auto& colors = j.at("colors");
    std::vector<int> raw(g.vertex_count(), 0);
    std::vector<char> present(g.vertex_count(), 0);
    for (auto it = colors.begin(); it != colors.end(); ++it) {
        int id;
        try {
            id = std::stoi(it.key());
        } catch (const std::exception&) {
            throw InvalidParameter("coloring keys must be vertex ids");
        }
        if (id < 0 || id >= g.vertex_count())
            throw InvalidParameter("coloring references unknown vertex " + it.key());
        int c = it.value().get<int>();
        if (c < 1 || c > k)
            throw InvalidParameter("color out of range 1..k for vertex " + it.key());
        raw[id] = c;
        present[id] = 1;
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!present[v])
            throw InvalidParameter("coloring misses vertex " + std::to_string(v));
    return VertexColoring::canonicalized(std::move(raw));
}

ordered_json report_to_json(const VerificationReport& r) {
    ordered_json j;
    j["rainbow_ok"] = r.rainbow_ok ? ordered_json(*r.rainbow_ok) : ordered_json(nullptr);
    j["locating_ok"] = r.locating_ok ? ordered_json(*r.locating_ok) : ordered_json(nullptr);
    if (r.failing_pair_rainbow)
        j["failing_pair_rainbow"] = {r.failing_pair_rainbow->first, r.failing_pair_rainbow->second};
    else
        j["failing_pair_rainbow"] = nullptr;
    if (r.failing_pair_locating)
        j["failing_pair_locating"] = {
            {"pair", {r.failing_pair_locating->pair.first, r.failing_pair_locating->pair.second}},
            {"code", r.failing_pair_locating->code}};
    else
        j["failing_pair_locating"] = nullptr;
    j["codes"] = r.codes;
    return j;
}

ordered_json bound_report_to_json(const BoundReport& r) {
    ordered_json j;
    j["target"] = to_string(r.target);
    j["lower"] = r.lower;
    j["upper"] = r.upper ? ordered_json(*r.upper) : ordered_json(nullptr);
    j["justifications"] = ordered_json::array();
    for (const auto& just : r.justifications)
        j["justifications"].push_back(
            {{"value", just.value}, {"rule", just.rule}, {"cite", just.cite}});
    return j;
}

ordered_json solve_result_to_json(const SolveResult& r) {
    ordered_json j;
    j["target"] = to_string(r.target);
    j["value"] = r.value >= 0 ? ordered_json(r.value) : ordered_json(nullptr);
    j["status"] = to_string(r.status);
    j["witness"] = r.witness ? coloring_to_json(*r.witness) : ordered_json(nullptr);
    j["nodes"] = r.nodes_explored;
    j["elapsed_ms"] = r.elapsed.count();
    j["lower_bound_rule"] = r.lower_bound_rule;
    j["bracket"] = {r.bracket_lower, r.bracket_upper};
    return j;
}

ordered_json predicted_to_json(const PredictedValue& p) {
    ordered_json j;
    j["target"] = to_string(p.target);
    if (p.value) {
        j["value"] = *p.value;
    } else if (p.bounds) {
        j["value"] = "bounds-only";
        j["lower"] = p.bounds->first;
        j["upper"] = p.bounds->second;
    } else {
        j["value"] = nullptr;
    }
    j["branch"] = p.branch;
    return j;
}

} // namespace rvclab
