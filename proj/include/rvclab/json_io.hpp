// json_io.hpp — JSON and DOT serialization for graphs, colorings, reports,
// bounds and solve results. Emitted JSON uses insertion-ordered keys so a
// fixed input always produces identical bytes.
#pragma once

#include "rvclab/bounds.hpp"
#include "rvclab/constructions.hpp"
#include "rvclab/graph.hpp"
#include "rvclab/rainbow.hpp"
#include "rvclab/solver.hpp"

#include <json.hpp>

#include <string>

namespace rvclab {

using ordered_json = nlohmann::ordered_json;

ordered_json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Undirected DOT, vertex name = label, color attribute when a coloring is
// supplied.
std::string graph_to_dot(const Graph& g, const VertexColoring* coloring = nullptr);

ordered_json coloring_to_json(const VertexColoring& c);
// Validates totality against the graph and color range, then canonicalizes.
VertexColoring coloring_from_json(const nlohmann::json& j, const Graph& g);

ordered_json report_to_json(const VerificationReport& r);
ordered_json bound_report_to_json(const BoundReport& r);
ordered_json solve_result_to_json(const SolveResult& r);
ordered_json predicted_to_json(const PredictedValue& p);

} // namespace rvclab
