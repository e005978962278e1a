// rainbow.hpp — rainbow-vertex-path existence, rainbow/locating coloring
// verification, and rainbow codes (distance vectors to color classes).
#pragma once

#include "rvclab/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rvclab {

enum class Target { Rvc, Rvcl };
std::string to_string(Target t);
Target target_from_string(const std::string& s);

// Total surjective assignment of colors 1..k.
struct VertexColoring {
    int k = 0;
    std::vector<int> colors;  // vertex id -> color

    // Validates totality, range and surjectivity.
    static VertexColoring make(int k, std::vector<int> colors);
    // Compacts the used colors to 1..k' preserving numeric order; a
    // non-surjective candidate becomes a coloring on its used-color count.
    static VertexColoring canonicalized(std::vector<int> colors);

    friend bool operator==(const VertexColoring&, const VertexColoring&) = default;
};

using RainbowCode = std::vector<int>;  // entry i-1 = distance to color class i

struct VerificationReport {
    std::optional<bool> rainbow_ok;
    std::optional<bool> locating_ok;
    std::optional<std::pair<VertexId, VertexId>> failing_pair_rainbow;
    struct LocatingFailure {
        std::pair<VertexId, VertexId> pair;
        RainbowCode code;  // the shared code of both vertices
    };
    std::optional<LocatingFailure> failing_pair_locating;
    std::vector<RainbowCode> codes;  // by vertex id; filled when codes were computed

    bool all_ok() const {
        return rainbow_ok.value_or(true) && locating_ok.value_or(true);
    }
};

// True iff some simple u-v path has pairwise distinct internal-vertex colors.
// Endpoint colors are unconstrained; adjacent pairs are trivially connected.
bool rvp_exists(const Graph& g, const VertexColoring& c, VertexId u, VertexId v);

VerificationReport is_rainbow_vertex_coloring(const Graph& g, const VertexColoring& c);

RainbowCode rainbow_code(const Graph& g, const VertexColoring& c, VertexId v,
                         const DistanceMatrix& dm);

VerificationReport is_locating(const Graph& g, const VertexColoring& c);

VerificationReport is_locating_rainbow_coloring(const Graph& g, const VertexColoring& c);

} // namespace rvclab
