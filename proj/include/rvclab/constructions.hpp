// constructions.hpp — closed-form predicted values for the supported corona
// families and deterministic generators for their constructive colorings.
//
// Generators transcribe the published closed-form rules as printed. When a
// rule emits an invalid coloring at some size, that is surfaced by the
// verifier (and listed in known_errata()), never patched here.
#pragma once

#include "rvclab/graph.hpp"
#include "rvclab/rainbow.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rvclab {

struct FamilySpec {
    enum class Core { Path, Cycle, Complete, Tree };
    enum class Flare { Complete, General };

    Core core = Core::Path;
    int m = 0;
    std::vector<std::pair<int, int>> tree_edges;  // Core::Tree only, 1-based
    Flare flare = Flare::Complete;
    int n = 0;
    std::optional<Graph> flare_graph;  // Flare::General only

    static FamilySpec path(int m, int n);
    static FamilySpec cycle(int m, int n);
    static FamilySpec complete(int m, int n);
    static FamilySpec tree(std::vector<std::pair<int, int>> edges, int n);

    Graph build_core() const;
    Graph build_flare() const;
    Graph build_corona() const;
};

struct PredictedValue {
    Target target = Target::Rvc;
    std::optional<int> value;                   // exact when a formula applies
    std::optional<std::pair<int, int>> bounds;  // otherwise a [lower, upper] pair
    std::string branch;
};

// Branch-resolved predicted value; throws UnsupportedSpec outside every
// supported domain. rvc values of bare path/tree cores are solver-computed
// and cached, never hardcoded.
PredictedValue predict(const FamilySpec& spec, Target target);

// All-distinct core plus a sliding window of n fresh-ish colors per flare;
// uses exactly m + n + |E(core)| - 1 colors on core <> K_n.
VertexColoring color_upper_general(const Graph& core, int n);

// Cut vertices get distinct colors, everything else color 1; rainbow-valid
// on tree <> H with max(#cut vertices, 1) colors.
VertexColoring color_tree_rvc(const Graph& core_tree, const Graph& flare);

// max{rvc(P_m), n+2}-coloring of P_m <> K_n (m = 2 yields the all-distinct
// coloring of K_{n+2}).
VertexColoring color_path_rvcl(int m, int n);

// 1 color for m = 3, otherwise ceil(m/2) colors on C_m <> H.
VertexColoring color_cycle_rvc(int m, const Graph& flare);

// Branch-resolved coloring of C_m <> K_n at the predicted color count. The
// six mid-range instances (m <= 6 with ceil(m/2)-1 <= n < m-1) use frozen
// explicit tables; larger m uses the printed piecewise formulas and throws
// FormulaCoverageError on any (flare, copy) pair they leave uncovered.
VertexColoring color_cycle_rvcl(int m, int n);

// ceil(m/3) colors on K_m <> H; flares all get color 1.
VertexColoring color_complete_rvc(int m, const Graph& flare);

// Core vertex i gets color i; flare p on core edge {i,j} gets a size-n color
// set containing {i,j}, all sets pairwise distinct, chosen in colexicographic
// order with backtracking; colors within a flare ascend with the copy index.
// Palette is n+1 when n >= |E(K_m)|-1, else n+2. Domain 3 <= m <= n.
VertexColoring color_complete_rvcl(int m, int n);

// Published coloring rules known to emit invalid colorings at specific
// sizes. The predicted values at these cells still match the exact solver;
// the reproduce harness reports the cells as CONSTRUCTION_FAILS.
struct KnownErratum {
    std::string rule;  // color selector name
    int m;             // -1 matches any
    int n;             // -1 matches any
    std::string note;
};
std::span<const KnownErratum> known_errata();
bool is_known_erratum(const std::string& rule, int m, int n);

namespace detail {
// Distinct size-`set_size` subsets of [1..palette], one per edge, each
// containing its edge's endpoint colors; colex candidate order, backtracking
// across edges. Throws InfeasibleAssignment when no family exists.
std::vector<std::vector<int>> assign_flare_color_sets(
    const std::vector<std::pair<int, int>>& edges, int palette, int set_size);
} // namespace detail

} // namespace rvclab
