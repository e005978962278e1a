// solver.hpp — exact rvc/rvcl computation by exhaustive backtracking over
// canonical surjective colorings.
//
// Canonical means restricted-growth: along the fixed assignment order a
// vertex may use color c only when c <= (max color used so far) + 1, so each
// color-permutation orbit is visited exactly once. The ladder searches
// ascending k starting at the certified lower bound; a witness at k together
// with exhausted levels below proves the exact value.
#pragma once

#include "rvclab/bounds.hpp"
#include "rvclab/graph.hpp"
#include "rvclab/rainbow.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

namespace rvclab {

struct SearchBudget {
    std::uint64_t max_nodes_per_level = 100'000'000;  // color assignments per k
    double max_seconds_total = 300.0;                 // wall clock for the whole call
};

struct SearchOptions {
    // Prune same-colored twins (sound for locating colorings only; ignored
    // for rvc).
    bool twin_prune = true;
    // Check a pair's rainbow-path feasibility as soon as every vertex that
    // could sit inside a short-enough u-v path has a color. Sound for both
    // targets: such a pair's status cannot change on completion.
    bool rainbow_prune = true;
    int workers = 1;
};

enum class LevelStatus { FoundWitness, ExhaustedNoWitness, BudgetCut };

struct LevelResult {
    LevelStatus status = LevelStatus::ExhaustedNoWitness;
    std::optional<VertexColoring> witness;
    std::uint64_t nodes = 0;
};

enum class SolveStatus { Proved, UpperWitnessOnly, BudgetExhausted };
std::string to_string(SolveStatus s);

struct SolveResult {
    Target target = Target::Rvc;
    int value = -1;  // exact when Proved, witnessed upper when UpperWitnessOnly
    std::optional<VertexColoring> witness;
    SolveStatus status = SolveStatus::BudgetExhausted;
    std::uint64_t nodes_explored = 0;
    std::chrono::milliseconds elapsed{0};
    std::string lower_bound_rule = "none";  // cite tag that certified the seed
    int bracket_lower = 0;  // value lies in [bracket_lower, bracket_upper]
    int bracket_upper = 0;
};

// One ladder level: a verifying coloring with exactly k colors, or definitive
// absence when the canonical space was exhausted.
LevelResult feasible_with_k(const Graph& g, Target target, int k,
                            const SearchBudget& budget = {},
                            const SearchOptions& options = {});

SolveResult solve_exact(const Graph& g, Target target,
                        const SearchBudget& budget = {},
                        const SearchOptions& options = {});

// Leaf count of the canonical enumeration with all validity checks and
// prunes disabled; equals the Stirling partition number S(|V|, k).
std::uint64_t count_canonical_surjective_colorings(const Graph& g, int k);

} // namespace rvclab
