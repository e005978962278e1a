// bounds.hpp — certified lower bounds for rvc/rvcl and the corona upper
// bound, used to seed the exact solver and to sanity-check its results.
#pragma once

#include "rvclab/graph.hpp"
#include "rvclab/rainbow.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rvclab {

// Citation tags are part of the JSON interface.
namespace cite {
inline constexpr const char* eq1 = "eq1";
inline constexpr const char* lemma_cut = "lemma-cut";
inline constexpr const char* diam = "diam";
inline constexpr const char* lemma_twin = "lemma-twin";
inline constexpr const char* lemma_two_classes = "lemma-two-classes";
inline constexpr const char* lemma_n_plus_1 = "lemma-n-plus-1";
inline constexpr const char* thm_upper_corona = "thm-upper-corona";
} // namespace cite

struct BoundJustification {
    int value;
    std::string rule;  // what produced the value
    std::string cite;  // interface tag, see cite::
};

struct BoundReport {
    Target target = Target::Rvc;
    int lower = 0;
    std::optional<int> upper;
    std::vector<BoundJustification> justifications;

    // cite tag of the justification achieving `lower` (first wins on ties)
    std::string lower_rule() const;
};

// max(#cut vertices, diameter-1, 0)
BoundReport rvc_lower(const Graph& g);

// max of the rvc bound, the largest twin class, t+1 when two disjoint twin
// classes of equal size t exist, and n+1 for verified K_n-flare coronas.
BoundReport rvcl_lower(const Graph& g);

// m + n + core_edges - 1
int rvcl_upper_corona(int m, int n, int core_edges);

} // namespace rvclab
