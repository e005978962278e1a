#include "rvclab/bounds.hpp"
#include "rvclab/errors.hpp"

#include <algorithm>
#include <map>

namespace rvclab {

std::string BoundReport::lower_rule() const {
    for (const auto& j : justifications)
        if (j.value == lower)
            return j.cite;
    return "none";
}

BoundReport rvc_lower(const Graph& g) {
    BoundReport report;
    report.target = Target::Rvc;
    auto dm = DistanceMatrix::bfs_all_pairs(g);
    int cuts = static_cast<int>(cut_vertices(g).size());
    int diam = dm.diameter();
    report.justifications.push_back({cuts, "cut-vertex-count", cite::lemma_cut});
    report.justifications.push_back({std::max(diam - 1, 0), "diameter-minus-one", cite::diam});
    report.lower = 0;
    for (const auto& j : report.justifications)
        report.lower = std::max(report.lower, j.value);
    return report;
}

BoundReport rvcl_lower(const Graph& g) {
    BoundReport report;
    report.target = Target::Rvcl;
    BoundReport rvc = rvc_lower(g);
    report.justifications.push_back({rvc.lower, "rvc-lower-bound", cite::eq1});

    auto tp = twin_classes(g);
    report.justifications.push_back(
        {tp.largest_class_size(), "largest-twin-class", cite::lemma_twin});

    // two disjoint classes of equal size t force t+1 colors; sizes repeat
    // inside a partition exactly when two disjoint classes of that size exist
    std::map<int, int> size_count;
    for (const auto& c : tp.classes)
        ++size_count[static_cast<int>(c.size())];
    int best_pair = 0;
    for (auto [size, count] : size_count)
        if (count >= 2)
            best_pair = std::max(best_pair, size);
    if (best_pair > 0)
        report.justifications.push_back(
            {best_pair + 1, "two-equal-twin-classes", cite::lemma_two_classes});

    CoronaShape shape;
    if (detect_complete_flare_corona(g, shape))
        report.justifications.push_back(
            {shape.n + 1, "complete-flare-corona", cite::lemma_n_plus_1});

    report.lower = 0;
    for (const auto& j : report.justifications)
        report.lower = std::max(report.lower, j.value);
    return report;
}

int rvcl_upper_corona(int m, int n, int core_edges) {
    if (m < 2 || n < 2 || core_edges < 1)
        throw InvalidParameter("rvcl_upper_corona needs m >= 2, n >= 2, core_edges >= 1");
    return m + n + core_edges - 1;
}

} // namespace rvclab
