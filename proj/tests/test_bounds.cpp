#include "rvclab/bounds.hpp"
#include "rvclab/errors.hpp"
#include "rvclab/solver.hpp"

#include <doctest.h>

using namespace rvclab;

namespace {

bool has_cite(const BoundReport& r, const char* cite_tag, int value) {
    for (const auto& j : r.justifications)
        if (j.cite == cite_tag && j.value == value)
            return true;
    return false;
}

} // namespace

TEST_CASE("rvc lower bounds") {
    auto p5 = rvc_lower(Graph::path(5));
    CHECK(p5.lower == 3);
    CHECK(has_cite(p5, cite::lemma_cut, 3));
    CHECK(has_cite(p5, cite::diam, 3));

    auto k4 = rvc_lower(Graph::complete(4));
    CHECK(k4.lower == 0);

    // diameter comes from search, not a closed form
    Graph c7k2 = edge_corona(Graph::cycle(7), Graph::complete(2));
    auto r = rvc_lower(c7k2);
    CHECK(r.lower == DistanceMatrix::bfs_all_pairs(c7k2).diameter() - 1);
    CHECK(r.lower == 3);
}

TEST_CASE("rvcl lower bounds") {
    for (int m = 3; m <= 4; ++m)
        for (int n = 2; n <= 3; ++n) {
            auto r = rvcl_lower(edge_corona(Graph::path(m), Graph::complete(n)));
            CHECK(r.lower >= n + 1);
            CHECK(has_cite(r, cite::lemma_n_plus_1, n + 1));
        }

    // P_2 <> K_n is complete on n+2 vertices: one twin class of size n+2
    for (int n = 2; n <= 3; ++n) {
        auto r = rvcl_lower(edge_corona(Graph::path(2), Graph::complete(n)));
        CHECK(r.lower == n + 2);
        CHECK(has_cite(r, cite::lemma_twin, n + 2));
    }

    auto p4 = rvcl_lower(Graph::path(4));
    CHECK(p4.lower == 2);
    CHECK(has_cite(p4, cite::lemma_twin, 1));
    CHECK(has_cite(p4, cite::eq1, 2));
    // all classes are singletons, so two equal classes contribute only 2
    CHECK(has_cite(p4, cite::lemma_two_classes, 2));
}

TEST_CASE("corona upper bound") {
    CHECK(rvcl_upper_corona(3, 2, 2) == 6);
    // tree cores have m-1 edges: 2m+n-2
    for (int m = 2; m <= 5; ++m)
        for (int n = 2; n <= 4; ++n)
            CHECK(rvcl_upper_corona(m, n, m - 1) == 2 * m + n - 2);
    CHECK(rvcl_upper_corona(2, 3, 1) == 5);  // K_5 needs 5
    CHECK_THROWS_AS(rvcl_upper_corona(1, 2, 1), InvalidParameter);
    CHECK_THROWS_AS(rvcl_upper_corona(3, 1, 2), InvalidParameter);
    CHECK_THROWS_AS(rvcl_upper_corona(3, 2, 0), InvalidParameter);
}

TEST_CASE("bound reports are internally consistent") {
    std::vector<Graph> corpus = {
        Graph::path(6),
        Graph::cycle(5),
        Graph::complete(4),
        edge_corona(Graph::path(3), Graph::complete(2)),
        edge_corona(Graph::cycle(4), Graph::complete(2)),
    };
    for (const Graph& g : corpus) {
        for (const BoundReport& r : {rvc_lower(g), rvcl_lower(g)}) {
            int max_just = 0;
            for (const auto& j : r.justifications) {
                CHECK(j.value <= r.lower);
                max_just = std::max(max_just, j.value);
            }
            CHECK(r.lower == max_just);
            CHECK_FALSE(r.upper.has_value());
        }
    }
}

TEST_CASE("sandwich: lower <= exact <= corona upper, and rvcl >= rvc") {
    struct Cell {
        int m, n;
        Graph g;
    };
    std::vector<Cell> cells;
    for (int n = 2; n <= 3; ++n) {
        cells.push_back({2, n, edge_corona(Graph::path(2), Graph::complete(n))});
        cells.push_back({3, n, edge_corona(Graph::path(3), Graph::complete(n))});
        cells.push_back({3, n, edge_corona(Graph::cycle(3), Graph::complete(n))});
    }
    cells.push_back({4, 2, edge_corona(Graph::cycle(4), Graph::complete(2))});
    cells.push_back({3, 2, edge_corona(Graph::complete(3), Graph::complete(2))});

    for (const auto& cell : cells) {
        REQUIRE(cell.g.vertex_count() <= 15);
        auto exact_rvcl = solve_exact(cell.g, Target::Rvcl);
        auto exact_rvc = solve_exact(cell.g, Target::Rvc);
        REQUIRE(exact_rvcl.status == SolveStatus::Proved);
        REQUIRE(exact_rvc.status == SolveStatus::Proved);

        CHECK(rvcl_lower(cell.g).lower <= exact_rvcl.value);
        CHECK(rvc_lower(cell.g).lower <= exact_rvc.value);
        CoronaShape shape;
        REQUIRE(detect_complete_flare_corona(cell.g, shape));
        CHECK(exact_rvcl.value <= rvcl_upper_corona(shape.m, shape.n, shape.core_edges));
        CHECK(exact_rvcl.value >= exact_rvc.value);
    }
}
