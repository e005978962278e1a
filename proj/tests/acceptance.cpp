// acceptance.cpp — the acceptance suite. Each criterion prints one PASS/FAIL
// line; run via `ctest -R acceptance` or directly with `-s` for the summary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rvclab/bounds.hpp"
#include "rvclab/constructions.hpp"
#include "rvclab/reproduce.hpp"
#include "rvclab/solver.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>

using namespace rvclab;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int criterion, const char* what, bool pass, double seconds) {
    std::printf("[%s] criterion %d: %s (%.2fs)\n", pass ? "PASS" : "FAIL", criterion, what,
                seconds);
    std::fflush(stdout);
}

int exact(const Graph& g, Target target) {
    auto r = solve_exact(g, target);
    REQUIRE(r.status == SolveStatus::Proved);
    return r.value;
}

} // namespace

TEST_CASE("criterion 1: complete-graph baseline") {
    Timer timer;
    bool pass = true;
    for (int q = 3; q <= 5; ++q)
        pass = pass && exact(Graph::complete(q), Target::Rvcl) == q;
    double s = timer.seconds();
    report(1, "rvcl(K_q) = q for q in {3,4,5}", pass && s < 5.0, s);
    CHECK(pass);
    CHECK(s < 5.0);
}

TEST_CASE("criterion 2: path formula") {
    Timer timer;
    bool pass = true;
    for (int m = 2; m <= 4; ++m) {
        int rvc_pm = exact(Graph::path(m), Target::Rvc);
        for (int n = 2; n <= 3; ++n) {
            int value = exact(edge_corona(Graph::path(m), Graph::complete(n)), Target::Rvcl);
            pass = pass && value == std::max(rvc_pm, n + 2);
        }
    }
    double s = timer.seconds();
    report(2, "rvcl(P_m <> K_n) = max{rvc(P_m), n+2} on {2..4}x{2..3}", pass && s < 60.0, s);
    CHECK(pass);
    CHECK(s < 60.0);
}

TEST_CASE("criterion 3: cycle rvc formula") {
    Timer timer;
    bool pass = true;
    for (int m = 3; m <= 7; ++m) {
        int value = exact(edge_corona(Graph::cycle(m), Graph::complete(2)), Target::Rvc);
        pass = pass && value == (m == 3 ? 1 : (m + 1) / 2);
    }
    double s = timer.seconds();
    report(3, "rvc(C_m <> K_2) = 1 or ceil(m/2) for m in [3,7]", pass && s < 30.0, s);
    CHECK(pass);
    CHECK(s < 30.0);
}

TEST_CASE("criterion 4: cycle rvcl mid branch") {
    Timer timer;
    SearchBudget defaults;
    auto c4 = solve_exact(edge_corona(Graph::cycle(4), Graph::complete(2)), Target::Rvcl);
    auto c5 = solve_exact(edge_corona(Graph::cycle(5), Graph::complete(2)), Target::Rvcl);
    bool pass = c4.status == SolveStatus::Proved && c4.value == 4 &&
                c5.status == SolveStatus::Proved && c5.value == 4 &&
                c5.nodes_explored < defaults.max_nodes_per_level;
    double s = timer.seconds();
    report(4, "rvcl(C_4 <> K_2) = rvcl(C_5 <> K_2) = 4 within the default node budget", pass, s);
    CHECK(pass);
}

TEST_CASE("criterion 5: complete rvcl formula") {
    Timer timer;
    bool pass = true;
    for (int n = 3; n <= 4; ++n)
        pass = pass &&
               exact(edge_corona(Graph::complete(3), Graph::complete(n)), Target::Rvcl) == n + 1;
    double s = timer.seconds();
    report(5, "rvcl(K_3 <> K_n) = n+1 for n in {3,4}", pass && s < 120.0, s);
    CHECK(pass);
    CHECK(s < 120.0);
}

TEST_CASE("criterion 6: construction validity over the default grid") {
    Timer timer;
    bool pass = true;
    auto check_cell = [&](const std::string& rule, int predicted, const Graph& corona,
                          const VertexColoring& coloring, bool locating, int m, int n) {
        bool count_ok = coloring.k == predicted;
        bool valid = count_ok && (locating ? is_locating_rainbow_coloring(corona, coloring).all_ok()
                                           : *is_rainbow_vertex_coloring(corona, coloring).rainbow_ok);
        if (valid)
            return;
        // a failing cell must be a documented defect with the predicted value
        // solver-certified
        bool whitelisted = is_known_erratum(rule, m, n);
        bool certified = whitelisted && corona.vertex_count() <= 18 &&
                         exact(corona, locating ? Target::Rvcl : Target::Rvc) == predicted;
        if (!certified) {
            std::printf("  construction fails unexpectedly: %s m=%d n=%d\n", rule.c_str(), m, n);
            pass = false;
        }
    };

    for (int m = 2; m <= 4; ++m)
        for (int n = 2; n <= 3; ++n) {
            Graph core = Graph::path(m);
            Graph corona = edge_corona(core, Graph::complete(n));
            check_cell("path-rvcl", *predict(FamilySpec::path(m, n), Target::Rvcl).value, corona,
                       color_path_rvcl(m, n), true, m, n);
            check_cell("upper-general", m + n + core.edge_count() - 1, corona,
                       color_upper_general(core, n), true, m, n);
            check_cell("tree-rvc", *predict(FamilySpec::path(m, n), Target::Rvc).value, corona,
                       color_tree_rvc(core, Graph::complete(n)), false, m, n);
        }
    for (int m = 3; m <= 6; ++m)
        for (int n = 2; n <= 3; ++n) {
            Graph core = Graph::cycle(m);
            Graph corona = edge_corona(core, Graph::complete(n));
            check_cell("cycle-rvc", *predict(FamilySpec::cycle(m, n), Target::Rvc).value, corona,
                       color_cycle_rvc(m, Graph::complete(n)), false, m, n);
            check_cell("cycle-rvcl", *predict(FamilySpec::cycle(m, n), Target::Rvcl).value, corona,
                       color_cycle_rvcl(m, n), true, m, n);
            check_cell("upper-general", m + n + core.edge_count() - 1, corona,
                       color_upper_general(core, n), true, m, n);
        }
    for (int n = 3; n <= 4; ++n) {
        Graph core = Graph::complete(3);
        Graph corona = edge_corona(core, Graph::complete(n));
        check_cell("complete-rvcl", *predict(FamilySpec::complete(3, n), Target::Rvcl).value,
                   corona, color_complete_rvcl(3, n), true, 3, n);
        check_cell("complete-rvc", *predict(FamilySpec::complete(3, n), Target::Rvc).value, corona,
                   color_complete_rvc(3, Graph::complete(n)), false, 3, n);
        check_cell("upper-general", 3 + n + core.edge_count() - 1, corona,
                   color_upper_general(core, n), true, 3, n);
    }
    double s = timer.seconds();
    report(6, "every generator is valid on the default grid (or is a certified defect)", pass, s);
    CHECK(pass);
}

TEST_CASE("criterion 7: bounds sandwich on every solved instance") {
    Timer timer;
    bool pass = true;
    std::vector<Graph> instances;
    for (int m = 2; m <= 4; ++m)
        for (int n = 2; n <= 3; ++n)
            instances.push_back(edge_corona(Graph::path(m), Graph::complete(n)));
    instances.push_back(edge_corona(Graph::cycle(3), Graph::complete(2)));
    instances.push_back(edge_corona(Graph::cycle(4), Graph::complete(2)));
    instances.push_back(edge_corona(Graph::cycle(5), Graph::complete(2)));
    instances.push_back(edge_corona(Graph::complete(3), Graph::complete(3)));
    instances.push_back(edge_corona(Graph::complete(3), Graph::complete(2)));

    for (const Graph& g : instances) {
        if (g.vertex_count() > 15)
            continue;
        int rvcl_value = exact(g, Target::Rvcl);
        int rvc_value = exact(g, Target::Rvc);
        pass = pass && rvcl_lower(g).lower <= rvcl_value;
        pass = pass && rvc_lower(g).lower <= rvc_value;
        pass = pass && rvcl_value >= rvc_value;
        CoronaShape shape;
        if (detect_complete_flare_corona(g, shape))
            pass = pass && rvcl_value <= rvcl_upper_corona(shape.m, shape.n, shape.core_edges);
    }
    double s = timer.seconds();
    report(7, "lower <= exact <= upper and rvcl >= rvc, zero violations", pass, s);
    CHECK(pass);
}

TEST_CASE("criterion 8: oracle equivalences") {
    Timer timer;
    bool pass = true;

    // rainbow-path search vs the all-simple-paths brute force
    std::mt19937 rng(2024);
    for (int round = 0; round < 200; ++round) {
        Graph g = oracle::random_connected_graph(rng, 4 + static_cast<int>(rng() % 7),
                                                 static_cast<int>(rng() % 6));
        VertexColoring c = oracle::random_coloring(rng, g.vertex_count());
        for (VertexId u = 0; u < g.vertex_count() && pass; ++u)
            for (VertexId v = u + 1; v < g.vertex_count(); ++v)
                if (rvp_exists(g, c, u, v) != oracle::rvp_brute_force(g, c, u, v)) {
                    pass = false;
                    break;
                }
    }

    // canonical enumeration vs Stirling numbers
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k <= std::min(n, 4); ++k)
            pass = pass && count_canonical_surjective_colorings(Graph::path(n), k) ==
                               oracle::stirling_second(n, k);

    // BFS distances vs Floyd-Warshall
    std::vector<Graph> corpus = {
        edge_corona(Graph::path(3), Graph::complete(2)),
        edge_corona(Graph::cycle(4), Graph::complete(2)),
        edge_corona(Graph::complete(3), Graph::complete(2)),
        Graph::tree({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}}),
    };
    for (const Graph& g : corpus) {
        auto dm = DistanceMatrix::bfs_all_pairs(g);
        auto fw = oracle::floyd_warshall(g);
        for (VertexId u = 0; u < g.vertex_count(); ++u)
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                pass = pass && dm.at(u, v) == fw[u][v];
    }

    double s = timer.seconds();
    report(8, "rvp vs brute force, canonical counts vs Stirling, BFS vs Floyd-Warshall", pass, s);
    CHECK(pass);
}

TEST_CASE("criterion 9: corona rvc dominates the core rvc") {
    Timer timer;
    bool pass = true;
    std::vector<Graph> cores;
    for (int m = 2; m <= 4; ++m)
        cores.push_back(Graph::path(m));
    cores.push_back(Graph::cycle(3));
    cores.push_back(Graph::cycle(4));
    cores.push_back(Graph::complete(3));
    cores.push_back(Graph::tree({{1, 2}, {1, 3}, {1, 4}}));
    std::vector<Graph> flares = {Graph::complete(2), Graph::complete(3), Graph::path(3)};

    for (const Graph& core : cores)
        for (const Graph& flare : flares) {
            Graph corona = edge_corona(core, flare);
            if (corona.vertex_count() > 15)
                continue;
            pass = pass && exact(corona, Target::Rvc) >= exact(core, Target::Rvc);
        }
    double s = timer.seconds();
    report(9, "rvc(G <> H) >= rvc(G) on all corpus pairs up to 15 vertices", pass, s);
    CHECK(pass);
}
