#include "rvclab/constructions.hpp"
#include "rvclab/errors.hpp"
#include "rvclab/solver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace rvclab {

namespace {

int ceil_div(int a, int b) {
    return (a + b - 1) / b;
}

// rvc of a bare core, solver-computed once and cached
int solved_core_rvc(const Graph& core, const std::string& key) {
    static std::mutex mu;
    static std::map<std::string, int> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }
    SolveResult r = solve_exact(core, Target::Rvc);
    if (r.status != SolveStatus::Proved)
        throw InvalidParameter("core rvc did not solve within budget: " + key);
    std::lock_guard lock(mu);
    cache[key] = r.value;
    return r.value;
}

std::string tree_key(const std::vector<std::pair<int, int>>& edges) {
    std::ostringstream os;
    os << "tree";
    for (auto [a, b] : edges)
        os << ":" << std::min(a, b) << "-" << std::max(a, b);
    return os.str();
}

} // namespace

FamilySpec FamilySpec::path(int m, int n) {
    FamilySpec s;
    s.core = Core::Path;
    s.m = m;
    s.n = n;
    return s;
}

FamilySpec FamilySpec::cycle(int m, int n) {
    FamilySpec s;
    s.core = Core::Cycle;
    s.m = m;
    s.n = n;
    return s;
}

FamilySpec FamilySpec::complete(int m, int n) {
    FamilySpec s;
    s.core = Core::Complete;
    s.m = m;
    s.n = n;
    return s;
}

FamilySpec FamilySpec::tree(std::vector<std::pair<int, int>> edges, int n) {
    FamilySpec s;
    s.core = Core::Tree;
    s.tree_edges = std::move(edges);
    s.m = 0;
    for (auto [a, b] : s.tree_edges)
        s.m = std::max({s.m, a, b});
    s.n = n;
    return s;
}

Graph FamilySpec::build_core() const {
    switch (core) {
        case Core::Path: return Graph::path(m);
        case Core::Cycle: return Graph::cycle(m);
        case Core::Complete: return Graph::complete(m);
        default: return Graph::tree(tree_edges);
    }
}

Graph FamilySpec::build_flare() const {
    if (flare == Flare::General) {
        if (!flare_graph)
            throw InvalidParameter("general flare needs a graph");
        return *flare_graph;
    }
    return Graph::complete(n);
}

Graph FamilySpec::build_corona() const {
    return edge_corona(build_core(), build_flare());
}

PredictedValue predict(const FamilySpec& spec, Target target) {
    const int m = spec.m;
    const int n = spec.flare == FamilySpec::Flare::General && spec.flare_graph
                      ? spec.flare_graph->vertex_count()
                      : spec.n;
    if (n < 2)
        throw UnsupportedSpec("flare order must be at least 2");

    PredictedValue p;
    p.target = target;

    if (target == Target::Rvc) {
        switch (spec.core) {
            case FamilySpec::Core::Path:
                if (m < 2)
                    throw UnsupportedSpec("path needs m >= 2");
                p.value = solved_core_rvc(Graph::path(m), "path:" + std::to_string(m));
                p.branch = "tree-core-rvc";
                return p;
            case FamilySpec::Core::Tree:
                p.value = solved_core_rvc(Graph::tree(spec.tree_edges), tree_key(spec.tree_edges));
                p.branch = "tree-core-rvc";
                return p;
            case FamilySpec::Core::Cycle:
                if (m < 3)
                    throw UnsupportedSpec("cycle needs m >= 3");
                p.value = m == 3 ? 1 : ceil_div(m, 2);
                p.branch = m == 3 ? "cycle-rvc-m3" : "cycle-rvc-half";
                return p;
            case FamilySpec::Core::Complete:
                if (m < 2)
                    throw UnsupportedSpec("complete core needs m >= 2");
                if (m == 2) {  // K_2 core is the two-vertex tree
                    p.value = solved_core_rvc(Graph::path(2), "path:2");
                    p.branch = "tree-core-rvc";
                    return p;
                }
                p.value = ceil_div(m, 3);
                p.branch = "complete-rvc-third";
                return p;
        }
    }

    if (spec.flare != FamilySpec::Flare::Complete)
        throw UnsupportedSpec("rvcl formulas need a complete-graph flare");

    switch (spec.core) {
        case FamilySpec::Core::Path: {
            if (m < 2)
                throw UnsupportedSpec("path needs m >= 2");
            int rvc_core = solved_core_rvc(Graph::path(m), "path:" + std::to_string(m));
            p.value = std::max(rvc_core, n + 2);
            p.branch = "path-rvcl-max";
            return p;
        }
        case FamilySpec::Core::Tree: {
            if (m == 2) {  // single edge: the corona is K_{n+2}
                p.value = n + 2;
                p.branch = "path-rvcl-max";
                return p;
            }
            int rvc_core = solved_core_rvc(Graph::tree(spec.tree_edges), tree_key(spec.tree_edges));
            p.bounds = {std::max(rvc_core, n + 2), 2 * m + n - 2};
            p.branch = "tree-rvcl-bounds";
            return p;
        }
        case FamilySpec::Core::Cycle: {
            if (m < 3)
                throw UnsupportedSpec("cycle needs m >= 3");
            int half = ceil_div(m, 2);
            if (m == 3 || n >= m - 1) {
                p.value = n + 1;
                p.branch = "cycle-rvcl-n-plus-1";
            } else if (n >= half - 1) {
                p.value = std::max(half + 1, n + 2);
                p.branch = "cycle-rvcl-mid";
            } else {
                p.value = half;
                p.branch = "cycle-rvcl-half";
            }
            return p;
        }
        case FamilySpec::Core::Complete: {
            if (m == 2) {
                p.value = n + 2;
                p.branch = "path-rvcl-max";
                return p;
            }
            if (m < 3 || m > n)
                throw UnsupportedSpec("complete-core rvcl needs 3 <= m <= n");
            int core_edges = m * (m - 1) / 2;
            if (n >= core_edges - 1) {
                p.value = n + 1;
                p.branch = "complete-rvcl-n-plus-1";
            } else {
                p.value = n + 2;
                p.branch = "complete-rvcl-n-plus-2";
            }
            return p;
        }
    }
    throw UnsupportedSpec("unreachable family");
}

VertexColoring color_upper_general(const Graph& core, int n) {
    if (n < 2)
        throw InvalidParameter("flare order must be at least 2");
    if (core.edge_count() < 1)
        throw InvalidParameter("core needs at least one edge");
    const int m = core.vertex_count();
    const int ec = core.edge_count();
    std::vector<int> raw(m + ec * n);
    for (int i = 1; i <= m; ++i)
        raw[i - 1] = i;
    for (int j = 1; j <= ec; ++j)
        for (int t = 1; t <= n; ++t)
            raw[m + (j - 1) * n + (t - 1)] = m + j + t - 1;
    return VertexColoring::canonicalized(std::move(raw));
}

VertexColoring color_tree_rvc(const Graph& core_tree, const Graph& flare) {
    if (core_tree.edge_count() != core_tree.vertex_count() - 1)
        throw InvalidParameter("core must be a tree");
    Graph corona = edge_corona(core_tree, flare);
    auto cuts = cut_vertices(corona);
    std::vector<int> raw(corona.vertex_count(), 1);
    int next = 0;
    for (VertexId v : cuts)
        raw[v] = ++next;
    return VertexColoring::canonicalized(std::move(raw));
}

VertexColoring color_path_rvcl(int m, int n) {
    if (m < 2 || n < 2)
        throw InvalidParameter("path rvcl coloring needs m >= 2, n >= 2");
    if (m == 2) {
        std::vector<int> raw(n + 2);
        for (int i = 0; i < n + 2; ++i)
            raw[i] = i + 1;
        return VertexColoring::canonicalized(std::move(raw));
    }
    const int k = std::max(solved_core_rvc(Graph::path(m), "path:" + std::to_string(m)), n + 2);
    std::vector<int> raw(m + (m - 1) * n);
    raw[0] = 1;
    raw[m - 1] = m - 2;
    for (int i = 2; i <= m - 1; ++i)
        raw[i - 1] = i - 1;
    for (int i = 1; i <= m - 1; ++i)
        for (int j = 1; j <= n; ++j)
            raw[m + (i - 1) * n + (j - 1)] = i == 1 ? j + 1 : ((i + j - 2) % k) + 1;
    return VertexColoring::canonicalized(std::move(raw));
}

VertexColoring color_cycle_rvc(int m, const Graph& flare) {
    if (m < 3)
        throw InvalidParameter("cycle needs m >= 3");
    const int n = flare.vertex_count();
    const int half = ceil_div(m, 2);
    std::vector<int> raw(m + m * n, 1);
    if (m > 3)
        for (int i = 1; i <= m; ++i)
            raw[i - 1] = ((i - 1) % half) + 1;
    return VertexColoring::canonicalized(std::move(raw));
}

namespace {

// Explicit colorings for the six mid-range cycle instances (the general
// formulas start at m = 7). Vertex order: cores, then flares by (edge, copy).
// Each table is a search-certified coloring at the predicted color count.
const std::map<std::pair<int, int>, std::vector<int>>& cycle_mid_tables() {
    static const std::map<std::pair<int, int>, std::vector<int>> tables = {
        {{4, 2}, {1, 1, 1, 2, 1, 2, 1, 2, 2, 3, 2, 4}},
        {{5, 2}, {1, 1, 1, 2, 3, 1, 2, 1, 2, 2, 4, 1, 2, 1, 3}},
        {{5, 3}, {1, 1, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 4, 1, 2, 5, 1, 3, 5}},
        {{6, 2}, {1, 1, 1, 2, 3, 4, 1, 2, 1, 2, 2, 3, 1, 3, 1, 2, 1, 4}},
        {{6, 3}, {1, 2, 3, 1, 2, 3, 1, 2, 4, 2, 3, 4, 3, 4, 5, 4, 5, 1, 5, 1, 2, 1, 2, 3}},
        {{6, 4}, {1, 2, 3, 1, 2, 3, 1, 2, 3, 4, 2, 3, 4, 5, 3, 4, 5, 6,
                  4, 5, 6, 1, 5, 6, 1, 2, 6, 1, 2, 3}},
    };
    return tables;
}

// Shared three-branch flare rule for the mid-range cycle colorings (m >= 7).
// Returns 0 when no branch covers (i, t).
int cycle_mid_flare_color(int m, int i, int t, int mod_a, int mod_b) {
    const int half = ceil_div(m, 2);
    const int fl = m / 2;
    bool in_a = (i >= 1 && i <= half - 2) || (i >= half && i <= m);
    if (in_a && i + t - 2 < m)
        return ((i + t - 2) % mod_a) + 1;
    if (i == half - 1 && i + t - 2 <= m)
        return ((i + t - 2) % mod_b) + 1;
    if (i >= fl + 1 && i <= m && i + t - 2 >= m)
        return ((i + t - 2) % m) + 1;
    return 0;
}

// Case of small flares (n <= ceil(m/2) - 2): ceil(m/2) colors, with separate
// odd-n and even-n flare rules. The printed even-n rule divides m by two
// exactly; we read every such m/2 as ceil(m/2), which is what the core
// formula and the palette size require (identical for even m).
int cycle_small_flare_color(int m, int n, int i, int t) {
    const int half = ceil_div(m, 2);
    const int fl = m / 2;
    if (n % 2 == 1) {
        if (i >= 1 && i <= fl - 1)
            return ((i + t - 2) % fl) + 1;
        if (i >= fl && i <= m && i + t - 1 <= m)
            return ((i + t - 2) % (fl + 1)) + 1;
        if (i >= fl + 1 && i <= m && i + t - 2 >= m)
            return ((i + t - 2) % m) + 1;
        return 0;
    }
    if (i >= 1 && i <= half)
        return ((i + t - 2) % half) + 1;
    if (i >= half + 1 && i <= m) {
        if (t < n && i + t - 1 < m)
            return ((i + t - 1) % half) + 1;
        if (t == n && i + t < m)
            return ((i + t) % half) + 1;
        if (t < n && i + t - 1 >= m)
            return ((i + t - 1) % m) + 1;
        if (t == n && i + t >= m)
            return ((i + t) % m) + 1;
    }
    return 0;
}

} // namespace

VertexColoring color_cycle_rvcl(int m, int n) {
    if (m < 3 || n < 2)
        throw InvalidParameter("cycle rvcl coloring needs m >= 3, n >= 2");
    const int half = ceil_div(m, 2);
    std::vector<int> raw(m + m * n);

    if (m == 3 || n >= m - 1) {
        // n+1 colors: distinct core, sliding flare windows
        for (int i = 1; i <= m; ++i)
            raw[i - 1] = i;
        for (int i = 1; i <= m; ++i)
            for (int t = 1; t <= n; ++t)
                raw[m + (i - 1) * n + (t - 1)] = ((i + t - 2) % (n + 1)) + 1;
        return VertexColoring::canonicalized(std::move(raw));
    }

    if (n >= half - 1) {
        if (m <= 6) {
            auto it = cycle_mid_tables().find({m, n});
            if (it == cycle_mid_tables().end() || it->second.empty())
                throw UnsupportedSpec("no explicit table for this instance");
            return VertexColoring::canonicalized(it->second);
        }
        const int mod_a = n == half - 1 ? half : n + 1;
        const int mod_b = n == half - 1 ? half + 1 : n + 2;
        for (int i = 1; i <= m; ++i)
            raw[i - 1] = ((i - 1) % half) + 1;
        for (int i = 1; i <= m; ++i)
            for (int t = 1; t <= n; ++t) {
                int c = cycle_mid_flare_color(m, i, t, mod_a, mod_b);
                if (c == 0)
                    throw FormulaCoverageError(i, t, "no flare-color case covers flare " +
                                                         std::to_string(i) + " copy " +
                                                         std::to_string(t));
                raw[m + (i - 1) * n + (t - 1)] = c;
            }
        return VertexColoring::canonicalized(std::move(raw));
    }

    if (m < 5)
        throw UnsupportedSpec("no branch covers this (m, n)");
    for (int i = 1; i <= m; ++i)
        raw[i - 1] = ((i - 1) % half) + 1;
    for (int i = 1; i <= m; ++i)
        for (int t = 1; t <= n; ++t) {
            int c = cycle_small_flare_color(m, n, i, t);
            if (c == 0)
                throw FormulaCoverageError(i, t, "no flare-color case covers flare " +
                                                     std::to_string(i) + " copy " +
                                                     std::to_string(t));
            raw[m + (i - 1) * n + (t - 1)] = c;
        }
    return VertexColoring::canonicalized(std::move(raw));
}

VertexColoring color_complete_rvc(int m, const Graph& flare) {
    if (m < 3)
        throw InvalidParameter("complete-core rvc coloring needs m >= 3");
    const int q = ceil_div(m, 3);
    const int n = flare.vertex_count();
    const int ec = m * (m - 1) / 2;
    std::vector<int> raw(m + ec * n, 1);
    for (int i = 1; i <= m; ++i)
        raw[i - 1] = i <= 2 * q ? ((i - 1) % q) + 1 : i % (2 * q);
    return VertexColoring::canonicalized(std::move(raw));
}

namespace detail {

// Distinct size-`set_size` color sets over palette [1..palette], one per
// edge, each containing its edge's two endpoint colors. Candidates are tried
// in colexicographic order; backtracks across edges.
std::vector<std::vector<int>> assign_flare_color_sets(
    const std::vector<std::pair<int, int>>& edges, int palette, int set_size) {
    const int ec = static_cast<int>(edges.size());
    std::vector<std::vector<std::vector<int>>> candidates(ec);
    for (int p = 0; p < ec; ++p) {
        auto [a, b] = edges[p];
        std::vector<int> pool;
        for (int c = 1; c <= palette; ++c)
            if (c != a && c != b)
                pool.push_back(c);
        const int extra = set_size - 2;
        if (extra < 0 || extra > static_cast<int>(pool.size()))
            throw InfeasibleAssignment("palette too small for flare color sets");
        std::vector<int> pick(extra);
        std::function<void(int, int)> gen = [&](int start, int depth) {
            if (depth == extra) {
                std::vector<int> set = {a, b};
                set.insert(set.end(), pick.begin(), pick.begin() + extra);
                std::sort(set.begin(), set.end());
                candidates[p].push_back(std::move(set));
                return;
            }
            for (int h = start; h < static_cast<int>(pool.size()); ++h) {
                pick[depth] = pool[h];
                gen(h + 1, depth + 1);
            }
        };
        gen(0, 0);
        std::sort(candidates[p].begin(), candidates[p].end(),
                  [](const std::vector<int>& x, const std::vector<int>& y) {
                      return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(),
                                                          y.rend());
                  });
    }

    std::vector<std::vector<int>> chosen(ec);
    std::set<std::vector<int>> used;
    std::function<bool(int)> place = [&](int p) -> bool {
        if (p == ec)
            return true;
        for (const auto& cand : candidates[p]) {
            if (used.count(cand))
                continue;
            used.insert(cand);
            chosen[p] = cand;
            if (place(p + 1))
                return true;
            used.erase(cand);
        }
        return false;
    };
    if (!place(0))
        throw InfeasibleAssignment("no family of pairwise distinct flare color sets exists");
    return chosen;
}

} // namespace detail

VertexColoring color_complete_rvcl(int m, int n) {
    if (m < 3 || m > n)
        throw UnsupportedSpec("complete-core rvcl coloring needs 3 <= m <= n");
    const int ec = m * (m - 1) / 2;
    const int palette = n >= ec - 1 ? n + 1 : n + 2;

    std::vector<std::pair<int, int>> edge_colors;  // endpoint colors, 1-based
    for (auto [a, b] : Graph::complete(m).edges())
        edge_colors.push_back({a + 1, b + 1});
    auto sets = detail::assign_flare_color_sets(edge_colors, palette, n);

    std::vector<int> raw(m + ec * n);
    for (int i = 1; i <= m; ++i)
        raw[i - 1] = i;
    for (int p = 0; p < ec; ++p)
        for (int t = 1; t <= n; ++t)
            raw[m + p * n + (t - 1)] = sets[p][t - 1];  // ascending color per copy
    return VertexColoring::canonicalized(std::move(raw));
}

std::span<const KnownErratum> known_errata() {
    static const std::vector<KnownErratum> errata = {
        {"path-rvcl", 3, -1,
         "the printed flare rule gives both flares of P_3 <> K_n the same color window, so the "
         "mirror symmetry forces two equal rainbow codes and one palette color is never used; "
         "the predicted value max{rvc(P_3), n+2} itself is solver-confirmed"},
    };
    return errata;
}

bool is_known_erratum(const std::string& rule, int m, int n) {
    for (const auto& e : known_errata())
        if (e.rule == rule && (e.m == -1 || e.m == m) && (e.n == -1 || e.n == n))
            return true;
    return false;
}

} // namespace rvclab
