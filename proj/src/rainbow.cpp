#include "rvclab/rainbow.hpp"
#include "rvclab/errors.hpp"

#include <algorithm>
#include <map>

namespace rvclab {

std::string to_string(Target t) {
    return t == Target::Rvc ? "rvc" : "rvcl";
}

Target target_from_string(const std::string& s) {
    if (s == "rvc")
        return Target::Rvc;
    if (s == "rvcl")
        return Target::Rvcl;
    throw InvalidParameter("unknown target: " + s);
}

VertexColoring VertexColoring::make(int k, std::vector<int> colors) {
    if (k < 1)
        throw InvalidParameter("coloring needs k >= 1");
    std::vector<char> used(k + 1, 0);
    for (int c : colors) {
        if (c < 1 || c > k)
            throw InvalidParameter("color out of range 1..k");
        used[c] = 1;
    }
    for (int c = 1; c <= k; ++c)
        if (!used[c])
            throw InvalidParameter("coloring is not surjective: color " + std::to_string(c) + " unused");
    return {k, std::move(colors)};
}

VertexColoring VertexColoring::canonicalized(std::vector<int> colors) {
    if (colors.empty())
        throw InvalidParameter("coloring needs at least one vertex");
    std::map<int, int> remap;
    for (int c : colors) {
        if (c < 1)
            throw InvalidParameter("colors must be positive");
        remap[c] = 0;
    }
    int next = 0;
    for (auto& [old_color, new_color] : remap)
        new_color = ++next;
    for (int& c : colors)
        c = remap[c];
    return {next, std::move(colors)};
}

namespace {

void require_total(const Graph& g, const VertexColoring& c) {
    if (static_cast<int>(c.colors.size()) != g.vertex_count())
        throw InvalidParameter("coloring does not cover every vertex");
}

struct RvpSearch {
    const Graph& g;
    const VertexColoring& c;
    VertexId target;
    int max_internal;  // a rainbow path has at most k internal vertices
    std::vector<char> on_path;
    std::vector<char> color_used;

    RvpSearch(const Graph& g, const VertexColoring& c, VertexId target)
        : g(g), c(c), target(target), max_internal(c.k),
          on_path(g.vertex_count(), 0), color_used(c.k + 1, 0) {}

    bool run(VertexId cur, int internals) {
        for (VertexId w : g.neighbors(cur)) {
            if (w == target)
                return true;
            if (on_path[w] || internals >= max_internal)
                continue;
            int cw = c.colors[w];
            if (color_used[cw])
                continue;
            on_path[w] = 1;
            color_used[cw] = 1;
            bool found = run(w, internals + 1);
            on_path[w] = 0;
            color_used[cw] = 0;
            if (found)
                return true;
        }
        return false;
    }
};

} // namespace

bool rvp_exists(const Graph& g, const VertexColoring& c, VertexId u, VertexId v) {
    require_total(g, c);
    if (u == v)
        throw InvalidParameter("rvp_exists needs two distinct vertices");
    RvpSearch s(g, c, v);
    s.on_path[u] = 1;
    return s.run(u, 0);
}

VerificationReport is_rainbow_vertex_coloring(const Graph& g, const VertexColoring& c) {
    require_total(g, c);
    VerificationReport report;
    report.rainbow_ok = true;
    const int n = g.vertex_count();
    for (VertexId u = 0; u < n && *report.rainbow_ok; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (!rvp_exists(g, c, u, v)) {
                report.rainbow_ok = false;
                report.failing_pair_rainbow = {u, v};
                break;
            }
    return report;
}

RainbowCode rainbow_code(const Graph& g, const VertexColoring& c, VertexId v,
                         const DistanceMatrix& dm) {
    require_total(g, c);
    RainbowCode code(c.k, -1);
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
        int& entry = code[c.colors[w] - 1];
        int d = dm.at(v, w);
        if (entry < 0 || d < entry)
            entry = d;
    }
    for (int i = 0; i < c.k; ++i)
        if (code[i] < 0)
            throw InvalidParameter("empty color class " + std::to_string(i + 1));
    return code;
}

VerificationReport is_locating(const Graph& g, const VertexColoring& c) {
    require_total(g, c);
    auto dm = DistanceMatrix::bfs_all_pairs(g);
    VerificationReport report;
    const int n = g.vertex_count();
    report.codes.reserve(n);
    for (VertexId v = 0; v < n; ++v)
        report.codes.push_back(rainbow_code(g, c, v, dm));
    report.locating_ok = true;
    for (VertexId u = 0; u < n && *report.locating_ok; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (report.codes[u] == report.codes[v]) {
                report.locating_ok = false;
                report.failing_pair_locating = {{u, v}, report.codes[u]};
                break;
            }
    return report;
}

VerificationReport is_locating_rainbow_coloring(const Graph& g, const VertexColoring& c) {
    VerificationReport report = is_locating(g, c);
    VerificationReport rainbow = is_rainbow_vertex_coloring(g, c);
    report.rainbow_ok = rainbow.rainbow_ok;
    report.failing_pair_rainbow = rainbow.failing_pair_rainbow;
    return report;
}

} // namespace rvclab
