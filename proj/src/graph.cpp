#include "rvclab/graph.hpp"
#include "rvclab/errors.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

namespace rvclab {

std::string VertexLabel::str() const {
    if (kind == Kind::Core)
        return "core:" + std::to_string(core_index);
    return "flare:" + std::to_string(edge_index) + ":" + std::to_string(copy_index);
}

namespace {

int parse_int(std::string_view s, const std::string& whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || value <= 0)
        throw InvalidParameter("bad vertex label: " + whole);
    return value;
}

} // namespace

VertexLabel VertexLabel::parse(const std::string& text) {
    std::string_view s(text);
    if (s.rfind("core:", 0) == 0)
        return VertexLabel::core(parse_int(s.substr(5), text));
    if (s.rfind("flare:", 0) == 0) {
        std::string_view rest = s.substr(6);
        size_t colon = rest.find(':');
        if (colon == std::string_view::npos)
            throw InvalidParameter("bad vertex label: " + text);
        return VertexLabel::flare(parse_int(rest.substr(0, colon), text),
                                  parse_int(rest.substr(colon + 1), text));
    }
    throw InvalidParameter("bad vertex label: " + text);
}

Graph Graph::from_parts(std::vector<VertexLabel> labels,
                        std::vector<std::pair<VertexId, VertexId>> edges) {
    const int n = static_cast<int>(labels.size());
    if (n == 0)
        throw InvalidParameter("graph needs at least one vertex");

    // labels must be unique; core indices must be exactly 1..m and flare
    // labels a full (edge, copy) grid when any are present
    {
        std::set<VertexLabel> seen(labels.begin(), labels.end());
        if (static_cast<int>(seen.size()) != n)
            throw InvalidParameter("duplicate vertex labels");
        std::set<int> cores;
        std::set<std::pair<int, int>> flares;
        for (const auto& l : labels) {
            if (l.kind == VertexLabel::Kind::Core)
                cores.insert(l.core_index);
            else
                flares.insert({l.edge_index, l.copy_index});
        }
        for (int i = 1; i <= static_cast<int>(cores.size()); ++i)
            if (!cores.count(i))
                throw InvalidParameter("core labels must cover 1..m");
        if (!flares.empty()) {
            int max_edge = 0, max_copy = 0;
            for (auto [j, k] : flares) {
                max_edge = std::max(max_edge, j);
                max_copy = std::max(max_copy, k);
            }
            if (static_cast<int>(flares.size()) != max_edge * max_copy)
                throw InvalidParameter("flare labels must form a full (edge, copy) grid");
        }
    }

    Graph g;
    g.labels_ = std::move(labels);
    g.adj_.assign(n, {});
    g.adjm_.assign(static_cast<size_t>(n) * n, 0);
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw InvalidParameter("edge endpoint out of range");
        if (a == b)
            throw InvalidParameter("self-loops are not allowed");
        if (g.adjm_[static_cast<size_t>(a) * n + b])
            throw InvalidParameter("duplicate edge");
        g.adjm_[static_cast<size_t>(a) * n + b] = 1;
        g.adjm_[static_cast<size_t>(b) * n + a] = 1;
        g.adj_[a].push_back(b);
        g.adj_[b].push_back(a);
    }
    g.edges_ = std::move(edges);

    // connectivity
    std::vector<char> seen(n, 0);
    std::queue<VertexId> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId w : g.adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    if (reached != n)
        throw InvalidParameter("graph must be connected");
    return g;
}

Graph Graph::path(int m) {
    if (m < 2)
        throw InvalidParameter("path needs m >= 2");
    std::vector<VertexLabel> labels;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 1; i <= m; ++i)
        labels.push_back(VertexLabel::core(i));
    for (int j = 0; j + 1 < m; ++j)
        edges.push_back({j, j + 1});
    return from_parts(std::move(labels), std::move(edges));
}

Graph Graph::cycle(int m) {
    if (m < 3)
        throw InvalidParameter("cycle needs m >= 3");
    std::vector<VertexLabel> labels;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 1; i <= m; ++i)
        labels.push_back(VertexLabel::core(i));
    for (int j = 0; j + 1 < m; ++j)
        edges.push_back({j, j + 1});
    edges.push_back({m - 1, 0});
    return from_parts(std::move(labels), std::move(edges));
}

Graph Graph::complete(int m) {
    if (m < 2)
        throw InvalidParameter("complete graph needs m >= 2");
    std::vector<VertexLabel> labels;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 1; i <= m; ++i)
        labels.push_back(VertexLabel::core(i));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            edges.push_back({i, j});
    return from_parts(std::move(labels), std::move(edges));
}

Graph Graph::tree(const std::vector<std::pair<int, int>>& edges_1based) {
    if (edges_1based.empty())
        throw InvalidTree("tree needs at least one edge");
    int m = 0;
    for (auto [a, b] : edges_1based) {
        if (a < 1 || b < 1)
            throw InvalidTree("tree vertices are 1-based");
        m = std::max({m, a, b});
    }
    if (static_cast<int>(edges_1based.size()) != m - 1)
        throw InvalidTree("tree on m vertices needs exactly m-1 edges");
    std::vector<VertexLabel> labels;
    for (int i = 1; i <= m; ++i)
        labels.push_back(VertexLabel::core(i));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (auto [a, b] : edges_1based)
        edges.push_back({a - 1, b - 1});
    try {
        return from_parts(std::move(labels), std::move(edges));
    } catch (const InvalidParameter& e) {
        throw InvalidTree(e.what());  // cyclic input shows up as duplicate edge or disconnection
    }
}

Graph edge_corona(const Graph& core, const Graph& flare) {
    if (core.edge_count() < 1)
        throw InvalidParameter("edge corona needs a core with at least one edge");
    const int m = core.vertex_count();
    const int n = flare.vertex_count();
    const int ec = core.edge_count();

    std::vector<VertexLabel> labels;
    labels.reserve(m + ec * n);
    for (int i = 1; i <= m; ++i)
        labels.push_back(VertexLabel::core(i));
    for (int j = 1; j <= ec; ++j)
        for (int k = 1; k <= n; ++k)
            labels.push_back(VertexLabel::flare(j, k));

    auto flare_id = [&](int j, int k) { return m + (j - 1) * n + (k - 1); };

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (auto [a, b] : core.edges())
        edges.push_back({a, b});
    for (int j = 1; j <= ec; ++j) {
        auto [a, b] = core.edges()[j - 1];
        for (int k = 1; k <= n; ++k) {
            edges.push_back({a, flare_id(j, k)});
            edges.push_back({b, flare_id(j, k)});
        }
        for (auto [x, y] : flare.edges())
            edges.push_back({flare_id(j, x + 1), flare_id(j, y + 1)});
    }
    return Graph::from_parts(std::move(labels), std::move(edges));
}

DistanceMatrix DistanceMatrix::bfs_all_pairs(const Graph& g) {
    DistanceMatrix dm;
    dm.n_ = g.vertex_count();
    dm.d_.assign(static_cast<size_t>(dm.n_) * dm.n_, -1);
    std::vector<VertexId> queue(dm.n_);
    for (VertexId s = 0; s < dm.n_; ++s) {
        int* dist = &dm.d_[static_cast<size_t>(s) * dm.n_];
        dist[s] = 0;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            VertexId v = queue[head++];
            for (VertexId w : g.neighbors(v))
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue[tail++] = w;
                }
        }
    }
    return dm;
}

int DistanceMatrix::diameter() const {
    return *std::max_element(d_.begin(), d_.end());
}

std::vector<VertexId> cut_vertices(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> cut(n, 0);
    int timer = 0;

    std::function<void(VertexId, VertexId)> dfs = [&](VertexId v, VertexId parent) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (VertexId w : g.neighbors(v)) {
            if (w == parent)
                continue;
            if (disc[w] >= 0) {
                low[v] = std::min(low[v], disc[w]);
            } else {
                ++children;
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (parent >= 0 && low[w] >= disc[v])
                    cut[v] = 1;
            }
        }
        if (parent < 0 && children > 1)
            cut[v] = 1;
    };
    dfs(0, -1);

    std::vector<VertexId> out;
    for (VertexId v = 0; v < n; ++v)
        if (cut[v])
            out.push_back(v);
    return out;
}

TwinPartition twin_classes(const Graph& g) {
    return twin_classes(g, DistanceMatrix::bfs_all_pairs(g));
}

TwinPartition twin_classes(const Graph& g, const DistanceMatrix& dm) {
    const int n = g.vertex_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };

    // Definition-faithful pairwise check; the twin relation is transitive on
    // adjacent equidistant pairs, so union-find yields the maximal classes.
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v))
                continue;
            bool twins = true;
            for (VertexId y = 0; y < n && twins; ++y) {
                if (y == u || y == v)
                    continue;
                twins = dm.at(u, y) == dm.at(v, y);
            }
            if (twins)
                parent[find(u)] = find(v);
        }

    TwinPartition tp;
    tp.class_of.assign(n, -1);
    std::vector<int> root_to_class(n, -1);
    for (VertexId v = 0; v < n; ++v) {
        int r = find(v);
        if (root_to_class[r] < 0) {
            root_to_class[r] = static_cast<int>(tp.classes.size());
            tp.classes.emplace_back();
        }
        tp.class_of[v] = root_to_class[r];
        tp.classes[root_to_class[r]].push_back(v);
    }
    return tp;
}

int TwinPartition::largest_class_size() const {
    int best = 0;
    for (const auto& c : classes)
        best = std::max(best, static_cast<int>(c.size()));
    return best;
}

bool detect_complete_flare_corona(const Graph& g, CoronaShape& out) {
    int m = 0, copies = 0, n = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& l = g.label(v);
        if (l.kind == VertexLabel::Kind::Core) {
            ++m;
        } else {
            copies = std::max(copies, l.edge_index);
            n = std::max(n, l.copy_index);
        }
    }
    if (m < 2 || n < 2 || copies < 1)
        return false;
    if (g.vertex_count() != m + copies * n)
        return false;

    auto flare_id = [&](int j, int k) { return m + (j - 1) * n + (k - 1); };
    // labels must sit in the canonical layout: cores first, then copies
    for (VertexId v = 0; v < m; ++v)
        if (g.label(v) != VertexLabel::core(v + 1))
            return false;
    for (int j = 1; j <= copies; ++j)
        for (int k = 1; k <= n; ++k)
            if (g.label(flare_id(j, k)) != VertexLabel::flare(j, k))
                return false;

    std::set<std::pair<VertexId, VertexId>> attach_pairs;
    long long core_core_edges = 0;
    for (auto [a, b] : g.edges())
        if (a < m && b < m)
            ++core_core_edges;
    if (core_core_edges != copies)
        return false;

    for (int j = 1; j <= copies; ++j) {
        // the copy must be a clique whose members all see the same two
        // adjacent core vertices and nothing else outside the copy
        std::vector<VertexId> members;
        for (int k = 1; k <= n; ++k)
            members.push_back(flare_id(j, k));
        std::set<VertexId> outside;
        for (VertexId v : members) {
            for (VertexId w : members)
                if (v != w && !g.adjacent(v, w))
                    return false;
            int ext = 0;
            for (VertexId w : g.neighbors(v))
                if (w < m) {
                    outside.insert(w);
                    ++ext;
                } else if (g.label(w).edge_index != j) {
                    return false;
                }
            if (ext != 2)
                return false;
        }
        if (outside.size() != 2)
            return false;
        auto it = outside.begin();
        VertexId a = *it++, b = *it;
        if (!g.adjacent(a, b))
            return false;
        if (!attach_pairs.insert({a, b}).second)
            return false;
    }
    out = {m, n, copies};
    return true;
}

} // namespace rvclab
