// graph.hpp — undirected simple graphs with provenance labels, base family
// constructors, the edge-corona product, and distance/cut/twin queries.
//
// Vertex ids are 0-based positions in the vertex list. Labels carry the
// 1-based naming used everywhere else: core vertex i is "core:i", and the
// k-th vertex of the flare copy sitting on core edge j is "flare:j:k".
// Core vertices always come first (in index order), then flare copies in
// (edge index, copy index) order, so ids are reproducible across runs.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rvclab {

using VertexId = int;

struct VertexLabel {
    enum class Kind { Core, Flare };
    Kind kind = Kind::Core;
    int core_index = 0;  // 1-based, Kind::Core only
    int edge_index = 0;  // 1-based core edge, Kind::Flare only
    int copy_index = 0;  // 1-based position inside the copy, Kind::Flare only

    static VertexLabel core(int i) { return {Kind::Core, i, 0, 0}; }
    static VertexLabel flare(int j, int k) { return {Kind::Flare, 0, j, k}; }

    std::string str() const;
    static VertexLabel parse(const std::string& text);

    friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
    friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

class Graph {
public:
    // Base families. Edge indices are stable: path/cycle edge j joins
    // u_j,u_{j+1} (cycle edge m wraps to u_1); complete-graph edges are
    // indexed lexicographically on (i,j) with i<j; tree edges keep input
    // order.
    static Graph path(int m);
    static Graph cycle(int m);
    static Graph complete(int m);
    static Graph tree(const std::vector<std::pair<int, int>>& edges_1based);

    // General constructor used by parsers and generators; validates
    // simplicity, label uniqueness/shape, and connectivity.
    static Graph from_parts(std::vector<VertexLabel> labels,
                            std::vector<std::pair<VertexId, VertexId>> edges);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const VertexLabel& label(VertexId v) const { return labels_[v]; }
    const std::vector<VertexLabel>& labels() const { return labels_; }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(VertexId u, VertexId v) const { return adjm_[static_cast<size_t>(u) * labels_.size() + v] != 0; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.labels_ == b.labels_ && a.edges_ == b.edges_;
    }

private:
    Graph() = default;
    std::vector<VertexLabel> labels_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::uint8_t> adjm_;
};

// One copy of `core` plus |E(core)| copies of `flare`; both endpoints of the
// j-th core edge are joined to every vertex of the j-th copy.
Graph edge_corona(const Graph& core, const Graph& flare);

class DistanceMatrix {
public:
    static DistanceMatrix bfs_all_pairs(const Graph& g);
    int at(VertexId u, VertexId v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
    int size() const { return n_; }
    int diameter() const;

private:
    int n_ = 0;
    std::vector<int> d_;
};

// Articulation points, ascending by id.
std::vector<VertexId> cut_vertices(const Graph& g);

// Maximal classes of mutually adjacent vertices that are pairwise equidistant
// from every other vertex. Singletons included; classes partition V.
struct TwinPartition {
    std::vector<std::vector<VertexId>> classes;  // each sorted; sorted by least member
    std::vector<int> class_of;                   // vertex -> index into classes
    int largest_class_size() const;
};

TwinPartition twin_classes(const Graph& g);
TwinPartition twin_classes(const Graph& g, const DistanceMatrix& dm);

// Shape of a graph that is structurally an edge corona with complete-graph
// flares, recovered from labels and adjacency. Empty when the graph is not of
// that shape.
struct CoronaShape {
    int m = 0;           // core order
    int n = 0;           // flare order
    int core_edges = 0;  // number of flare copies
};
bool detect_complete_flare_corona(const Graph& g, CoronaShape& out);

} // namespace rvclab
