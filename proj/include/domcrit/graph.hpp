#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domcrit/vertex_set.hpp"

namespace domcrit {

/// Simple undirected graph on at most 128 vertices, adjacency rows as bitsets.
/// Instances are immutable: every surgery operation returns a new graph.
/// operator== is structural (order + adjacency); labels are provenance only.
class Graph {
public:
    Graph() = default;  // the empty graph

    int order() const { return n_; }
    int edge_count() const;
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    VertexSet closed_neighborhood(int v) const {
        VertexSet s = adj_[v];
        return s.set(v);
    }
    int degree(int v) const { return adj_[v].count(); }
    VertexSet vertices() const { return VertexSet::full(n_); }

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const;
    /// Index of the first vertex carrying the given label, if any.
    std::optional<int> find_label(std::string_view text) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    friend class GraphBuilder;
    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;  // empty, or one entry per vertex
};

/// Accumulates edges and labels, then releases an immutable Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);          // throws on n < 0 or n > 128
    void add_edge(int u, int v);           // throws on range error or self-loop; duplicates collapse
    void set_label(int v, std::string text);
    Graph build();

private:
    Graph g_;
    bool has_labels_ = false;
};

struct BfsLayers {
    int source = 0;
    std::vector<VertexSet> layers;  // layers[i] = vertices at distance i from source
    VertexSet unreachable;

    int eccentricity() const { return static_cast<int>(layers.size()) - 1; }
    std::optional<int> distance_to(int v) const;
};

struct StructureFlags {
    bool connected = false;
    bool two_connected = false;
    bool has_isolated = false;
    VertexSet leaves;
    VertexSet support_vertices;
};

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);
Graph complement(const Graph& g);
/// Vertices of s compacted to 0..|s|-1 in ascending original order. The
/// relabel map lands in the result's labels (original label, or the original
/// index when the input is unlabeled).
Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph delete_vertex(const Graph& g, int v);
Graph delete_closed_neighborhood(const Graph& g, int v);

BfsLayers bfs_layers(const Graph& g, int source);
std::optional<int> distance(const Graph& g, int u, int v);  // nullopt when unreachable
/// nullopt encodes an infinite diameter (disconnected graph); 0 for n <= 1.
std::optional<int> diameter(const Graph& g);
bool is_connected(const Graph& g);
StructureFlags structure_flags(const Graph& g);

/// Graph with two assigned diametrical vertices.
struct PointedGraph {
    Graph graph;
    int left = 0;
    int right = 0;

    /// Throws unless dist(left, right) equals diam(graph) (finite), and
    /// left != right when the graph has at least two vertices.
    PointedGraph(Graph g, int left_vertex, int right_vertex);
};

}  // namespace domcrit
