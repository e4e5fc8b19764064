#include "domcrit/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace domcrit {

int Graph::edge_count() const {
    int twice = 0;
    for (const VertexSet& row : adj_) twice += row.count();
    return twice / 2;
}

const std::string& Graph::label(int v) const {
    static const std::string empty;
    if (labels_.empty()) return empty;
    return labels_[static_cast<std::size_t>(v)];
}

std::optional<int> Graph::find_label(std::string_view text) const {
    for (std::size_t v = 0; v < labels_.size(); ++v)
        if (labels_[v] == text) return static_cast<int>(v);
    return std::nullopt;
}

GraphBuilder::GraphBuilder(int n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be between 0 and 128, got " +
                                    std::to_string(n));
    g_.n_ = n;
    g_.adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

void GraphBuilder::add_edge(int u, int v) {
    if (u < 0 || u >= g_.n_ || v < 0 || v >= g_.n_)
        throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                    std::to_string(v) + ") with n = " + std::to_string(g_.n_));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g_.adj_[static_cast<std::size_t>(u)].set(v);
    g_.adj_[static_cast<std::size_t>(v)].set(u);
}

void GraphBuilder::set_label(int v, std::string text) {
    if (v < 0 || v >= g_.n_) throw std::invalid_argument("label vertex out of range");
    if (!has_labels_) {
        g_.labels_.assign(static_cast<std::size_t>(g_.n_), std::string{});
        has_labels_ = true;
    }
    g_.labels_[static_cast<std::size_t>(v)] = std::move(text);
}

Graph GraphBuilder::build() { return std::move(g_); }

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    GraphBuilder b(n);
    for (const auto& [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

Graph complement(const Graph& g) {
    const int n = g.order();
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u) {
        if (!g.label(u).empty()) b.set_label(u, g.label(u));
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) b.add_edge(u, v);
    }
    return b.build();
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (!g.vertices().contains(s))
        throw std::invalid_argument("induced_subgraph: vertex set not within the graph");
    std::vector<int> kept;
    kept.reserve(static_cast<std::size_t>(s.count()));
    for (int v : s) kept.push_back(v);

    GraphBuilder b(static_cast<int>(kept.size()));
    for (std::size_t i = 0; i < kept.size(); ++i) {
        const std::string& old = g.label(kept[i]);
        b.set_label(static_cast<int>(i), old.empty() ? std::to_string(kept[i]) : old);
        for (std::size_t j = i + 1; j < kept.size(); ++j)
            if (g.adjacent(kept[i], kept[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return b.build();
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("delete_vertex: vertex out of range");
    VertexSet keep = g.vertices();
    keep.reset(v);
    return induced_subgraph(g, keep);
}

Graph delete_closed_neighborhood(const Graph& g, int v) {
    if (v < 0 || v >= g.order())
        throw std::invalid_argument("delete_closed_neighborhood: vertex out of range");
    return induced_subgraph(g, g.vertices() - g.closed_neighborhood(v));
}

BfsLayers bfs_layers(const Graph& g, int source) {
    if (source < 0 || source >= g.order())
        throw std::invalid_argument("bfs_layers: source out of range");
    BfsLayers out;
    out.source = source;
    VertexSet seen = VertexSet::single(source);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        out.layers.push_back(frontier);
        VertexSet next;
        for (int v : frontier) next |= g.neighbors(v);
        next -= seen;
        seen |= next;
        frontier = next;
    }
    out.unreachable = g.vertices() - seen;
    return out;
}

std::optional<int> BfsLayers::distance_to(int v) const {
    for (std::size_t d = 0; d < layers.size(); ++d)
        if (layers[d].test(v)) return static_cast<int>(d);
    return std::nullopt;
}

std::optional<int> distance(const Graph& g, int u, int v) {
    return bfs_layers(g, u).distance_to(v);
}

std::optional<int> diameter(const Graph& g) {
    if (g.order() <= 1) return 0;
    int best = 0;
    for (int v = 0; v < g.order(); ++v) {
        BfsLayers layers = bfs_layers(g, v);
        if (!layers.unreachable.empty()) return std::nullopt;
        best = std::max(best, layers.eccentricity());
    }
    return best;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    return bfs_layers(g, 0).unreachable.empty();
}

namespace {

// Iterative lowpoint DFS; returns whether the (connected) graph has a cut vertex.
bool has_cut_vertex(const Graph& g) {
    const int n = g.order();
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<VertexSet::const_iterator> cursor;
    cursor.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) cursor.push_back(g.neighbors(v).begin());

    std::vector<int> stack{0};
    int timer = 0;
    int root_children = 0;
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        int u = stack.back();
        auto& it = cursor[static_cast<std::size_t>(u)];
        if (it != g.neighbors(u).end()) {
            int w = *it;
            ++it;
            if (disc[static_cast<std::size_t>(w)] == -1) {
                parent[static_cast<std::size_t>(w)] = u;
                disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                if (u == 0) ++root_children;
                stack.push_back(w);
            } else if (w != parent[static_cast<std::size_t>(u)]) {
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(w)]);
            }
        } else {
            stack.pop_back();
            int p = parent[static_cast<std::size_t>(u)];
            if (p >= 0) {
                low[static_cast<std::size_t>(p)] =
                    std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(u)]);
                if (p != 0 && low[static_cast<std::size_t>(u)] >= disc[static_cast<std::size_t>(p)])
                    return true;
            }
        }
    }
    return root_children > 1;
}

}  // namespace

StructureFlags structure_flags(const Graph& g) {
    StructureFlags flags;
    const int n = g.order();
    flags.connected = n > 0 && is_connected(g);
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d == 0) flags.has_isolated = true;
        if (d == 1) flags.leaves.set(v);
    }
    for (int v : flags.leaves) flags.support_vertices |= g.neighbors(v);
    flags.two_connected = flags.connected && n >= 3 && !has_cut_vertex(g);
    return flags;
}

PointedGraph::PointedGraph(Graph g, int left_vertex, int right_vertex)
    : graph(std::move(g)), left(left_vertex), right(right_vertex) {
    const int n = graph.order();
    if (left < 0 || left >= n || right < 0 || right >= n)
        throw std::invalid_argument("pointed graph: assigned vertex out of range");
    if (n >= 2 && left == right)
        throw std::invalid_argument("pointed graph: Left and Right must differ");
    std::optional<int> diam = diameter(graph);
    if (!diam) throw std::invalid_argument("pointed graph: underlying graph is disconnected");
    std::optional<int> d = distance(graph, left, right);
    if (!d || *d != *diam)
        throw std::invalid_argument("pointed graph: Left/Right pair is not diametrical (dist " +
                                    std::to_string(d ? *d : -1) + ", diam " +
                                    std::to_string(*diam) + ")");
}

}  // namespace domcrit
