#include "commkit/graph.hpp"

#include <algorithm>
#include <string>

#include "commkit/error.hpp"

namespace commkit {

namespace {

void build_csr(std::size_t n, const std::vector<Edge>& edges, std::vector<std::size_t>& offsets,
               std::vector<node>& neighbors) {
    offsets.assign(n + 1, 0);
    for (const Edge& e : edges) {
        ++offsets[e.u + 1];
        ++offsets[e.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    neighbors.resize(offsets[n]);
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const Edge& e : edges) {
        neighbors[cursor[e.u]++] = e.v;
        neighbors[cursor[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(neighbors.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
                  neighbors.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]));
    }
}

std::vector<Edge> normalized(std::size_t n, std::span<const Edge> edges) {
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n) {
            throw ArgumentError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                ") references a node outside 0.." + std::to_string(n) + "-1");
        }
        if (e.u == e.v) throw ArgumentError("self-loop on node " + std::to_string(e.u));
        out.push_back(e.u < e.v ? e : Edge{e.v, e.u});
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

Graph::Graph(std::size_t node_count, std::span<const Edge> edges) {
    std::vector<Edge> sorted = normalized(node_count, edges);
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        throw ArgumentError("duplicate edge (" + std::to_string(dup->u) + ", " +
                            std::to_string(dup->v) + ")");
    }
    build_csr(node_count, sorted, offsets_, neighbors_);
}

Graph Graph::from_edges_dedup(std::size_t node_count, std::vector<Edge> edges) {
    std::vector<Edge> sorted = normalized(node_count, edges);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Graph g;
    build_csr(node_count, sorted, g.offsets_, g.neighbors_);
    return g;
}

bool Graph::has_edge(node u, node v) const {
    if (u >= node_count() || v >= node_count()) return false;
    if (degree_of(u) > degree_of(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (node u = 0; u < node_count(); ++u) {
        for (node v : neighbors(u)) {
            if (u < v) out.push_back({u, v});
        }
    }
    return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
    std::vector<std::size_t> out(node_count());
    for (node v = 0; v < node_count(); ++v) out[v] = degree_of(v);
    return out;
}

void Graph::check_node(node v) const {
    if (v >= node_count()) {
        throw ArgumentError("node id " + std::to_string(v) + " out of range for graph with " +
                            std::to_string(node_count()) + " nodes");
    }
}

} // namespace commkit
