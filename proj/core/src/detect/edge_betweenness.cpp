// Girvan-Newman divisive clustering by repeated removal of the most central edge.
#include <algorithm>
#include <cmath>
#include <map>

#include "commkit/topology.hpp"
#include "internal.hpp"

namespace commkit {

namespace {

std::uint64_t key(node u, node v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

} // namespace

DetectionResult detect_edge_betweenness(const Graph& g, const DetectorParams& params, RngStream& rng) {
    detail::Deadline deadline(params, "edge_betweenness");
    const std::size_t n = g.node_count();
    detail::DivisiveLog log(g);
    // Ordered by edge so that tie candidates come out in a fixed order.
    std::map<std::uint64_t, double> centrality;
    std::vector<std::int64_t> local(n, -1);

    auto recompute = [&](std::size_t block) {
        const auto& members = log.members(block);
        for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<std::int64_t>(i);
        std::vector<Edge> edges;
        for (node v : members) {
            for (node w : log.neighbors(v)) {
                if (v < w) edges.push_back({static_cast<node>(local[v]), static_cast<node>(local[w])});
            }
        }
        const Graph sub(members.size(), edges);
        const auto values = edge_betweenness(sub);
        const auto sub_edges = sub.edges();
        for (std::size_t e = 0; e < sub_edges.size(); ++e) {
            centrality[key(members[sub_edges[e].u], members[sub_edges[e].v])] = values[e];
        }
        for (node v : members) local[v] = -1;
        deadline.check();
    };

    std::vector<std::size_t> dirty;
    for (node v = 0; v < n; ++v) dirty.push_back(log.block_of(v));
    std::vector<std::uint64_t> ties;
    while (!centrality.empty() || !dirty.empty()) {
        std::sort(dirty.begin(), dirty.end());
        dirty.erase(std::unique(dirty.begin(), dirty.end()), dirty.end());
        for (std::size_t b : dirty) recompute(b);
        dirty.clear();
        if (centrality.empty()) break;

        for (std::size_t r = 0; r < params.recompute_every && !centrality.empty(); ++r) {
            double top = 0.0;
            for (const auto& [k, value] : centrality) top = std::max(top, value);
            ties.clear();
            for (const auto& [k, value] : centrality) {
                if (value >= top - 1e-9 * std::max(1.0, top)) ties.push_back(k);
            }
            const std::uint64_t chosen = ties.size() == 1 ? ties[0] : ties[rng.uniform(ties.size())];
            centrality.erase(chosen);
            const node u = static_cast<node>(chosen >> 32);
            const node v = static_cast<node>(chosen & 0xffffffffu);
            log.remove_edge(u, v);
            dirty.push_back(log.block_of(u));
            dirty.push_back(log.block_of(v));
        }
    }

    Dendrogram dendrogram = log.dendrogram();
    dendrogram.compute_modularity(g);
    Partition best = best_modularity_cut(dendrogram, g);
    return {std::move(best), std::move(dendrogram), false};
}

} // namespace commkit
