#include <algorithm>
#include <unordered_map>

#include "internal.hpp"

namespace commkit::detail {

WeightedGraph WeightedGraph::from_graph(const Graph& g) {
    WeightedGraph w;
    const std::size_t n = g.node_count();
    w.adjacency.resize(n);
    w.loops.assign(n, 0.0);
    w.strength.assign(n, 0.0);
    for (node v = 0; v < n; ++v) {
        w.adjacency[v].reserve(g.degree_of(v));
        for (node u : g.neighbors(v)) w.adjacency[v].push_back({u, 1.0});
        w.strength[v] = static_cast<double>(g.degree_of(v));
        w.total += w.strength[v];
    }
    return w;
}

WeightedGraph WeightedGraph::aggregate(const std::vector<std::uint32_t>& labels, std::size_t k) const {
    WeightedGraph out;
    out.adjacency.resize(k);
    out.loops.assign(k, 0.0);
    out.strength.assign(k, 0.0);
    out.total = total;
    std::vector<std::unordered_map<std::uint32_t, double>> acc(k);
    for (std::size_t u = 0; u < size(); ++u) {
        const std::uint32_t cu = labels[u];
        out.strength[cu] += strength[u];
        out.loops[cu] += loops[u];
        for (const Arc& a : adjacency[u]) {
            const std::uint32_t cv = labels[a.to];
            if (cu == cv) {
                out.loops[cu] += a.weight; // each internal edge is seen from both ends
            } else {
                acc[cu][cv] += a.weight;
            }
        }
    }
    for (std::size_t c = 0; c < k; ++c) {
        auto& row = out.adjacency[c];
        row.reserve(acc[c].size());
        for (const auto& [to, weight] : acc[c]) row.push_back({to, weight});
        // Hash order is not portable; sort for reproducible sweeps.
        std::sort(row.begin(), row.end(), [](const Arc& x, const Arc& y) { return x.to < y.to; });
    }
    return out;
}

std::vector<std::uint32_t> compact_labels(const std::vector<std::uint32_t>& labels, std::size_t& k) {
    std::unordered_map<std::uint32_t, std::uint32_t> ids;
    std::vector<std::uint32_t> out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, fresh] = ids.try_emplace(labels[i], static_cast<std::uint32_t>(ids.size()));
        out[i] = it->second;
    }
    k = ids.size();
    return out;
}

Partition isolate_degree_zero(const Graph& g, const Partition& p) {
    std::vector<std::uint64_t> labels(p.membership().begin(), p.membership().end());
    std::uint64_t fresh = p.community_count();
    for (node v = 0; v < g.node_count(); ++v) {
        if (g.degree_of(v) == 0) labels[v] = fresh++;
    }
    return Partition(std::span<const std::uint64_t>(labels));
}

} // namespace commkit::detail
