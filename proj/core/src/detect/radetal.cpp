// Radicchi et al. divisive clustering by edge clustering coefficient.
#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "internal.hpp"

namespace commkit {

namespace {

std::size_t common_neighbors(const std::vector<node>& a, const std::vector<node>& b) {
    std::size_t z = 0;
    for (auto i = a.begin(), j = b.begin(); i != a.end() && j != b.end();) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++z;
            ++i;
            ++j;
        }
    }
    return z;
}

double coefficient(std::size_t z, std::size_t ku, std::size_t kv) {
    const std::size_t slots = std::min(ku, kv);
    // Edges at a degree-1 node can never close a triangle; they go last.
    if (slots <= 1) return std::numeric_limits<double>::infinity();
    return static_cast<double>(z + 1) / static_cast<double>(slots - 1);
}

std::uint64_t key(node u, node v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

} // namespace

double edge_clustering(const Graph& g, node u, node v) {
    g.check_node(u);
    g.check_node(v);
    if (!g.has_edge(u, v)) throw ArgumentError("edge_clustering: no edge between the given nodes");
    const auto nu = g.neighbors(u), nv = g.neighbors(v);
    const std::size_t z = common_neighbors({nu.begin(), nu.end()}, {nv.begin(), nv.end()});
    return coefficient(z, nu.size(), nv.size());
}

DetectionResult detect_radetal(const Graph& g, const DetectorParams& params) {
    detail::Deadline deadline(params, "radetal");
    detail::DivisiveLog log(g);

    std::map<std::uint64_t, double> value;
    std::set<std::pair<double, std::uint64_t>> queue; // ties: smallest edge first
    auto score = [&](node u, node v) {
        const auto& nu = log.neighbors(u);
        const auto& nv = log.neighbors(v);
        return coefficient(common_neighbors(nu, nv), nu.size(), nv.size());
    };
    for (const Edge& e : g.edges()) {
        const double c = score(e.u, e.v);
        value[key(e.u, e.v)] = c;
        queue.insert({c, key(e.u, e.v)});
    }

    auto refresh = [&](node x) {
        for (node w : log.neighbors(x)) {
            const std::uint64_t k = key(x, w);
            const double c = score(x, w);
            double& old = value[k];
            if (old == c) continue;
            queue.erase({old, k});
            old = c;
            queue.insert({c, k});
        }
    };

    while (!queue.empty()) {
        deadline.tick();
        const auto [c, k] = *queue.begin();
        queue.erase(queue.begin());
        value.erase(k);
        const node u = static_cast<node>(k >> 32);
        const node v = static_cast<node>(k & 0xffffffffu);
        log.remove_edge(u, v);
        refresh(u);
        refresh(v);
    }

    Dendrogram dendrogram = log.dendrogram();
    dendrogram.compute_modularity(g);
    Partition best = best_modularity_cut(dendrogram, g);
    return {std::move(best), std::move(dendrogram), false};
}

} // namespace commkit
