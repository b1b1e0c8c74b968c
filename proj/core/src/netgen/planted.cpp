#include <algorithm>
#include <unordered_set>

#include "commkit/error.hpp"
#include "commkit/generators.hpp"

namespace commkit {

namespace {

std::uint64_t edge_key(node u, node v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

} // namespace

PlantedNetwork girvan_newman(double z_out, RngStream& rng) {
    if (!(z_out >= 0.0 && z_out <= 16.0)) throw ArgumentError("z_out must lie in [0, 16]");
    constexpr std::size_t kGroups = 4, kGroupSize = 32, kNodes = kGroups * kGroupSize;
    const double p_in = (16.0 - z_out) / static_cast<double>(kGroupSize - 1);
    const double p_out = z_out / static_cast<double>(kNodes - kGroupSize);
    std::vector<community> labels(kNodes);
    for (node v = 0; v < kNodes; ++v) labels[v] = static_cast<community>(v / kGroupSize);
    std::vector<Edge> edges;
    for (node u = 0; u < kNodes; ++u) {
        for (node v = u + 1; v < kNodes; ++v) {
            const double p = labels[u] == labels[v] ? p_in : p_out;
            if (rng.bernoulli(p)) edges.push_back({u, v});
        }
    }
    PlantedNetwork out{Graph(kNodes, edges), Partition(labels), 0.0};
    out.realized_mu = mixing_fraction(out.graph, out.planted);
    return out;
}

RewireReport bagrow_rewire(const Graph& g, std::size_t k_communities, double fraction,
                           RngStream& rng) {
    const std::size_t n = g.node_count();
    if (k_communities < 2) throw ArgumentError("bagrow_rewire needs at least 2 communities");
    if (k_communities > n) throw ArgumentError("more communities than nodes");
    if (!(fraction >= 0.0 && fraction <= 1.0)) throw ArgumentError("fraction must lie in [0, 1]");

    std::vector<node> order(n);
    for (node v = 0; v < n; ++v) order[v] = v;
    rng.shuffle(std::span<node>(order));
    std::vector<community> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[order[i]] = static_cast<community>(i * k_communities / n);
    }

    std::vector<Edge> edges = g.edges();
    std::unordered_set<std::uint64_t> present;
    present.reserve(edges.size() * 2);
    for (const Edge& e : edges) present.insert(edge_key(e.u, e.v));
    // Indices into `edges` of the current inter-community edges.
    std::vector<std::size_t> inter;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (labels[edges[i].u] != labels[edges[i].v]) inter.push_back(i);
    }
    const double initial_pairs = static_cast<double>(inter.size() / 2);
    const auto wanted = static_cast<std::size_t>(fraction * initial_pairs + 1e-9);
    std::size_t done = 0;
    std::size_t budget = 2000 * (wanted + 1) + 20 * edges.size();

    auto drop_inter = [&](std::size_t slot) {
        inter[slot] = inter.back();
        inter.pop_back();
    };

    while (done < wanted && inter.size() >= 2 && budget-- > 0) {
        std::size_t si = rng.uniform(inter.size());
        std::size_t sj = rng.uniform(inter.size());
        if (si == sj) continue;
        const Edge a = edges[inter[si]];
        const Edge b = edges[inter[sj]];
        // Pair the endpoints so that each new edge stays inside one group.
        Edge x{}, y{};
        if (labels[a.u] == labels[b.u] && labels[a.v] == labels[b.v]) {
            x = {a.u, b.u};
            y = {a.v, b.v};
        } else if (labels[a.u] == labels[b.v] && labels[a.v] == labels[b.u]) {
            x = {a.u, b.v};
            y = {a.v, b.u};
        } else {
            continue;
        }
        if (x.u == x.v || y.u == y.v) continue;
        if (present.count(edge_key(x.u, x.v)) || present.count(edge_key(y.u, y.v))) continue;
        const std::size_t ia = inter[si], ib = inter[sj];
        present.erase(edge_key(a.u, a.v));
        present.erase(edge_key(b.u, b.v));
        present.insert(edge_key(x.u, x.v));
        present.insert(edge_key(y.u, y.v));
        edges[ia] = x;
        edges[ib] = y;
        drop_inter(std::max(si, sj));
        drop_inter(std::min(si, sj));
        ++done;
    }

    RewireReport report;
    report.network.graph = Graph(n, edges);
    report.network.planted = Partition(labels);
    report.network.realized_mu = mixing_fraction(report.network.graph, report.network.planted);
    report.realized_fraction = initial_pairs > 0 ? static_cast<double>(done) / initial_pairs : 0.0;
    return report;
}

} // namespace commkit
