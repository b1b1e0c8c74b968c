// Multi-level modularity optimization (local moves + aggregation).
#include <numeric>

#include "internal.hpp"

namespace commkit {

namespace {

// One local-moving phase; returns true when any node changed community.
bool move_nodes(const detail::WeightedGraph& w, std::vector<std::uint32_t>& comm, RngStream& rng,
                detail::Deadline& deadline) {
    const std::size_t n = w.size();
    std::vector<double> tot(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) tot[comm[i]] += w.strength[i];

    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    rng.shuffle(std::span<std::uint32_t>(order));

    std::vector<double> link(n, 0.0);
    std::vector<std::uint32_t> touched;
    bool moved_any = false;
    for (bool moved = true; moved;) {
        moved = false;
        for (std::uint32_t i : order) {
            deadline.tick();
            const std::uint32_t old = comm[i];
            const double k = w.strength[i];
            touched.clear();
            for (const auto& arc : w.adjacency[i]) {
                const std::uint32_t c = comm[arc.to];
                if (link[c] == 0.0) touched.push_back(c);
                link[c] += arc.weight;
            }
            tot[old] -= k;
            double best_gain = link[old] - tot[old] * k / w.total;
            std::uint32_t best = old;
            for (std::uint32_t c : touched) {
                const double gain = link[c] - tot[c] * k / w.total;
                if (gain > best_gain + 1e-12) {
                    best_gain = gain;
                    best = c;
                }
            }
            tot[best] += k;
            comm[i] = best;
            for (std::uint32_t c : touched) link[c] = 0.0;
            if (best != old) moved = moved_any = true;
        }
    }
    return moved_any;
}

} // namespace

DetectionResult detect_louvain(const Graph& g, const DetectorParams& params, RngStream& rng) {
    detail::Deadline deadline(params, "louvain");
    const std::size_t n = g.node_count();
    if (g.edge_count() == 0) return {Partition::singletons(n), std::nullopt, false};

    detail::WeightedGraph level = detail::WeightedGraph::from_graph(g);
    std::vector<std::uint32_t> membership(n);
    std::iota(membership.begin(), membership.end(), 0u);

    bool capped = true;
    for (std::size_t depth = 0; depth < params.louvain.max_levels; ++depth) {
        std::vector<std::uint32_t> comm(level.size());
        std::iota(comm.begin(), comm.end(), 0u);
        if (!move_nodes(level, comm, rng, deadline)) {
            capped = false;
            break;
        }
        std::size_t k = 0;
        const auto dense = detail::compact_labels(comm, k);
        for (auto& m : membership) m = dense[m];
        level = level.aggregate(dense, k);
    }
    return {Partition(membership), std::nullopt, capped};
}

} // namespace commkit
