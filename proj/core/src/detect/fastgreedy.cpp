// Clauset-Newman-Moore greedy modularity agglomeration.
#include <map>
#include <queue>
#include <tuple>

#include "internal.hpp"

namespace commkit {

namespace {

struct Candidate {
    double gain;
    std::uint32_t a; // a < b
    std::uint32_t b;
    std::uint32_t version_a;
    std::uint32_t version_b;
};

// Max gain first; ties go to the lexicographically smallest pair.
struct Lower {
    bool operator()(const Candidate& x, const Candidate& y) const {
        if (x.gain != y.gain) return x.gain < y.gain;
        return std::tie(x.a, x.b) > std::tie(y.a, y.b);
    }
};

} // namespace

DetectionResult detect_fastgreedy(const Graph& g, const DetectorParams& params) {
    detail::Deadline deadline(params, "fastgreedy");
    const std::size_t n = g.node_count();
    Dendrogram dendrogram(n);
    if (g.edge_count() == 0) {
        dendrogram.compute_modularity(g);
        return {Partition::singletons(n), std::move(dendrogram), false};
    }

    const double two_m = 2.0 * static_cast<double>(g.edge_count());
    // e[i][j]: fraction of edge ends joining i and j (each direction stored).
    std::vector<std::map<std::uint32_t, double>> e(n);
    std::vector<double> a(n);
    std::vector<std::uint32_t> version(n, 0);
    std::vector<bool> alive(n, true);
    std::vector<std::size_t> cluster_id(n);
    for (node v = 0; v < n; ++v) {
        a[v] = static_cast<double>(g.degree_of(v)) / two_m;
        for (node w : g.neighbors(v)) e[v][w] = 1.0 / two_m;
        cluster_id[v] = v;
    }

    std::priority_queue<Candidate, std::vector<Candidate>, Lower> heap;
    auto push = [&](std::uint32_t i, std::uint32_t j, double eij) {
        if (i > j) std::swap(i, j);
        heap.push({2.0 * (eij - a[i] * a[j]), i, j, version[i], version[j]});
    };
    for (const Edge& edge : g.edges()) push(edge.u, edge.v, 1.0 / two_m);

    while (!heap.empty()) {
        deadline.tick();
        const Candidate c = heap.top();
        heap.pop();
        if (!alive[c.a] || !alive[c.b] || version[c.a] != c.version_a || version[c.b] != c.version_b) {
            continue;
        }
        // Fold the smaller neighbor map into the larger one.
        std::uint32_t keep = c.a, gone = c.b;
        if (e[keep].size() < e[gone].size()) std::swap(keep, gone);
        e[keep].erase(gone);
        for (const auto& [k, w] : e[gone]) {
            if (k == keep) continue;
            e[keep][k] += w;
            e[k].erase(gone);
            e[k][keep] += w;
        }
        e[gone].clear();
        alive[gone] = false;
        a[keep] += a[gone];
        ++version[keep];
        cluster_id[keep] = dendrogram.merge(cluster_id[std::min(keep, gone)],
                                            cluster_id[std::max(keep, gone)]);
        for (const auto& [k, w] : e[keep]) push(keep, k, w);
    }

    dendrogram.compute_modularity(g);
    Partition best = best_modularity_cut(dendrogram, g);
    return {std::move(best), std::move(dendrogram), false};
}

} // namespace commkit
