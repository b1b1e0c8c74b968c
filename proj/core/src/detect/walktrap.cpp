// Pons-Latapy random-walk distances with Ward-style agglomeration.
#include <cmath>
#include <queue>
#include <set>
#include <tuple>

#include "internal.hpp"

namespace commkit {

namespace {

// Row i of P^t, P = D^-1 A; isolated nodes keep their walker.
std::vector<double> walk_profile(const Graph& g, node start, std::size_t t) {
    const std::size_t n = g.node_count();
    std::vector<double> x(n, 0.0), y(n, 0.0);
    x[start] = 1.0;
    for (std::size_t s = 0; s < t; ++s) {
        std::fill(y.begin(), y.end(), 0.0);
        for (node i = 0; i < n; ++i) {
            if (x[i] == 0.0) continue;
            const std::size_t d = g.degree_of(i);
            if (d == 0) {
                y[i] += x[i];
                continue;
            }
            const double share = x[i] / static_cast<double>(d);
            for (node k : g.neighbors(i)) y[k] += share;
        }
        x.swap(y);
    }
    return x;
}

double squared_distance(const Graph& g, const std::vector<double>& a, const std::vector<double>& b) {
    double r2 = 0.0;
    for (node k = 0; k < g.node_count(); ++k) {
        const std::size_t d = g.degree_of(k);
        if (d == 0) continue;
        const double diff = a[k] - b[k];
        r2 += diff * diff / static_cast<double>(d);
    }
    return r2;
}

struct Candidate {
    double cost;
    std::uint32_t a; // a < b
    std::uint32_t b;
    std::uint32_t version_a;
    std::uint32_t version_b;
};

// Smallest cost first; ties go to the lexicographically smallest pair.
struct Greater {
    bool operator()(const Candidate& x, const Candidate& y) const {
        if (x.cost != y.cost) return x.cost > y.cost;
        return std::tie(x.a, x.b) > std::tie(y.a, y.b);
    }
};

} // namespace

double walk_distance(const Graph& g, node u, node v, std::size_t t) {
    g.check_node(u);
    g.check_node(v);
    return std::sqrt(squared_distance(g, walk_profile(g, u, t), walk_profile(g, v, t)));
}

DetectionResult detect_walktrap(const Graph& g, const DetectorParams& params) {
    detail::Deadline deadline(params, "walktrap");
    const std::size_t n = g.node_count();
    const std::size_t t = params.walktrap.steps;
    Dendrogram dendrogram(n);
    if (g.edge_count() == 0) {
        dendrogram.compute_modularity(g);
        return {Partition::singletons(n), std::move(dendrogram), false};
    }

    std::vector<std::vector<double>> profile(n);
    for (node v = 0; v < n; ++v) {
        profile[v] = walk_profile(g, v, t);
        deadline.tick();
    }
    std::vector<std::size_t> size(n, 1);
    std::vector<std::set<std::uint32_t>> adjacent(n);
    std::vector<std::uint32_t> version(n, 0);
    std::vector<bool> alive(n, true);
    std::vector<std::size_t> cluster_id(n);
    for (node v = 0; v < n; ++v) {
        cluster_id[v] = v;
        adjacent[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
    }

    const double inv_n = 1.0 / static_cast<double>(n);
    auto cost = [&](std::uint32_t a, std::uint32_t b) {
        const double sa = static_cast<double>(size[a]);
        const double sb = static_cast<double>(size[b]);
        return inv_n * sa * sb / (sa + sb) * squared_distance(g, profile[a], profile[b]);
    };
    std::priority_queue<Candidate, std::vector<Candidate>, Greater> heap;
    auto push = [&](std::uint32_t a, std::uint32_t b) {
        if (a > b) std::swap(a, b);
        heap.push({cost(a, b), a, b, version[a], version[b]});
    };
    for (const Edge& e : g.edges()) push(e.u, e.v);

    while (!heap.empty()) {
        deadline.check();
        const Candidate c = heap.top();
        heap.pop();
        if (!alive[c.a] || !alive[c.b] || version[c.a] != c.version_a || version[c.b] != c.version_b) {
            continue;
        }
        // The merged community lives in slot a.
        const std::uint32_t keep = c.a, gone = c.b;
        const double sk = static_cast<double>(size[keep]);
        const double sg = static_cast<double>(size[gone]);
        for (std::size_t k = 0; k < n; ++k) {
            profile[keep][k] = (sk * profile[keep][k] + sg * profile[gone][k]) / (sk + sg);
        }
        std::vector<double>().swap(profile[gone]);
        size[keep] += size[gone];
        alive[gone] = false;
        ++version[keep];
        for (std::uint32_t w : adjacent[gone]) {
            adjacent[w].erase(gone);
            if (w != keep) {
                adjacent[w].insert(keep);
                adjacent[keep].insert(w);
            }
        }
        adjacent[keep].erase(gone);
        adjacent[gone].clear();
        cluster_id[keep] = dendrogram.merge(cluster_id[keep], cluster_id[gone]);
        for (std::uint32_t w : adjacent[keep]) push(keep, w);
    }

    dendrogram.compute_modularity(g);
    Partition best = best_modularity_cut(dendrogram, g);
    return {std::move(best), std::move(dendrogram), false};
}

} // namespace commkit
