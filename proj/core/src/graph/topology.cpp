#include "commkit/topology.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "commkit/error.hpp"
#include "commkit/partition.hpp"

namespace commkit {

namespace {
__extension__ using i128 = __int128;
}

std::string_view to_string(MetricKind kind) {
    switch (kind) {
    case MetricKind::Degree: return "degree";
    case MetricKind::LocalClustering: return "local_clustering";
    case MetricKind::Closeness: return "closeness";
    case MetricKind::Betweenness: return "betweenness";
    }
    return "?";
}

std::string_view to_string(CentralityKind kind) {
    switch (kind) {
    case CentralityKind::Degree: return "degree";
    case CentralityKind::Closeness: return "closeness";
    case CentralityKind::Betweenness: return "betweenness";
    }
    return "?";
}

std::size_t degree(const Graph& g, node v) {
    g.check_node(v);
    return g.degree_of(v);
}

namespace {

// Number of edges among the neighbors of v; neighbor lists are sorted so the
// intersection is a merge.
count neighbor_links(const Graph& g, node v) {
    auto nv = g.neighbors(v);
    count links = 0;
    for (node u : nv) {
        auto nu = g.neighbors(u);
        auto a = nv.begin();
        auto b = nu.begin();
        while (a != nv.end() && b != nu.end()) {
            if (*a < *b) ++a;
            else if (*b < *a) ++b;
            else { ++links; ++a; ++b; }
        }
    }
    return links / 2;
}

} // namespace

double local_clustering(const Graph& g, node v) {
    g.check_node(v);
    const std::size_t k = g.degree_of(v);
    if (k < 2) return 0.0;
    const double possible = 0.5 * static_cast<double>(k) * static_cast<double>(k - 1);
    return static_cast<double>(neighbor_links(g, v)) / possible;
}

NodeMetricVector local_clustering_all(const Graph& g) {
    NodeMetricVector out{MetricKind::LocalClustering, std::vector<double>(g.node_count())};
    for (node v = 0; v < g.node_count(); ++v) out.values[v] = local_clustering(g, v);
    return out;
}

double transitivity(const Graph& g) {
    if (g.node_count() == 0) throw ArgumentError("transitivity of an empty graph");
    auto local = local_clustering_all(g);
    double sum = 0.0;
    for (double c : local.values) sum += c;
    return sum / static_cast<double>(g.node_count());
}

std::vector<std::size_t> shortest_distances(const Graph& g, node source) {
    g.check_node(source);
    std::vector<std::size_t> dist(g.node_count(), kUnreachable);
    std::vector<node> frontier{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < frontier.size(); ++head) {
        node u = frontier[head];
        for (node w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                frontier.push_back(w);
            }
        }
    }
    return dist;
}

std::optional<double> assortativity(const Graph& g) {
    if (g.edge_count() == 0) return std::nullopt;
    // Integer moments over the 2m directed endpoint pairs; exact up to int128.
    i128 m2 = static_cast<i128>(2 * g.edge_count());
    i128 s1 = 0, s2 = 0, sxy = 0;
    for (node v = 0; v < g.node_count(); ++v) {
        i128 k = static_cast<i128>(g.degree_of(v));
        s1 += k * k;
        s2 += k * k * k;
        for (node w : g.neighbors(v)) sxy += k * static_cast<i128>(g.degree_of(w));
    }
    i128 var = m2 * s2 - s1 * s1;
    if (var == 0) return std::nullopt;
    i128 cov = m2 * sxy - s1 * s1;
    double r = static_cast<double>(static_cast<long double>(cov) / static_cast<long double>(var));
    return std::clamp(r, -1.0, 1.0);
}

BridgeReport bridges_and_cutpoints(const Graph& g) {
    const std::size_t n = g.node_count();
    BridgeReport report;
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> disc(n, kNone), low(n, 0);
    std::vector<bool> is_cut(n, false);
    std::size_t timer = 0;

    struct Frame {
        node v;
        node parent;
        std::size_t next;     // index into neighbor list
        std::size_t children; // DFS-tree children, for the root rule
    };
    std::vector<Frame> stack;
    for (node root = 0; root < n; ++root) {
        if (disc[root] != kNone) continue;
        disc[root] = low[root] = timer++;
        stack.push_back({root, root, 0, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                node w = nb[f.next++];
                if (disc[w] == kNone) {
                    ++f.children;
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, 0, 0});
                } else if (w != f.parent) {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            Frame done = f;
            stack.pop_back();
            if (stack.empty()) {
                if (done.children > 1) is_cut[done.v] = true;
                continue;
            }
            Frame& parent = stack.back();
            low[parent.v] = std::min(low[parent.v], low[done.v]);
            if (low[done.v] > disc[parent.v]) {
                report.bridges.push_back({std::min(parent.v, done.v), std::max(parent.v, done.v)});
            }
            if (parent.v != root && low[done.v] >= disc[parent.v]) is_cut[parent.v] = true;
        }
    }
    std::sort(report.bridges.begin(), report.bridges.end());
    for (node v = 0; v < n; ++v) {
        if (is_cut[v]) report.cutpoints.push_back(v);
    }
    return report;
}

Partition connected_components(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<community> label(n, static_cast<community>(-1));
    community next = 0;
    std::vector<node> queue;
    for (node s = 0; s < n; ++s) {
        if (label[s] != static_cast<community>(-1)) continue;
        label[s] = next;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (node w : g.neighbors(queue[head])) {
                if (label[w] == static_cast<community>(-1)) {
                    label[w] = next;
                    queue.push_back(w);
                }
            }
        }
        ++next;
    }
    return Partition(label);
}

GraphSummary summarize(const Graph& g) {
    GraphSummary s;
    const std::size_t n = g.node_count();
    s.node_count = n;
    s.edge_count = g.edge_count();
    if (n >= 2) {
        s.density = 2.0 * static_cast<double>(g.edge_count()) /
                    (static_cast<double>(n) * static_cast<double>(n - 1));
    }
    if (n >= 1) s.transitivity = transitivity(g);
    s.assortativity = assortativity(g);
    long double total = 0.0L;
    count pairs = 0;
    for (node v = 0; v < n; ++v) {
        for (std::size_t d : shortest_distances(g, v)) {
            if (d != kUnreachable && d > 0) {
                total += static_cast<long double>(d);
                ++pairs;
            }
        }
    }
    s.mean_distance = pairs ? static_cast<double>(total / static_cast<long double>(pairs)) : 0.0;
    if (n >= 3) {
        s.degree_centralization = centralization(g, CentralityKind::Degree);
        s.closeness_centralization = centralization(g, CentralityKind::Closeness);
        s.betweenness_centralization = centralization(g, CentralityKind::Betweenness);
    }
    s.component_count = n ? connected_components(g).community_count() : 0;
    return s;
}

} // namespace commkit
