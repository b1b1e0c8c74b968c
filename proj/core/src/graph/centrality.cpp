#include <algorithm>
#include <cmath>
#include <map>

#include "commkit/error.hpp"
#include "commkit/topology.hpp"

namespace commkit {

namespace {

// One Brandes single-source pass. Accumulates node dependencies into
// `node_acc` and, when given, edge dependencies into `edge_acc` keyed by CSR
// slot of the (lower, higher) orientation.
struct BrandesWorkspace {
    std::vector<node> order;
    std::vector<std::vector<node>> preds;
    std::vector<double> sigma;
    std::vector<long> dist;
    std::vector<double> delta;

    explicit BrandesWorkspace(std::size_t n) : preds(n), sigma(n), dist(n), delta(n) {}
};

void brandes_source(const Graph& g, node s, BrandesWorkspace& ws, std::vector<double>& node_acc,
                    std::map<Edge, double>* edge_acc) {
    const std::size_t n = g.node_count();
    ws.order.clear();
    for (std::size_t i = 0; i < n; ++i) {
        ws.preds[i].clear();
        ws.sigma[i] = 0.0;
        ws.dist[i] = -1;
        ws.delta[i] = 0.0;
    }
    ws.sigma[s] = 1.0;
    ws.dist[s] = 0;
    ws.order.push_back(s);
    for (std::size_t head = 0; head < ws.order.size(); ++head) {
        node v = ws.order[head];
        for (node w : g.neighbors(v)) {
            if (ws.dist[w] < 0) {
                ws.dist[w] = ws.dist[v] + 1;
                ws.order.push_back(w);
            }
            if (ws.dist[w] == ws.dist[v] + 1) {
                ws.sigma[w] += ws.sigma[v];
                ws.preds[w].push_back(v);
            }
        }
    }
    for (auto it = ws.order.rbegin(); it != ws.order.rend(); ++it) {
        node w = *it;
        for (node v : ws.preds[w]) {
            double c = ws.sigma[v] / ws.sigma[w] * (1.0 + ws.delta[w]);
            ws.delta[v] += c;
            if (edge_acc) (*edge_acc)[{std::min(v, w), std::max(v, w)}] += c;
        }
        if (w != s) node_acc[w] += ws.delta[w];
    }
}

} // namespace

NodeMetricVector centrality(const Graph& g, CentralityKind kind) {
    const std::size_t n = g.node_count();
    if (n == 0) throw ArgumentError("centrality of an empty graph");
    switch (kind) {
    case CentralityKind::Degree: {
        NodeMetricVector out{MetricKind::Degree, std::vector<double>(n)};
        for (node v = 0; v < n; ++v) out.values[v] = static_cast<double>(g.degree_of(v));
        return out;
    }
    case CentralityKind::Closeness: {
        NodeMetricVector out{MetricKind::Closeness, std::vector<double>(n, 0.0)};
        for (node v = 0; v < n; ++v) {
            std::size_t reached = 0;
            double total = 0.0;
            for (std::size_t d : shortest_distances(g, v)) {
                if (d == kUnreachable) continue;
                ++reached;
                total += static_cast<double>(d);
            }
            if (total > 0.0) out.values[v] = static_cast<double>(reached - 1) / total;
        }
        return out;
    }
    case CentralityKind::Betweenness: {
        NodeMetricVector out{MetricKind::Betweenness, std::vector<double>(n, 0.0)};
        BrandesWorkspace ws(n);
        for (node s = 0; s < n; ++s) brandes_source(g, s, ws, out.values, nullptr);
        // Each unordered pair was counted from both ends.
        for (double& b : out.values) b *= 0.5;
        return out;
    }
    }
    throw ArgumentError("unknown centrality kind");
}

std::vector<double> edge_betweenness(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<double> node_acc(n, 0.0);
    std::map<Edge, double> acc;
    BrandesWorkspace ws(n);
    for (node s = 0; s < n; ++s) brandes_source(g, s, ws, node_acc, &acc);
    std::vector<double> out;
    out.reserve(g.edge_count());
    for (const Edge& e : g.edges()) out.push_back(0.5 * acc[e]);
    return out;
}

double centralization(const Graph& g, CentralityKind kind) {
    const std::size_t n = g.node_count();
    if (n < 3) throw ArgumentError("centralization needs at least 3 nodes");
    auto c = centrality(g, kind).values;
    const double top = *std::max_element(c.begin(), c.end());
    double spread = 0.0;
    for (double v : c) spread += top - v;
    const double nd = static_cast<double>(n);
    double star = 0.0;
    switch (kind) {
    case CentralityKind::Degree: star = (nd - 1.0) * (nd - 2.0); break;
    case CentralityKind::Betweenness: star = (nd - 1.0) * (nd - 1.0) * (nd - 2.0) / 2.0; break;
    case CentralityKind::Closeness: star = (nd - 1.0) * (nd - 2.0) / (2.0 * nd - 3.0); break;
    }
    return std::clamp(spread / star, 0.0, 1.0);
}

} // namespace commkit
