#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>
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

double mixing_fraction(const Graph& g, const Partition& p) {
    if (p.node_count() != g.node_count()) {
        throw ArgumentError("partition size does not match graph");
    }
    count external = 0;
    for (node v = 0; v < g.node_count(); ++v) {
        for (node w : g.neighbors(v)) {
            if (p[v] != p[w]) ++external;
        }
    }
    const count total = 2 * g.edge_count();
    return total ? static_cast<double>(external) / static_cast<double>(total) : 0.0;
}

Graph erdos_renyi(std::size_t n, double p, RngStream& rng) {
    if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("edge probability must lie in [0, 1]");
    std::vector<Edge> edges;
    for (node u = 0; u < n; ++u) {
        for (node v = u + 1; v < n; ++v) {
            if (rng.bernoulli(p)) edges.push_back({u, v});
        }
    }
    return Graph(n, edges);
}

Graph expected_degree_graph(std::span<const double> weights, RngStream& rng) {
    const std::size_t n = weights.size();
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw ArgumentError("node weights must be non-negative");
        total += w;
    }
    std::vector<Edge> edges;
    if (total <= 0.0) return Graph(n, edges);
    for (node u = 0; u < n; ++u) {
        for (node v = u + 1; v < n; ++v) {
            const double p = weights[u] * weights[v] / total;
            if (p > 1.0) {
                throw ArgumentError("edge probability exceeds 1 for pair (" + std::to_string(u) +
                                    ", " + std::to_string(v) + ")");
            }
            if (rng.bernoulli(p)) edges.push_back({u, v});
        }
    }
    return Graph(n, edges);
}

bool is_graphical(std::span<const std::size_t> degrees) {
    const std::size_t n = degrees.size();
    std::vector<std::size_t> d(degrees.begin(), degrees.end());
    std::sort(d.begin(), d.end(), std::greater<>());
    std::uint64_t sum = std::accumulate(d.begin(), d.end(), std::uint64_t{0});
    if (sum % 2) return false;
    if (n && d.front() >= n) return false;
    // suffix[i] = d[i] + ... + d[n-1]
    std::vector<std::uint64_t> suffix(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + d[i];
    std::uint64_t prefix = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        prefix += d[k - 1];
        // Among indices >= k, those with d >= k contribute k, the rest d.
        auto first_small = std::lower_bound(d.begin() + static_cast<std::ptrdiff_t>(k), d.end(), k,
                                            std::greater<>());
        auto big = static_cast<std::uint64_t>(first_small - (d.begin() + static_cast<std::ptrdiff_t>(k)));
        std::uint64_t rhs = static_cast<std::uint64_t>(k) * (k - 1) + big * k +
                            suffix[static_cast<std::size_t>(first_small - d.begin())];
        if (prefix > rhs) return false;
    }
    return true;
}

Graph configuration_model(std::span<const std::size_t> degrees, RngStream& rng) {
    const std::size_t n = degrees.size();
    std::uint64_t sum = std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0});
    if (sum % 2) throw ArgumentError("degree sum is odd");
    if (!is_graphical(degrees)) throw ArgumentError("degree sequence is not graphical");

    std::vector<node> stubs;
    stubs.reserve(sum);
    for (node v = 0; v < n; ++v) stubs.insert(stubs.end(), degrees[v], v);
    rng.shuffle(std::span<node>(stubs));

    std::vector<Edge> edges(sum / 2);
    std::unordered_map<std::uint64_t, std::uint32_t> multiplicity;
    multiplicity.reserve(edges.size() * 2);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        edges[i] = {stubs[2 * i], stubs[2 * i + 1]};
        ++multiplicity[edge_key(edges[i].u, edges[i].v)];
    }

    auto is_bad = [&](const Edge& e) {
        return e.u == e.v || multiplicity[edge_key(e.u, e.v)] > 1;
    };
    auto collect_bad = [&] {
        std::vector<std::size_t> bad;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (is_bad(edges[i])) bad.push_back(i);
        }
        return bad;
    };
    auto remove = [&](const Edge& e) {
        auto it = multiplicity.find(edge_key(e.u, e.v));
        if (--it->second == 0) multiplicity.erase(it);
    };

    // Phase 1: re-pair the stubs of offending edges together with as many
    // randomly chosen edges.
    for (int sweep = 0; sweep < 100; ++sweep) {
        std::vector<std::size_t> bad = collect_bad();
        if (bad.empty()) break;
        std::vector<std::size_t> pool = bad;
        std::unordered_set<std::size_t> in_pool(bad.begin(), bad.end());
        for (std::size_t extra = 0; extra < bad.size() && pool.size() < edges.size(); ++extra) {
            std::size_t pick = rng.uniform(edges.size());
            if (in_pool.insert(pick).second) pool.push_back(pick);
        }
        std::sort(pool.begin(), pool.end());
        std::vector<node> loose;
        for (std::size_t i : pool) {
            remove(edges[i]);
            loose.push_back(edges[i].u);
            loose.push_back(edges[i].v);
        }
        rng.shuffle(std::span<node>(loose));
        for (std::size_t k = 0; k < pool.size(); ++k) {
            edges[pool[k]] = {loose[2 * k], loose[2 * k + 1]};
            ++multiplicity[edge_key(loose[2 * k], loose[2 * k + 1])];
        }
    }

    // Phase 2: targeted double-edge swaps against random partners.
    std::vector<std::size_t> bad = collect_bad();
    std::size_t budget = 1000 * (bad.size() + 1) + 100 * edges.size();
    while (!bad.empty() && budget-- > 0) {
        std::size_t i = bad.back();
        if (!is_bad(edges[i])) {
            bad.pop_back();
            continue;
        }
        std::size_t j = rng.uniform(edges.size());
        if (j == i) continue;
        Edge a = edges[i], b = edges[j];
        Edge x{a.u, b.u}, y{a.v, b.v};
        if (rng.bernoulli(0.5)) { x = {a.u, b.v}; y = {a.v, b.u}; }
        if (x.u == x.v || y.u == y.v || edge_key(x.u, x.v) == edge_key(y.u, y.v)) continue;
        if (multiplicity.count(edge_key(x.u, x.v)) || multiplicity.count(edge_key(y.u, y.v))) continue;
        remove(a);
        remove(b);
        edges[i] = x;
        edges[j] = y;
        ++multiplicity[edge_key(x.u, x.v)];
        ++multiplicity[edge_key(y.u, y.v)];
        bad.pop_back();
    }
    if (!collect_bad().empty()) {
        throw GenerationError("configuration model: could not remove self-loops and multi-edges");
    }
    return Graph(n, edges);
}

Graph barabasi_albert(std::size_t n, std::size_t m, RngStream& rng, std::size_t k_max) {
    if (m < 1 || n <= m) throw ArgumentError("barabasi_albert requires n > m >= 1");
    if (k_max != 0 && k_max <= m) throw ArgumentError("barabasi_albert degree cap must exceed m");
    const std::size_t cap = k_max == 0 ? n : k_max;
    std::vector<Edge> edges;
    std::vector<std::size_t> degree(n, 0);
    // Every endpoint appears once per incident edge: uniform draws from this
    // list are degree-proportional. Saturated nodes are rejected on draw.
    std::vector<node> endpoints;
    for (node u = 0; u <= m; ++u) {
        for (node v = u + 1; v <= m; ++v) {
            edges.push_back({u, v});
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
        degree[u] = m;
    }
    std::vector<node> targets;
    for (node newcomer = static_cast<node>(m + 1); newcomer < n; ++newcomer) {
        targets.clear();
        while (targets.size() < m) {
            node t = endpoints[rng.uniform(endpoints.size())];
            if (degree[t] >= cap) continue;
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
        }
        for (node t : targets) {
            edges.push_back({t, newcomer});
            endpoints.push_back(t);
            endpoints.push_back(newcomer);
            ++degree[t];
        }
        degree[newcomer] = m;
    }
    return Graph(n, edges);
}

Graph evolutionary_pa(std::size_t n, std::size_t m, const EvolutionaryParams& params,
                      RngStream& rng, std::size_t k_max) {
    if (m < 1 || n <= m) throw ArgumentError("evolutionary_pa requires n > m >= 1");
    if (k_max != 0 && k_max <= m) throw ArgumentError("evolutionary_pa degree cap must exceed m");
    const std::size_t cap = k_max == 0 ? n : k_max;
    const double b = params.temptation;
    const double eps = params.selection_pressure;
    if (!(b > 1.0)) throw ArgumentError("temptation b must exceed 1");
    if (!(eps >= 0.0 && eps <= 1.0)) throw ArgumentError("selection pressure must lie in [0, 1]");

    std::vector<std::vector<node>> adj(n);
    std::vector<Edge> edges;
    std::vector<bool> cooperates(n, false);
    std::vector<double> payoff(n, 0.0);

    for (node u = 0; u <= m; ++u) {
        cooperates[u] = rng.bernoulli(0.5);
        for (node v = u + 1; v <= m; ++v) {
            adj[u].push_back(v);
            adj[v].push_back(u);
            edges.push_back({u, v});
        }
    }

    auto play_round = [&](std::size_t alive) {
        std::fill(payoff.begin(), payoff.begin() + static_cast<std::ptrdiff_t>(alive), 0.0);
        for (const Edge& e : edges) {
            const bool cu = cooperates[e.u], cv = cooperates[e.v];
            if (cu && cv) {
                payoff[e.u] += 1.0;
                payoff[e.v] += 1.0;
            } else if (!cu && cv) {
                payoff[e.u] += b;
            } else if (cu && !cv) {
                payoff[e.v] += b;
            }
        }
    };
    auto imitate = [&](std::size_t alive) {
        std::vector<bool> next(cooperates.begin(), cooperates.begin() + static_cast<std::ptrdiff_t>(alive));
        for (node v = 0; v < alive; ++v) {
            if (adj[v].empty()) continue;
            node u = adj[v][rng.uniform(adj[v].size())];
            const double gain = payoff[u] - payoff[v];
            if (gain <= 0.0) continue;
            const double scale = b * static_cast<double>(std::max(adj[v].size(), adj[u].size()));
            if (rng.bernoulli(std::min(1.0, gain / scale))) next[v] = cooperates[u];
        }
        std::copy(next.begin(), next.end(), cooperates.begin());
    };

    play_round(m + 1);
    imitate(m + 1);

    std::vector<double> cumulative;
    std::vector<node> targets;
    for (node newcomer = static_cast<node>(m + 1); newcomer < n; ++newcomer) {
        const std::size_t alive = newcomer;
        double fitness_total = 0.0;
        for (node v = 0; v < alive; ++v) fitness_total += payoff[v];
        cumulative.resize(alive);
        double acc = 0.0;
        for (node v = 0; v < alive; ++v) {
            double w = (1.0 - eps) / static_cast<double>(alive);
            w += fitness_total > 0.0 ? eps * payoff[v] / fitness_total
                                     : eps / static_cast<double>(alive);
            if (adj[v].size() >= cap) w = 0.0;
            acc += w;
            cumulative[v] = acc;
        }
        // Only possible with eps = 1 and all fitness on saturated nodes.
        const bool uniform = acc <= 0.0;
        targets.clear();
        while (targets.size() < m) {
            node t;
            if (uniform) {
                t = static_cast<node>(rng.uniform(alive));
            } else {
                const double x = rng.uniform_real() * acc;
                auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
                t = static_cast<node>(std::min<std::ptrdiff_t>(it - cumulative.begin(),
                                                               static_cast<std::ptrdiff_t>(alive) - 1));
            }
            if (adj[t].size() >= cap) continue;
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
        }
        cooperates[newcomer] = rng.bernoulli(0.5);
        for (node t : targets) {
            adj[t].push_back(newcomer);
            adj[newcomer].push_back(t);
            edges.push_back({t, newcomer});
        }
        play_round(alive + 1);
        imitate(alive + 1);
    }
    return Graph(n, edges);
}

} // namespace commkit
