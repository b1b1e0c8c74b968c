#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "commkit/error.hpp"
#include "commkit/generators.hpp"

namespace commkit {

std::string_view to_string(SeedModel model) {
    switch (model) {
    case SeedModel::CM: return "cm";
    case SeedModel::BA: return "ba";
    case SeedModel::EV: return "ev";
    }
    return "?";
}

SeedModel parse_seed_model(std::string_view name) {
    if (name == "cm" || name == "CM") return SeedModel::CM;
    if (name == "ba" || name == "BA") return SeedModel::BA;
    if (name == "ev" || name == "EV") return SeedModel::EV;
    throw ArgumentError("unknown seed model '" + std::string(name) + "' (expected cm, ba or ev)");
}

void LfrParams::validate() const {
    if (n < 2) throw ArgumentError("LFR needs at least 2 nodes");
    if (!(k_avg >= 1.0)) throw ArgumentError("LFR mean degree must be at least 1");
    if (k_max < 1 || k_max > n - 1) throw ArgumentError("LFR k_max must lie in [1, n-1]");
    if (!(gamma > 1.0)) throw ArgumentError("LFR gamma must exceed 1");
    if (!(beta > 1.0)) throw ArgumentError("LFR beta must exceed 1");
    if (c_min < 1 || c_max < c_min) throw ArgumentError("LFR needs 1 <= c_min <= c_max");
    if (c_min > n) throw ArgumentError("LFR c_min exceeds n");
    if (!(mu >= 0.0 && mu <= 1.0)) throw ArgumentError("LFR mu must lie in [0, 1]");
    if (!(mu_tolerance >= 0.0)) throw ArgumentError("LFR mu_tolerance must be non-negative");
    if (!(ev.temptation > 1.0)) throw ArgumentError("EV temptation b must exceed 1");
    if (!(ev.selection_pressure >= 0.0 && ev.selection_pressure <= 1.0)) {
        throw ArgumentError("EV selection pressure must lie in [0, 1]");
    }
}

namespace {

std::uint64_t edge_key(node u, node v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

Graph build_seed_graph(const LfrParams& p, RngStream& rng) {
    const auto links = static_cast<std::size_t>(std::max(1.0, std::round(p.k_avg / 2.0)));
    switch (p.seed_model) {
    case SeedModel::CM: {
        auto degrees = powerlaw_degree_sequence(p.n, p.k_avg, p.k_max, p.gamma, rng);
        return configuration_model(degrees, rng);
    }
    case SeedModel::BA: return barabasi_albert(p.n, links, rng, p.k_max);
    case SeedModel::EV: return evolutionary_pa(p.n, links, p.ev, rng, p.k_max);
    }
    throw ArgumentError("unknown seed model");
}

struct Assignment {
    std::vector<community> label;
    std::vector<std::size_t> target;   // internal degree targets
    std::vector<std::size_t> sizes;
    std::size_t capped_deficit = 0;
};

// Places nodes hardest-first into communities large enough for their
// internal degree. Nodes that fit nowhere go to the largest community with
// room and have their target capped at its size - 1.
Assignment assign_communities(const std::vector<std::size_t>& wanted,
                              std::vector<std::size_t> sizes, RngStream& rng) {
    const std::size_t n = wanted.size();
    Assignment a;
    a.label.assign(n, 0);
    a.target = wanted;
    a.sizes = sizes;
    std::vector<std::size_t> free_slots = sizes;
    std::vector<node> order(n);
    std::iota(order.begin(), order.end(), node{0});
    rng.shuffle(std::span<node>(order));
    std::stable_sort(order.begin(), order.end(),
                     [&](node x, node y) { return wanted[x] > wanted[y]; });

    std::vector<std::size_t> candidates;
    for (node v : order) {
        candidates.clear();
        std::size_t slot_total = 0;
        for (std::size_t c = 0; c < sizes.size(); ++c) {
            if (free_slots[c] > 0 && sizes[c] > wanted[v]) {
                candidates.push_back(c);
                slot_total += free_slots[c];
            }
        }
        std::size_t chosen = 0;
        if (!candidates.empty()) {
            std::size_t x = rng.uniform(slot_total);
            for (std::size_t c : candidates) {
                if (x < free_slots[c]) { chosen = c; break; }
                x -= free_slots[c];
            }
        } else {
            std::size_t best_size = 0;
            for (std::size_t c = 0; c < sizes.size(); ++c) {
                if (free_slots[c] > 0 && sizes[c] > best_size) {
                    best_size = sizes[c];
                    chosen = c;
                }
            }
            a.capped_deficit += wanted[v] - (best_size - 1);
            a.target[v] = best_size - 1;
        }
        a.label[v] = static_cast<community>(chosen);
        --free_slots[chosen];
    }
    return a;
}

// Makes every community's target sum even, first by swapping nodes of
// opposite target parity between two odd communities, then by nudging targets.
void fix_parity(Assignment& a, const std::vector<std::size_t>& degree, RngStream& rng) {
    const std::size_t n = a.label.size();
    const std::size_t k = a.sizes.size();
    std::vector<std::size_t> sum(k, 0);
    for (node v = 0; v < n; ++v) sum[a.label[v]] += a.target[v];
    std::vector<std::size_t> odd;
    for (std::size_t c = 0; c < k; ++c) {
        if (sum[c] % 2) odd.push_back(c);
    }
    std::vector<std::vector<node>> members(k);
    for (node v = 0; v < n; ++v) members[a.label[v]].push_back(v);

    std::vector<bool> fixed(k, false);
    for (std::size_t i = 0; i + 1 < odd.size(); i += 2) {
        const std::size_t ca = odd[i], cb = odd[i + 1];
        bool done = false;
        for (std::size_t xi = 0; xi < members[ca].size() && !done; ++xi) {
            const node x = members[ca][xi];
            if (a.target[x] >= a.sizes[cb]) continue;
            for (std::size_t yi = 0; yi < members[cb].size() && !done; ++yi) {
                const node y = members[cb][yi];
                if ((a.target[x] + a.target[y]) % 2 == 0 || a.target[y] >= a.sizes[ca]) continue;
                a.label[x] = static_cast<community>(cb);
                a.label[y] = static_cast<community>(ca);
                members[ca][xi] = y;
                members[cb][yi] = x;
                done = true;
            }
        }
        if (done) fixed[ca] = fixed[cb] = true;
    }
    for (std::size_t c : odd) {
        if (fixed[c]) continue;
        auto& m = members[c];
        const std::size_t start = rng.uniform(m.size());
        bool done = false;
        for (std::size_t s = 0; s < m.size() && !done; ++s) {
            const node v = m[(start + s) % m.size()];
            if (a.target[v] + 1 <= std::min(degree[v], a.sizes[c] - 1)) {
                ++a.target[v];
                done = true;
            }
        }
        for (std::size_t s = 0; s < m.size() && !done; ++s) {
            const node v = m[(start + s) % m.size()];
            if (a.target[v] > 0) {
                --a.target[v];
                done = true;
            }
        }
    }
}

// Largest Erdos-Gallai excess over one community's internal degree targets;
// zero exactly when a simple graph realizes them.
std::size_t excess(std::vector<std::size_t> d) {
    std::sort(d.rbegin(), d.rend());
    std::size_t lhs = 0, worst = 0;
    for (std::size_t k = 1; k <= d.size(); ++k) {
        lhs += d[k - 1];
        std::size_t rhs = k * (k - 1);
        for (std::size_t i = k; i < d.size(); ++i) rhs += std::min(d[i], k);
        if (lhs > rhs) worst = std::max(worst, lhs - rhs);
    }
    return worst;
}

// Hubs placed hardest-first can crowd a community past what any simple graph
// realizes. Repairs such communities by swapping equal-parity nodes with other
// communities (either pushing the heaviest node out or pulling a heavier one
// in, whichever lowers the combined excess most) and trims the two largest
// targets when no swap helps. Returns the internal degree trimmed.
std::size_t make_graphical(Assignment& a) {
    const std::size_t k = a.sizes.size();
    const node none = static_cast<node>(a.label.size());
    std::vector<std::vector<node>> members(k);
    for (node v = 0; v < a.label.size(); ++v) members[a.label[v]].push_back(v);
    // Excess of community c with `out` replaced by `in`.
    auto excess_with = [&](std::size_t c, node out, node in) {
        std::vector<std::size_t> d;
        d.reserve(members[c].size());
        for (node v : members[c]) d.push_back(v == out ? a.target[in] : a.target[v]);
        return excess(std::move(d));
    };
    std::vector<std::size_t> bad(k);
    for (std::size_t c = 0; c < k; ++c) bad[c] = excess_with(c, none, 0);

    // Finds the swap of x (in c) with y (in b) lowering bad[c] + bad[b] most.
    auto best_swap = [&](std::size_t c, std::size_t& xi, std::size_t& b, std::size_t& yi) {
        long best_gain = 0;
        for (std::size_t i = 0; i < members[c].size(); ++i) {
            const node x = members[c][i];
            for (std::size_t o = 0; o < k; ++o) {
                if (o == c || a.sizes[o] <= a.target[x]) continue;
                for (std::size_t j = 0; j < members[o].size(); ++j) {
                    const node y = members[o][j];
                    if (a.target[y] == a.target[x] || a.target[y] % 2 != a.target[x] % 2 ||
                        a.target[y] >= a.sizes[c]) {
                        continue;
                    }
                    const std::size_t nc = excess_with(c, x, y);
                    if (nc >= bad[c]) continue;
                    const long gain = static_cast<long>(bad[c] + bad[o]) -
                                      static_cast<long>(nc + excess_with(o, y, x));
                    if (gain > best_gain) {
                        best_gain = gain;
                        xi = i, b = o, yi = j;
                    }
                }
            }
        }
        return best_gain > 0;
    };

    // Every swap lowers the total excess, so the sweeps terminate. A swap can
    // move excess into a community already visited, hence the repeat.
    std::size_t trimmed = 0;
    for (bool swapped = true; swapped;) {
        swapped = false;
        for (std::size_t c = 0; c < k; ++c) {
            auto& mc = members[c];
            while (bad[c] > 0) {
                std::size_t xi = 0, b = 0, yi = 0;
                if (best_swap(c, xi, b, yi)) {
                    std::swap(mc[xi], members[b][yi]);
                    a.label[mc[xi]] = static_cast<community>(c);
                    a.label[members[b][yi]] = static_cast<community>(b);
                    bad[c] = excess_with(c, none, 0);
                    bad[b] = excess_with(b, none, 0);
                    swapped = true;
                    continue;
                }
                std::sort(mc.begin(), mc.end(), [&](node x, node y) { return a.target[x] > a.target[y]; });
                if (mc.size() < 2 || a.target[mc[1]] == 0) break;
                --a.target[mc[0]];
                --a.target[mc[1]];
                trimmed += 2;
                bad[c] = excess_with(c, none, 0);
            }
        }
    }
    return trimmed;
}

/// Degree-preserving double-edge swaps minimizing sum_v |internal(v) - target(v)|.
class MixingRewirer {
public:
    MixingRewirer(const Graph& g, const std::vector<community>& label,
                  const std::vector<std::size_t>& target, std::size_t communities)
        : n_(g.node_count()), label_(label), adj_(n_), members_(communities),
          dev_(n_, 0), slot_(n_, kAbsent) {
        edges_ = g.edges();
        present_.reserve(edges_.size() * 2);
        edge_slot_.reserve(edges_.size() * 2);
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const Edge& e = edges_[i];
            adj_[e.u].push_back(e.v);
            adj_[e.v].push_back(e.u);
            present_.insert(edge_key(e.u, e.v));
            edge_slot_.emplace(edge_key(e.u, e.v), i);
        }
        for (node v = 0; v < n_; ++v) {
            members_[label_[v]].push_back(v);
            long internal = 0;
            for (node w : adj_[v]) internal += label_[w] == label_[v];
            dev_[v] = internal - static_cast<long>(target[v]);
            if (dev_[v] != 0) mark(v);
        }
    }

    std::vector<Edge> run(std::size_t budget, RngStream& rng) {
        for (std::size_t attempt = 0; attempt < budget && !unsatisfied_.empty(); ++attempt) {
            const node a = unsatisfied_[rng.uniform(unsatisfied_.size())];
            if (dev_[a] < 0) gain_internal(a, rng);
            else shed_internal(a, rng);
        }
        return edges_;
    }

private:
    static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

    bool linked(node u, node v) const { return present_.count(edge_key(u, v)) > 0; }

    void mark(node v) {
        if (slot_[v] == kAbsent) {
            slot_[v] = unsatisfied_.size();
            unsatisfied_.push_back(v);
        }
    }
    void unmark(node v) {
        if (slot_[v] == kAbsent) return;
        const node last = unsatisfied_.back();
        unsatisfied_[slot_[v]] = last;
        slot_[last] = slot_[v];
        unsatisfied_.pop_back();
        slot_[v] = kAbsent;
    }

    node random_neighbor(node v, bool same_community, RngStream& rng) const {
        const auto& nb = adj_[v];
        if (nb.empty()) return static_cast<node>(n_);
        for (int tries = 0; tries < 16; ++tries) {
            node w = nb[rng.uniform(nb.size())];
            if ((label_[w] == label_[v]) == same_community) return w;
        }
        return static_cast<node>(n_);
    }

    // Replaces old1, old2 by new1, new2 unless that increases the total deviation.
    bool try_swap(Edge old1, Edge old2, Edge new1, Edge new2) {
        if (new1.u == new1.v || new2.u == new2.v) return false;
        if (edge_key(new1.u, new1.v) == edge_key(new2.u, new2.v)) return false;
        if (linked(new1.u, new1.v) || linked(new2.u, new2.v)) return false;
        struct Delta {
            node v;
            long by;
        };
        std::array<Delta, 4> deltas{};
        int used = 0;
        auto account = [&](Edge e, long sign) {
            if (label_[e.u] != label_[e.v]) return;
            for (node x : {e.u, e.v}) {
                int i = 0;
                while (i < used && deltas[i].v != x) ++i;
                if (i == used) deltas[used++] = {x, 0};
                deltas[i].by += sign;
            }
        };
        account(old1, -1);
        account(old2, -1);
        account(new1, +1);
        account(new2, +1);
        long change = 0;
        for (int i = 0; i < used; ++i) {
            const long before = dev_[deltas[i].v];
            change += std::labs(before + deltas[i].by) - std::labs(before);
        }
        if (change > 0) return false;
        for (int i = 0; i < used; ++i) {
            const node v = deltas[i].v;
            dev_[v] += deltas[i].by;
            if (dev_[v] == 0) unmark(v);
            else mark(v);
        }
        replace(old1, new1);
        replace(old2, new2);
        return true;
    }

    void replace(Edge old_edge, Edge new_edge) {
        const std::uint64_t old_key = edge_key(old_edge.u, old_edge.v);
        const std::size_t idx = edge_slot_.at(old_key);
        edge_slot_.erase(old_key);
        present_.erase(old_key);
        detach(old_edge.u, old_edge.v);
        detach(old_edge.v, old_edge.u);
        edges_[idx] = {std::min(new_edge.u, new_edge.v), std::max(new_edge.u, new_edge.v)};
        const std::uint64_t new_key = edge_key(new_edge.u, new_edge.v);
        present_.insert(new_key);
        edge_slot_.emplace(new_key, idx);
        adj_[new_edge.u].push_back(new_edge.v);
        adj_[new_edge.v].push_back(new_edge.u);
    }

    void detach(node v, node w) {
        auto& nb = adj_[v];
        auto it = std::find(nb.begin(), nb.end(), w);
        *it = nb.back();
        nb.pop_back();
    }

    // a lacks internal links: trade external a-b and external c-d (c in a's
    // community) for a-c and b-d.
    void gain_internal(node a, RngStream& rng) {
        const node b = random_neighbor(a, false, rng);
        if (b == n_) return;
        const auto& group = members_[label_[a]];
        node c = static_cast<node>(n_);
        for (int tries = 0; tries < 4 && c == n_; ++tries) {
            const node cand = unsatisfied_[rng.uniform(unsatisfied_.size())];
            if (cand != a && label_[cand] == label_[a] && dev_[cand] < 0 && !linked(a, cand)) c = cand;
        }
        for (int tries = 0; tries < 8 && c == n_; ++tries) {
            const node cand = group[rng.uniform(group.size())];
            if (cand != a && !linked(a, cand)) c = cand;
        }
        if (c == n_) return;
        const node d = random_neighbor(c, false, rng);
        if (d == n_ || d == b) return;
        try_swap({a, b}, {c, d}, {a, c}, {b, d});
    }

    // a has too many internal links: trade internal a-c and a random edge b-d
    // for a-b and c-d.
    void shed_internal(node a, RngStream& rng) {
        const node c = random_neighbor(a, true, rng);
        if (c == n_) return;
        const Edge e = edges_[rng.uniform(edges_.size())];
        node b = e.u, d = e.v;
        if (rng.bernoulli(0.5)) std::swap(b, d);
        if (b == a || b == c || d == a || d == c) return;
        try_swap({a, c}, {b, d}, {a, b}, {c, d});
    }

    std::size_t n_;
    const std::vector<community>& label_;
    std::vector<std::vector<node>> adj_;
    std::vector<std::vector<node>> members_;
    std::vector<long> dev_;
    std::vector<std::size_t> slot_;
    std::vector<node> unsatisfied_;
    std::vector<Edge> edges_;
    std::unordered_set<std::uint64_t> present_;
    std::unordered_map<std::uint64_t, std::size_t> edge_slot_;
};

} // namespace

PlantedNetwork lfr(const LfrParams& params, RngStream& rng) {
    params.validate();
    RngStream graph_rng = rng.derive(1);
    RngStream community_rng = rng.derive(2);
    RngStream rewire_rng = rng.derive(3);

    const Graph seed = build_seed_graph(params, graph_rng);
    const std::size_t n = seed.node_count();
    const std::vector<std::size_t> degree = seed.degree_sequence();

    std::vector<std::size_t> wanted(n);
    std::size_t wanted_total = 0;
    std::size_t k_min = *std::min_element(degree.begin(), degree.end());
    for (node v = 0; v < n; ++v) {
        wanted[v] = static_cast<std::size_t>(
            std::nearbyint((1.0 - params.mu) * static_cast<double>(degree[v])));
        wanted_total += wanted[v];
    }
    const std::size_t c_min = std::max(params.c_min, k_min);
    const std::size_t c_max = std::max(params.c_max, c_min);
    if (c_min > n) throw ArgumentError("LFR: minimum community size exceeds n");

    // Prefer a size draw that fits every node; otherwise keep the draw with
    // the smallest capped deficit.
    Assignment best;
    bool have = false;
    for (int attempt = 0; attempt < 20; ++attempt) {
        auto sizes = community_sizes(n, params.beta, c_min, c_max, community_rng);
        Assignment a = assign_communities(wanted, std::move(sizes), community_rng);
        if (!have || a.capped_deficit < best.capped_deficit) {
            best = std::move(a);
            have = true;
        }
        if (best.capped_deficit == 0) break;
    }

    // Re-spread internal degree lost to capping over nodes with headroom.
    std::size_t assigned_total = std::accumulate(best.target.begin(), best.target.end(), std::size_t{0});
    if (assigned_total < wanted_total) {
        std::vector<node> order(n);
        std::iota(order.begin(), order.end(), node{0});
        community_rng.shuffle(std::span<node>(order));
        std::size_t missing = wanted_total - assigned_total;
        bool progress = true;
        while (missing > 0 && progress) {
            progress = false;
            for (node v : order) {
                if (missing == 0) break;
                const std::size_t room = std::min(degree[v], best.sizes[best.label[v]] - 1);
                if (best.target[v] < room) {
                    ++best.target[v];
                    --missing;
                    progress = true;
                }
            }
        }
    }
    fix_parity(best, degree, community_rng);
    make_graphical(best);

    MixingRewirer rewirer(seed, best.label, best.target, best.sizes.size());
    const std::vector<Edge> edges = rewirer.run(50 * seed.edge_count() + 1000, rewire_rng);

    PlantedNetwork out{Graph(n, edges), Partition(best.label), 0.0};
    out.realized_mu = mixing_fraction(out.graph, out.planted);
    if (std::abs(out.realized_mu - params.mu) > params.mu_tolerance) {
        throw GenerationError("LFR: realized mixing " + std::to_string(out.realized_mu) +
                                  " misses target " + std::to_string(params.mu),
                              out.realized_mu);
    }
    return out;
}

} // namespace commkit
