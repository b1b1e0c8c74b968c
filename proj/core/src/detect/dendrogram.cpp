#include "commkit/dendrogram.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "commkit/error.hpp"
#include "commkit/measures.hpp"

namespace commkit {

std::size_t Dendrogram::merge(std::size_t a, std::size_t b) {
    const std::size_t id = leaves_ + merges_.size();
    if (a >= id || b >= id || a == b) throw ArgumentError("dendrogram merge of invalid cluster ids");
    if (consumed_.size() < id + 1) consumed_.resize(id + 1, false);
    if (consumed_[a] || consumed_[b]) throw ArgumentError("dendrogram merge of an already merged cluster");
    consumed_[a] = consumed_[b] = true;
    merges_.push_back({a, b, id});
    return id;
}

Partition Dendrogram::cut(std::size_t prefix) const {
    if (prefix > merges_.size()) throw ArgumentError("dendrogram cut beyond the last merge");
    // Union-find over leaves and internal ids.
    std::vector<std::size_t> parent(leaves_ + prefix);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t k = 0; k < prefix; ++k) {
        const Merge& m = merges_[k];
        parent[find(m.a)] = m.merged;
        parent[find(m.b)] = m.merged;
    }
    std::vector<std::uint64_t> labels(leaves_);
    for (std::size_t v = 0; v < leaves_; ++v) labels[v] = find(v);
    return Partition(std::span<const std::uint64_t>(labels));
}

void Dendrogram::compute_modularity(const Graph& g) {
    if (g.node_count() != leaves_) throw ArgumentError("dendrogram and graph sizes differ");
    modularity_.assign(merges_.size() + 1, 0.0);
    if (g.edge_count() == 0) return;
    // Incremental: track per-cluster internal edges and degree sums.
    const double m = static_cast<double>(g.edge_count());
    // owner[v] is a token; a merged cluster inherits the token of its larger
    // half so only the smaller half is relabeled.
    std::vector<std::size_t> owner(leaves_);
    std::iota(owner.begin(), owner.end(), std::size_t{0});
    const std::size_t ids = leaves_ + merges_.size();
    std::vector<std::size_t> token(ids);
    std::iota(token.begin(), token.end(), std::size_t{0});
    std::vector<double> internal(ids, 0.0), volume(ids, 0.0);
    std::vector<std::vector<node>> members(ids);
    double q = 0.0;
    for (node v = 0; v < leaves_; ++v) {
        volume[v] = static_cast<double>(g.degree_of(v));
        members[v] = {v};
        q -= (volume[v] / (2.0 * m)) * (volume[v] / (2.0 * m));
    }
    modularity_[0] = q;
    for (std::size_t k = 0; k < merges_.size(); ++k) {
        const Merge& mg = merges_[k];
        std::size_t small = mg.a, large = mg.b;
        if (members[small].size() > members[large].size()) std::swap(small, large);
        double between = 0.0;
        for (node v : members[small]) {
            for (node w : g.neighbors(v)) between += owner[w] == token[large] ? 1.0 : 0.0;
        }
        auto term = [&](std::size_t c) {
            return internal[c] / m - (volume[c] / (2.0 * m)) * (volume[c] / (2.0 * m));
        };
        q -= term(mg.a) + term(mg.b);
        internal[mg.merged] = internal[mg.a] + internal[mg.b] + between;
        volume[mg.merged] = volume[mg.a] + volume[mg.b];
        q += term(mg.merged);
        token[mg.merged] = token[large];
        for (node v : members[small]) owner[v] = token[large];
        members[mg.merged] = std::move(members[large]);
        members[mg.merged].insert(members[mg.merged].end(), members[small].begin(),
                                  members[small].end());
        members[small].clear();
        modularity_[k + 1] = q;
    }
}

Partition best_modularity_cut(const Dendrogram& d, const Graph& g) {
    if (d.leaf_count() != g.node_count()) {
        throw ArgumentError("dendrogram has " + std::to_string(d.leaf_count()) +
                            " leaves but the graph has " + std::to_string(g.node_count()) + " nodes");
    }
    std::vector<double> track = d.modularity();
    if (track.size() != d.merges().size() + 1) {
        Dendrogram copy = d;
        copy.compute_modularity(g);
        track = copy.modularity();
    }
    // Later prefixes have fewer communities; among (near-)ties take the last.
    const double top = *std::max_element(track.begin(), track.end());
    std::size_t best = 0;
    for (std::size_t k = 0; k < track.size(); ++k) {
        if (track[k] >= top - 1e-12) best = k;
    }
    return d.cut(best);
}

} // namespace commkit
