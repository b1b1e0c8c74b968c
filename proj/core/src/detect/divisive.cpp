#include <algorithm>
#include <deque>

#include "commkit/topology.hpp"
#include "internal.hpp"

namespace commkit::detail {

DivisiveLog::DivisiveLog(const Graph& g) : adjacency_(g.node_count()), block_of_(g.node_count()) {
    for (node v = 0; v < g.node_count(); ++v) {
        adjacency_[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    }
    const Partition comps = connected_components(g);
    members_ = comps.communities();
    for (node v = 0; v < g.node_count(); ++v) block_of_[v] = comps[v];
}

bool DivisiveLog::remove_edge(node u, node v) {
    auto drop = [](std::vector<node>& list, node x) {
        list.erase(std::lower_bound(list.begin(), list.end(), x));
    };
    drop(adjacency_[u], v);
    drop(adjacency_[v], u);

    // Breadth-first search from u; reaching v means no split.
    const std::size_t parent = block_of_[u];
    std::vector<node> side{u};
    std::vector<char> seen(adjacency_.size(), 0);
    seen[u] = 1;
    for (std::size_t head = 0; head < side.size(); ++head) {
        for (node w : adjacency_[side[head]]) {
            if (seen[w]) continue;
            if (w == v) return false;
            seen[w] = 1;
            side.push_back(w);
        }
    }
    std::vector<node> rest;
    rest.reserve(members_[parent].size() - side.size());
    for (node x : members_[parent]) {
        if (!seen[x]) rest.push_back(x);
    }
    std::sort(side.begin(), side.end());
    const std::size_t left = members_.size();
    const std::size_t right = left + 1;
    for (node x : side) block_of_[x] = left;
    for (node x : rest) block_of_[x] = right;
    members_.push_back(std::move(side));
    members_.push_back(std::move(rest));
    splits_.push_back({parent, left, right});
    return true;
}

Dendrogram DivisiveLog::dendrogram() const {
    const std::size_t n = adjacency_.size();
    Dendrogram d(n);
    std::vector<std::size_t> id(members_.size(), 0);
    for (std::size_t b = 0; b < members_.size(); ++b) {
        if (members_[b].size() == 1) id[b] = members_[b][0];
    }
    for (auto it = splits_.rbegin(); it != splits_.rend(); ++it) {
        id[it->parent] = d.merge(id[it->left], id[it->right]);
    }
    return d;
}

} // namespace commkit::detail
