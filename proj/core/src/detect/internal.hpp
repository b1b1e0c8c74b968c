#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "commkit/detect.hpp"
#include "commkit/error.hpp"

namespace commkit::detail {

/// Cooperative wall-clock budget shared by the detectors.
class Deadline {
public:
    Deadline(const DetectorParams& params, std::string who) : who_(std::move(who)) {
        if (params.time_limit) end_ = std::chrono::steady_clock::now() + *params.time_limit;
    }

    void check() const {
        if (end_ && std::chrono::steady_clock::now() > *end_) {
            throw DetectorTimeout(who_ + " exceeded its time limit");
        }
    }

    /// Cheap variant for tight loops: only reads the clock every 1024 calls.
    void tick() {
        if ((++ticks_ & 1023u) == 0) check();
    }

private:
    std::string who_;
    std::optional<std::chrono::steady_clock::time_point> end_;
    std::uint32_t ticks_ = 0;
};

/// Undirected weighted graph with self-loops, used by the aggregating
/// detectors. A self-loop of weight w at u contributes w to u's strength,
/// and `loops[u]` holds that weight.
struct WeightedGraph {
    struct Arc {
        std::uint32_t to;
        double weight;
    };
    std::vector<std::vector<Arc>> adjacency; // no self entries
    std::vector<double> loops;
    std::vector<double> strength;
    double total = 0.0; // sum of strengths = 2 * total edge weight

    std::size_t size() const { return adjacency.size(); }

    static WeightedGraph from_graph(const Graph& g);
    /// Collapses nodes by `labels` (dense, 0..k-1).
    WeightedGraph aggregate(const std::vector<std::uint32_t>& labels, std::size_t k) const;
};

/// Dense relabeling of arbitrary non-negative labels, by first appearance.
std::vector<std::uint32_t> compact_labels(const std::vector<std::uint32_t>& labels, std::size_t& k);

/// Moves every degree-0 node into a community of its own; nothing ties an
/// isolated node to the rest of the graph.
Partition isolate_degree_zero(const Graph& g, const Partition& p);

} // namespace commkit::detail

namespace commkit::detail {

/// Edge-removal bookkeeping shared by the divisive detectors: tracks the
/// connected components of the shrinking graph and logs every split so the
/// history can be replayed bottom-up as a Dendrogram.
class DivisiveLog {
public:
    explicit DivisiveLog(const Graph& g);

    const std::vector<node>& neighbors(node v) const { return adjacency_[v]; }
    std::size_t block_of(node v) const { return block_of_[v]; }
    const std::vector<node>& members(std::size_t block) const { return members_[block]; }

    /// Removes edge (u, v); returns true when it disconnected its component.
    bool remove_edge(node u, node v);

    /// Valid once every edge has been removed.
    Dendrogram dendrogram() const;

private:
    struct Split {
        std::size_t parent, left, right;
    };
    std::vector<std::vector<node>> adjacency_;
    std::vector<std::size_t> block_of_;
    std::vector<std::vector<node>> members_;
    std::vector<Split> splits_;
};

} // namespace commkit::detail
