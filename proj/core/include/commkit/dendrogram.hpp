#pragma once

#include <cstddef>
#include <vector>

#include "commkit/graph.hpp"
#include "commkit/partition.hpp"

namespace commkit {

/**
 * Agglomeration history over n leaves. Leaves carry ids 0..n-1; the k-th
 * merge creates id n + k. Divisive detectors record their splits in reverse
 * so that every dendrogram reads bottom-up.
 *
 * `modularity[k]` is the modularity after the first k merges, so the vector
 * has merges().size() + 1 entries and modularity[0] belongs to the leaf level.
 */
class Dendrogram {
public:
    struct Merge {
        std::size_t a;
        std::size_t b;
        std::size_t merged;
    };

    Dendrogram() = default;
    explicit Dendrogram(std::size_t leaf_count) : leaves_(leaf_count) {}

    std::size_t leaf_count() const noexcept { return leaves_; }
    const std::vector<Merge>& merges() const noexcept { return merges_; }
    const std::vector<double>& modularity() const noexcept { return modularity_; }

    /// Appends a merge of two live cluster ids; returns the new id.
    std::size_t merge(std::size_t a, std::size_t b);

    /// Partition after the first `prefix` merges.
    Partition cut(std::size_t prefix) const;

    /// Recomputes the per-level modularity track from the graph.
    void compute_modularity(const Graph& g);
    void set_modularity(std::vector<double> track) { modularity_ = std::move(track); }

private:
    std::size_t leaves_ = 0;
    std::vector<Merge> merges_;
    std::vector<double> modularity_;
    std::vector<bool> consumed_;   // ids already absorbed by a merge
};

/// Prefix cut maximizing modularity; ties go to the cut with fewer communities.
/// Throws ArgumentError when the dendrogram's leaf count differs from g.
Partition best_modularity_cut(const Dendrogram& d, const Graph& g);

} // namespace commkit
