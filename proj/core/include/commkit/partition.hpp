#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "commkit/graph.hpp"

namespace commkit {

using community = std::uint32_t;

/**
 * Total assignment of nodes to disjoint communities.
 *
 * Labels are canonicalized on construction: community ids are dense and
 * numbered in order of first appearance when scanning nodes 0..n-1, so two
 * Partitions compare equal exactly when they describe the same set partition.
 */
class Partition {
public:
    Partition() = default;

    /// Accepts arbitrary labels; relabels them canonically.
    explicit Partition(std::span<const std::uint64_t> labels);
    explicit Partition(const std::vector<community>& labels);

    static Partition singletons(std::size_t n);
    static Partition one_block(std::size_t n);

    std::size_t node_count() const noexcept { return membership_.size(); }
    std::size_t community_count() const noexcept { return community_count_; }

    community operator[](node v) const noexcept { return membership_[v]; }
    const std::vector<community>& membership() const noexcept { return membership_; }

    std::vector<std::size_t> community_sizes() const;
    /// Members of each community, ascending.
    std::vector<std::vector<node>> communities() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<community> membership_;
    std::size_t community_count_ = 0;
};

/// Membership format: one "node community" pair per line, '#' comments.
/// The loader requires every node 0..n-1 to appear exactly once, where n is
/// `node_count` when non-zero, otherwise max node id + 1.
Partition read_membership(std::istream& in, std::size_t node_count = 0);
Partition read_membership_file(const std::string& path, std::size_t node_count = 0);
void write_membership(std::ostream& out, const Partition& p);
void write_membership_file(const std::string& path, const Partition& p);

} // namespace commkit
