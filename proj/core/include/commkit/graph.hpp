#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace commkit {

using node = std::uint32_t;
using count = std::uint64_t;

struct Edge {
    node u;
    node v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * Immutable undirected simple graph over dense node ids 0..n-1.
 *
 * Adjacency is stored in CSR form with every neighbor list sorted ascending.
 * Construction validates simplicity; all queries are const and thread-safe.
 */
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list. Throws ArgumentError on self-loops, duplicate
    /// edges (in either orientation) or ids >= node_count.
    Graph(std::size_t node_count, std::span<const Edge> edges);

    /// Like the constructor, but silently drops duplicates. Self-loops still throw.
    static Graph from_edges_dedup(std::size_t node_count, std::vector<Edge> edges);

    std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    count edge_count() const noexcept { return neighbors_.size() / 2; }

    std::span<const node> neighbors(node v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }

    /// Unchecked degree; see commkit::degree for the checked variant.
    std::size_t degree_of(node v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

    bool has_edge(node u, node v) const;

    /// Each undirected edge once, with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    std::vector<std::size_t> degree_sequence() const;

    /// Throws ArgumentError if v >= node_count.
    void check_node(node v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<node> neighbors_;
};

/// Reads the edge-list text format: one "u v" pair per line, 0-based ids,
/// '#' comment lines. Node count is max id + 1 unless `node_count` is larger.
/// Throws ArgumentError with the offending line number on self-loops,
/// duplicates and malformed lines.
Graph read_edge_list(std::istream& in, std::size_t node_count = 0);
Graph read_edge_list_file(const std::string& path, std::size_t node_count = 0);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

} // namespace commkit
