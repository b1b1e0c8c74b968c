// Independent reference computations for the test suites. Everything here is
// deliberately naive (direct definitions, exhaustive enumeration) and shares
// no code with the library beyond its data types.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "commkit/graph.hpp"
#include "commkit/partition.hpp"
#include "commkit/rng.hpp"

namespace oracle {

using Labels = std::vector<std::uint32_t>;

/// Two triangles {0,1,2} and {3,4,5} joined by the bridge 2-3.
commkit::Graph two_triangles();
/// The reference split of two_triangles().
commkit::Partition two_triangles_split();

/// Dense adjacency matrix.
std::vector<std::vector<int>> adjacency(const commkit::Graph& g);

/// Q = 1/2m sum_ij (A_ij - k_i k_j / 2m) [c_i == c_j], double loop over pairs.
double modularity(const commkit::Graph& g, const Labels& labels);

/// Calls `visit` with every set partition of n items as a restricted growth
/// string (Bell(n) calls).
void for_each_set_partition(std::size_t n, const std::function<void(const Labels&)>& visit);

struct BestSplit {
    double q = 0.0;
    Labels labels;
    std::size_t partitions_seen = 0;
};
BestSplit max_modularity(const commkit::Graph& g);

/// G(n, p) resampled until connected.
commkit::Graph random_connected_graph(std::size_t n, double p, commkit::RngStream& rng);

/// Uniform labels in [0, k).
Labels random_labels(std::size_t n, std::size_t k, commkit::RngStream& rng);

struct Pairs {
    std::uint64_t same_same = 0;
    std::uint64_t diff_diff = 0;
    std::uint64_t same_diff = 0; // together in the first only
    std::uint64_t diff_same = 0; // together in the second only
};
Pairs pair_loop(const Labels& a, const Labels& b);

/// Entropies and mutual information in bits from joint frequencies.
struct Information {
    double h1 = 0.0, h2 = 0.0, mi = 0.0;
};
Information information(const Labels& a, const Labels& b);

/// Betweenness by explicit enumeration of all shortest paths (small graphs).
/// Nodes: unordered pairs, endpoints excluded. Edges: in g.edges() order.
struct PathBetweenness {
    std::vector<double> nodes;
    std::vector<double> edges;
};
PathBetweenness enumerate_betweenness(const commkit::Graph& g);

/// Number of connected components, counted by depth-first search over an
/// edge list with one edge optionally skipped and one node optionally removed.
std::size_t components(std::size_t n, const std::vector<commkit::Edge>& edges,
                       std::size_t skip_edge = SIZE_MAX, std::size_t skip_node = SIZE_MAX);

} // namespace oracle

namespace commkit {
/// Lets gtest print partitions as membership lists.
void PrintTo(const Partition& p, std::ostream* os);
} // namespace commkit
