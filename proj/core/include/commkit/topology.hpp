#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "commkit/graph.hpp"

namespace commkit {

class Partition;

enum class MetricKind { Degree, LocalClustering, Closeness, Betweenness };
enum class CentralityKind { Degree, Closeness, Betweenness };

std::string_view to_string(MetricKind kind);
std::string_view to_string(CentralityKind kind);

struct NodeMetricVector {
    MetricKind kind;
    std::vector<double> values;
};

/// Marker for unreachable nodes in shortest_distances.
inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

std::size_t degree(const Graph& g, node v);

/// Fraction of neighbor pairs that are themselves linked; 0 when degree < 2.
double local_clustering(const Graph& g, node v);
NodeMetricVector local_clustering_all(const Graph& g);

/// Mean of the local clustering coefficients.
double transitivity(const Graph& g);

/// BFS hop counts from `source`; kUnreachable where no path exists.
std::vector<std::size_t> shortest_distances(const Graph& g, node source);

/// Degree, per-component closeness (n_c - 1) / sum of distances, or
/// Brandes betweenness (unordered pairs, endpoints excluded).
NodeMetricVector centrality(const Graph& g, CentralityKind kind);

/// Edge betweenness for every edge of g.edges(), in the same order.
std::vector<double> edge_betweenness(const Graph& g);

/// Freeman centralization normalized by the star graph's value for the same n.
/// Requires n >= 3.
double centralization(const Graph& g, CentralityKind kind);

/// Pearson correlation of endpoint degrees; nullopt when either side has zero
/// variance (regular graphs) or the graph has no edges.
std::optional<double> assortativity(const Graph& g);

struct BridgeReport {
    std::vector<Edge> bridges;      // u < v, sorted
    std::vector<node> cutpoints;    // sorted
};

BridgeReport bridges_and_cutpoints(const Graph& g);

/// Component labels, dense, numbered by smallest member node.
Partition connected_components(const Graph& g);

struct GraphSummary {
    std::size_t node_count = 0;
    count edge_count = 0;
    double density = 0.0;
    /// Mean hop distance over connected ordered pairs.
    double mean_distance = 0.0;
    double transitivity = 0.0;
    std::optional<double> assortativity;
    double degree_centralization = 0.0;
    double closeness_centralization = 0.0;
    double betweenness_centralization = 0.0;
    std::size_t component_count = 0;
};

/// Computes the summary; centralizations are left at 0 for n < 3.
GraphSummary summarize(const Graph& g);

} // namespace commkit
