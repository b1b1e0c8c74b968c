#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "commkit/dendrogram.hpp"
#include "commkit/graph.hpp"
#include "commkit/partition.hpp"
#include "commkit/rng.hpp"

namespace commkit {

/// Tunables for every detector. Defaults are valid; `validate` range-checks.
struct DetectorParams {
    struct Spinglass {
        std::size_t spins = 25;
        double cooling = 0.99;
        std::size_t sweeps_per_temperature = 50;
        double target_initial_acceptance = 0.5;
        double stop_acceptance = 1e-3;
        double gamma = 1.0;
    } spinglass;

    struct Mcl {
        double inflation = 2.0;
        double prune_threshold = 1e-5;
        double epsilon = 1e-8;
        double self_loop_weight = 1.0;
        std::size_t max_iterations = 1000;
    } mcl;

    struct Walktrap {
        std::size_t steps = 4;
    } walktrap;

    struct Infomap {
        std::size_t outer_loops = 10;
        std::size_t max_sweeps = 100;
        double teleport = 0.0;
    } infomap;

    struct LabelPropagation {
        std::size_t max_sweeps = 100;
    } label_propagation;

    struct LeadingEigenvector {
        double tolerance = 1e-10;
        std::size_t max_iterations = 100000;
    } leading_eigenvector;

    struct Louvain {
        std::size_t max_levels = 64;
    } louvain;

    /// Edges removed per betweenness recomputation in edge_betweenness. Radetal
    /// rescores the neighbourhood of every removed edge and ignores it.
    std::size_t recompute_every = 1;

    /// Wall-clock budget; exceeded budgets raise DetectorTimeout.
    std::optional<std::chrono::milliseconds> time_limit;

    void validate() const;

    /// Applies "key=value" overrides such as "mcl.inflation=1.8" or
    /// "walktrap.steps=5". Throws ArgumentError on unknown keys or bad values.
    void set(std::string_view key, std::string_view value);
};

struct DetectionResult {
    Partition partition;
    std::optional<Dendrogram> dendrogram;
    /// Set when an iteration cap was hit and the current state was returned.
    bool hit_iteration_cap = false;
};

DetectionResult detect_fastgreedy(const Graph& g, const DetectorParams& params = {});
DetectionResult detect_louvain(const Graph& g, const DetectorParams& params, RngStream& rng);
DetectionResult detect_spinglass(const Graph& g, const DetectorParams& params, RngStream& rng);
DetectionResult detect_leading_eigenvector(const Graph& g, const DetectorParams& params = {});
DetectionResult detect_mcl(const Graph& g, const DetectorParams& params = {});
DetectionResult detect_walktrap(const Graph& g, const DetectorParams& params = {});
DetectionResult detect_infomap(const Graph& g, const DetectorParams& params, RngStream& rng);
DetectionResult detect_label_propagation(const Graph& g, const DetectorParams& params,
                                         RngStream& rng);
DetectionResult detect_edge_betweenness(const Graph& g, const DetectorParams& params,
                                        RngStream& rng);
DetectionResult detect_radetal(const Graph& g, const DetectorParams& params = {});

/// Canonical detector names: fastgreedy, louvain, spinglass,
/// leading_eigenvector, mcl, walktrap, infomap, label_propagation,
/// edge_betweenness, radetal.
const std::vector<std::string>& detector_names();
bool is_detector(std::string_view name);

/// Dispatches by name; deterministic detectors ignore `rng`.
DetectionResult run_detector(std::string_view name, const Graph& g, const DetectorParams& params,
                             RngStream& rng);

// -- pieces exposed for verification ----------------------------------------

/// Two-level map-equation description length (bits) of partition p on g with
/// degree-proportional visit rates.
double map_equation(const Graph& g, const Partition& p);

/// Radicchi edge clustering (z + 1) / min(k_u - 1, k_v - 1); +inf when the
/// denominator is zero.
double edge_clustering(const Graph& g, node u, node v);

/// Pons-Latapy walk distance between nodes u and v for walk length t.
double walk_distance(const Graph& g, node u, node v, std::size_t t);

} // namespace commkit
