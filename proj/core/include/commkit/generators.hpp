#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "commkit/graph.hpp"
#include "commkit/partition.hpp"
#include "commkit/rng.hpp"

namespace commkit {

/// A graph together with the community structure it was built around.
struct PlantedNetwork {
    Graph graph;
    Partition planted;
    /// Sum of inter-community degrees over sum of degrees.
    double realized_mu = 0.0;
};

/// Fraction of edge endpoints whose edge leaves the endpoint's community.
double mixing_fraction(const Graph& g, const Partition& p);

// -- unstructured models ----------------------------------------------------

Graph erdos_renyi(std::size_t n, double p, RngStream& rng);

/// Chung-Lu style inhomogeneous random graph: pair (u, v) linked with
/// probability w_u * w_v / sum(w).
Graph expected_degree_graph(std::span<const double> weights, RngStream& rng);

/// True when the sequence is graphical (Erdos-Gallai).
bool is_graphical(std::span<const std::size_t> degrees);

/// Simple graph with exactly the given degree sequence, from uniform stub
/// matching plus repair of self-loops and multi-edges.
Graph configuration_model(std::span<const std::size_t> degrees, RngStream& rng);

/// Preferential attachment growth from an (m+1)-clique, m distinct targets per
/// newcomer. A non-zero k_max makes nodes of that degree ineligible as targets.
Graph barabasi_albert(std::size_t n, std::size_t m, RngStream& rng, std::size_t k_max = 0);

struct EvolutionaryParams {
    double temptation = 1.5;         // b > 1, payoff for unilateral defection
    double selection_pressure = 0.99; // epsilon in [0, 1]
};

/// Growth driven by prisoner's-dilemma fitness. Attachment probability is
/// (1 - eps) / N + eps * f_v / sum f, one game round and one imitation step
/// per growth step. k_max caps degrees as in barabasi_albert.
Graph evolutionary_pa(std::size_t n, std::size_t m, const EvolutionaryParams& params,
                      RngStream& rng, std::size_t k_max = 0);

/// Samples n degrees from P(k) ~ k^-gamma on [k_min, k_max] where k_min (a
/// real lower cutoff, rounded into the support) is solved so the mean is k_avg.
std::vector<std::size_t> powerlaw_degree_sequence(std::size_t n, double k_avg, std::size_t k_max,
                                                  double gamma, RngStream& rng);

/// Mean of the discrete power law on the integer range [lo, hi].
double discrete_powerlaw_mean(std::size_t lo, std::size_t hi, double exponent);

// -- planted-community models -----------------------------------------------

/// 128 nodes in 4 groups of 32, expected degree 16 of which z_out external.
PlantedNetwork girvan_newman(double z_out, RngStream& rng);

struct RewireReport {
    PlantedNetwork network;
    /// Processed share of the initial inter-community edge pairs.
    double realized_fraction = 0.0;
};

/// Random k-way equal partition, then degree-preserving swaps turning pairs of
/// inter-community edges into intra-community edges.
RewireReport bagrow_rewire(const Graph& g, std::size_t k_communities, double fraction,
                           RngStream& rng);

enum class SeedModel { CM, BA, EV };
std::string_view to_string(SeedModel model);
SeedModel parse_seed_model(std::string_view name);

struct LfrParams {
    std::size_t n = 1000;
    double k_avg = 20.0;
    std::size_t k_max = 50;
    double gamma = 3.0;
    double beta = 2.0;
    std::size_t c_min = 10;
    std::size_t c_max = 50;
    double mu = 0.2;
    SeedModel seed_model = SeedModel::CM;
    EvolutionaryParams ev{};
    double mu_tolerance = 0.02;

    /// Throws ArgumentError when a field is out of range.
    void validate() const;
};

/// Samples community sizes from a power law with exponent beta on
/// [c_min, c_max] until they sum to exactly n.
std::vector<std::size_t> community_sizes(std::size_t n, double beta, std::size_t c_min,
                                         std::size_t c_max, RngStream& rng);

/// LFR benchmark: scale-free seed graph from the chosen model, power-law
/// community sizes, then degree-preserving rewiring toward the mixing target.
/// Throws GenerationError (carrying the best realized mu) when the target is
/// not reached within 50 * edge_count swap attempts.
PlantedNetwork lfr(const LfrParams& params, RngStream& rng);

} // namespace commkit
