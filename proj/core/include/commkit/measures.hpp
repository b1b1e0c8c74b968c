#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "commkit/graph.hpp"
#include "commkit/partition.hpp"

namespace commkit {

/// n_ij = |C_i ∩ C'_j| stored row-major (rows: first partition).
class ConfusionMatrix {
public:
    ConfusionMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint64_t total() const noexcept { return total_; }

    std::uint64_t at(std::size_t i, std::size_t j) const { return counts_[i * cols_ + j]; }
    void add(std::size_t i, std::size_t j, std::uint64_t k = 1);

    std::vector<std::uint64_t> row_sums() const;
    std::vector<std::uint64_t> col_sums() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

struct PairCounts {
    std::uint64_t n11 = 0; // together in both
    std::uint64_t n00 = 0; // apart in both
    std::uint64_t n10 = 0; // together only in the first
    std::uint64_t n01 = 0; // together only in the second
};

ConfusionMatrix confusion(const Partition& p1, const Partition& p2);
PairCounts pair_counts(const ConfusionMatrix& m);

double rand_index(const Partition& p1, const Partition& p2);
/// Hubert-Arabie ARI; nullopt when the expected and maximal index coincide
/// and the partitions differ.
std::optional<double> adjusted_rand_index(const Partition& p1, const Partition& p2);
double jaccard_index(const Partition& p1, const Partition& p2);
double purity(const Partition& found, const Partition& truth);
double van_dongen(const Partition& p1, const Partition& p2);

/// Entropies and mutual information in bits.
struct InformationStats {
    double mi = 0.0;
    double h1 = 0.0;
    double h2 = 0.0;
    double vi = 0.0;
    double nmi = 0.0;
};

InformationStats mutual_information_stats(const Partition& p1, const Partition& p2);
inline double nmi(const Partition& a, const Partition& b) { return mutual_information_stats(a, b).nmi; }

double modularity(const Graph& g, const Partition& p);

struct CommunityQuality {
    std::size_t size = 0;
    count internal_edges = 0;
    count boundary_edges = 0;
    double internal_density = 0.0;
    double cut_ratio = 0.0;
    double conductance = 0.0;
};

struct QualityReport {
    std::vector<CommunityQuality> communities;
    /// Size-weighted means over communities.
    double internal_density = 0.0;
    double cut_ratio = 0.0;
    double conductance = 0.0;
};

QualityReport quality_functions(const Graph& g, const Partition& p);

/// -log10 of the hypergeometric probability of at least the observed number
/// of intra-community links.
double surprise(const Graph& g, const Partition& p);

struct CommunityProfileEntry {
    std::size_t size = 0;
    count internal_edges = 0;
    count boundary_edges = 0;
    double embeddedness_mean = 0.0;
    double scaled_density = 0.0;
    double hub_dominance = 0.0;
};

struct CommunityProfile {
    std::vector<CommunityProfileEntry> communities;
    /// Per-node internal degree / degree (0 for isolated nodes).
    std::vector<double> embeddedness;
};

CommunityProfile community_profile(const Graph& g, const Partition& p);

// -- measure registry used by the harness and CLI ---------------------------

/// Names: rand, ari, jaccard, purity, van_dongen, mi, vi, nmi (comparison
/// against truth); modularity, surprise, internal_density, cut_ratio,
/// conductance, community_count (graph-only quality).
const std::vector<std::string>& measure_names();
bool is_measure(std::string_view name);
/// True when the measure needs a reference partition.
bool measure_needs_truth(std::string_view name);

/// Evaluates one named measure; nullopt encodes an undefined value.
std::optional<double> evaluate_measure(std::string_view name, const Graph& g,
                                       const Partition& found, const Partition* truth);

} // namespace commkit
