#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "commkit/detect.hpp"
#include "commkit/generators.hpp"
#include "commkit/partition.hpp"

namespace commkit {

enum class GeneratorKind { LFR, GN };

struct DetectorSpec {
    std::string name;
    DetectorParams params;
};

/**
 * One experiment: a generator grid (mixing values x seed models) crossed
 * with detectors and measures, replicated `replicates` times.
 *
 * Text form (flat key=value, '#' comments):
 *
 *     generator = lfr            # lfr | gn
 *     seed_models = cm,ba,ev
 *     mu = 0.2,0.6               # for gn: mu = z_out / 16
 *     n = 1000
 *     k_avg = 20
 *     k_max = 50
 *     gamma = 3
 *     beta = 2
 *     c_min = 10
 *     c_max = 50
 *     mu_tolerance = 0.02
 *     ev_b = 1.5
 *     ev_epsilon = 0.99
 *     replicates = 5
 *     master_seed = 42
 *     measures = nmi,ari,rand
 *     detector = infomap
 *     detector = mcl mcl.inflation=2
 *     timeout_ms = 600000
 *     runtime_column = off
 *     output_dir = results
 */
struct ExperimentConfig {
    GeneratorKind generator = GeneratorKind::LFR;
    LfrParams lfr{};
    std::vector<SeedModel> seed_models{SeedModel::CM};
    std::vector<double> mu_grid{0.2, 0.6};
    std::vector<DetectorSpec> detectors;
    std::vector<std::string> measures{"nmi"};
    std::size_t replicates = 5;
    std::uint64_t master_seed = 1;
    std::chrono::milliseconds timeout{600000};
    /// Write wall-clock times into results.csv. Off by default so that the
    /// file is a deterministic function of the config; timings.csv always
    /// carries them.
    bool runtime_column = false;
    std::filesystem::path output_dir = "results";

    void validate() const;
};

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config_file(const std::filesystem::path& path);

struct ResultRecord {
    std::string generator;
    std::string seed_model;
    double mu_target = 0.0;
    double mu_realized = 0.0;
    std::size_t replicate = 0;
    std::uint64_t seed = 0;
    std::string detector;
    std::string measure;
    std::optional<double> value;
    double runtime_ms = 0.0;
    /// "ok", "undefined", "generation_error", "detector_error", "timeout".
    std::string status = "ok";
};

struct SummaryRow {
    std::string seed_model;
    double mu_target = 0.0;
    std::string detector;
    std::string measure;
    std::size_t samples = 0;
    double mean = 0.0;
    double stddev = 0.0;
    /// Rank of this detector among all detectors at the grid point for this
    /// measure (1 = best, averaged over ties). Lower-is-better measures
    /// (vi, van_dongen) are ranked ascending.
    double rank = 0.0;
};

struct ExperimentResult {
    std::vector<ResultRecord> records;
    std::vector<SummaryRow> summary;
};

/// Worker count: COMMKIT_THREADS when set to a positive integer (honoured
/// even above the core count), else the hardware concurrency.
std::size_t worker_count();

ExperimentResult run_experiment(const ExperimentConfig& cfg, std::size_t workers = 0);

/// Means, standard deviations and per-measure ranks from a record table.
/// Non-ok records are excluded from the means.
std::vector<SummaryRow> summarize_records(const std::vector<ResultRecord>& records);

struct TopologyPoint {
    SeedModel seed_model = SeedModel::CM;
    double mu = 0.0;
    std::size_t samples = 0;
    double assortativity_mean = 0.0, assortativity_sd = 0.0;
    double transitivity_mean = 0.0, transitivity_sd = 0.0;
    double centralization_mean = 0.0, centralization_sd = 0.0;
    double realized_mu_mean = 0.0;
    double mixing_limit_mean = 0.0;
};

/// Generates cfg.replicates LFR networks per (seed model, mu) and averages
/// assortativity, transitivity and degree centralization.
std::vector<TopologyPoint> run_topology_sweep(const ExperimentConfig& cfg, std::size_t workers = 0);

/// Size-weighted mean of (n - |S|) / n over the planted communities.
double mixing_limit(const Partition& planted, std::size_t n);

struct TailFit {
    double exponent = 0.0;
    /// Root-mean-square residual of the log-log fit.
    double residual = 0.0;
    std::size_t tail_samples = 0;
};

/// Least-squares slope of log CCDF against log k for k >= k_min_fit;
/// exponent = |slope| + 1. Needs at least 100 tail samples and two distinct
/// tail values.
TailFit tail_exponent_fit(const std::vector<std::size_t>& degrees, std::size_t k_min_fit);
double tail_exponent_estimate(const std::vector<std::size_t>& degrees, std::size_t k_min_fit);

/// Spearman rank correlation with average ranks for ties.
double spearman(const std::vector<double>& a, const std::vector<double>& b);
/// Average ranks (1-based) of the values, ascending.
std::vector<double> average_ranks(const std::vector<double>& values);

inline constexpr const char* kResultsHeader =
    "generator,seed_model,mu_target,mu_realized,replicate,seed,detector,measure,value,runtime_ms";

void write_results_csv(std::ostream& out, const std::vector<ResultRecord>& records,
                       bool runtime_column);

/// Writes results.csv, timings.csv, summary.csv and one TSV series per
/// (seed model, detector, measure). The directory is probed for writability
/// before anything is written; files are staged and renamed into place.
void emit_reports(const ExperimentResult& result, const std::filesystem::path& out_dir,
                  bool runtime_column = false);

/// TSV series for the topology sweep: one file per (seed model, property).
void emit_topology_reports(const std::vector<TopologyPoint>& points,
                           const std::filesystem::path& out_dir);

} // namespace commkit
