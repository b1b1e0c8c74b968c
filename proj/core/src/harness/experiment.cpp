#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "commkit/error.hpp"
#include "commkit/experiment.hpp"
#include "commkit/measures.hpp"
#include "commkit/topology.hpp"

namespace commkit {

namespace {

// Runs task(i) for i in [0, count) on up to `workers` threads; the first
// exception is rethrown after all threads finish.
void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& task) {
    workers = std::max<std::size_t>(1, std::min(workers, count));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto body = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                task(i);
            } catch (...) {
                std::lock_guard<std::mutex> hold(failure_lock);
                if (!failure) failure = std::current_exception();
                next = count;
            }
        }
    };
    if (workers == 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
}

struct Cell {
    std::size_t model; // index into cfg.seed_models (0 for gn)
    std::size_t mu;    // index into cfg.mu_grid
    std::size_t replicate;
};

// Cell seeds depend only on the grid coordinates, never on grid sizes, so
// dropping a replicate leaves every other cell unchanged.
std::uint64_t cell_seed(std::uint64_t master, const Cell& c) {
    std::uint64_t state = master;
    std::uint64_t mixed = splitmix64(state);
    for (std::uint64_t part : {std::uint64_t(c.model), std::uint64_t(c.mu), std::uint64_t(c.replicate)}) {
        state = mixed ^ (part + 0x9e3779b97f4a7c15ULL);
        mixed = splitmix64(state);
    }
    return mixed;
}

std::vector<Cell> grid(const ExperimentConfig& cfg, std::size_t models) {
    std::vector<Cell> cells;
    for (std::size_t m = 0; m < models; ++m) {
        for (std::size_t u = 0; u < cfg.mu_grid.size(); ++u) {
            for (std::size_t r = 0; r < cfg.replicates; ++r) cells.push_back({m, u, r});
        }
    }
    return cells;
}

PlantedNetwork generate(const ExperimentConfig& cfg, const Cell& c, std::uint64_t seed) {
    RngStream rng(seed, 0);
    const double mu = cfg.mu_grid[c.mu];
    if (cfg.generator == GeneratorKind::GN) return girvan_newman(16.0 * mu, rng);
    LfrParams p = cfg.lfr;
    p.mu = mu;
    p.seed_model = cfg.seed_models[c.model];
    return lfr(p, rng);
}

std::uint64_t detector_stream(const std::string& name) {
    const auto& names = detector_names();
    return 1000 + static_cast<std::uint64_t>(std::find(names.begin(), names.end(), name) - names.begin());
}

bool lower_is_better(const std::string& measure) { return measure == "vi" || measure == "van_dongen"; }

double sample_stddev(const std::vector<double>& xs, double mean) {
    if (xs.size() < 2) return 0.0;
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

} // namespace

std::size_t worker_count() {
    const std::size_t hardware = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("COMMKIT_THREADS")) {
        char* end = nullptr;
        const long requested = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && requested > 0) {
            return static_cast<std::size_t>(requested);
        }
    }
    return hardware;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, std::size_t workers) {
    cfg.validate();
    if (workers == 0) workers = worker_count();
    const bool gn = cfg.generator == GeneratorKind::GN;
    const std::vector<Cell> cells = grid(cfg, gn ? 1 : cfg.seed_models.size());
    std::vector<std::vector<ResultRecord>> per_cell(cells.size());

    parallel_for(cells.size(), workers, [&](std::size_t index) {
        const Cell& c = cells[index];
        ResultRecord base;
        base.generator = gn ? "gn" : "lfr";
        base.seed_model = gn ? "none" : std::string(to_string(cfg.seed_models[c.model]));
        base.mu_target = cfg.mu_grid[c.mu];
        base.replicate = c.replicate;
        base.seed = cell_seed(cfg.master_seed, c);
        auto& out = per_cell[index];

        std::optional<PlantedNetwork> net;
        try {
            net = generate(cfg, c, base.seed);
            base.mu_realized = net->realized_mu;
        } catch (const GenerationError& e) {
            base.mu_realized = e.best_value();
            base.status = "generation_error";
        }
        for (const DetectorSpec& spec : cfg.detectors) {
            ResultRecord rec = base;
            rec.detector = spec.name;
            std::optional<Partition> found;
            if (net) {
                DetectorParams params = spec.params;
                if (!params.time_limit) params.time_limit = cfg.timeout;
                RngStream rng(base.seed, detector_stream(spec.name));
                const auto start = std::chrono::steady_clock::now();
                try {
                    found = run_detector(spec.name, net->graph, params, rng).partition;
                } catch (const DetectorTimeout&) {
                    rec.status = "timeout";
                } catch (const DetectorError&) {
                    rec.status = "detector_error";
                }
                rec.runtime_ms = std::chrono::duration<double, std::milli>(
                                     std::chrono::steady_clock::now() - start).count();
            }
            for (const std::string& measure : cfg.measures) {
                ResultRecord row = rec;
                row.measure = measure;
                if (found) {
                    row.value = evaluate_measure(measure, net->graph, *found, &net->planted);
                    if (!row.value) row.status = "undefined";
                }
                out.push_back(std::move(row));
            }
        }
    });

    ExperimentResult result;
    for (auto& chunk : per_cell) {
        for (auto& r : chunk) result.records.push_back(std::move(r));
    }
    result.summary = summarize_records(result.records);
    return result;
}

std::vector<SummaryRow> summarize_records(const std::vector<ResultRecord>& records) {
    // Groups in order of first appearance, which follows the grid order.
    using Key = std::tuple<std::string, double, std::string, std::string>;
    std::map<Key, std::size_t> index;
    std::vector<SummaryRow> rows;
    std::vector<std::vector<double>> values;
    for (const ResultRecord& r : records) {
        const Key key{r.seed_model, r.mu_target, r.detector, r.measure};
        auto [it, fresh] = index.try_emplace(key, rows.size());
        if (fresh) {
            SummaryRow row;
            row.seed_model = r.seed_model;
            row.mu_target = r.mu_target;
            row.detector = r.detector;
            row.measure = r.measure;
            rows.push_back(row);
            values.emplace_back();
        }
        if (r.status == "ok" && r.value) values[it->second].push_back(*r.value);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        SummaryRow& row = rows[i];
        row.samples = values[i].size();
        if (row.samples == 0) {
            row.mean = row.stddev = std::nan("");
            continue;
        }
        double sum = 0.0;
        for (double x : values[i]) sum += x;
        row.mean = sum / static_cast<double>(row.samples);
        row.stddev = sample_stddev(values[i], row.mean);
    }

    // Ranks among detectors sharing (seed model, mu, measure).
    std::map<std::tuple<std::string, double, std::string>, std::vector<std::size_t>> peers;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].rank = std::nan("");
        if (rows[i].samples > 0) peers[{rows[i].seed_model, rows[i].mu_target, rows[i].measure}].push_back(i);
    }
    for (const auto& [key, members] : peers) {
        const bool ascending = lower_is_better(std::get<2>(key));
        std::vector<double> scores;
        for (std::size_t i : members) scores.push_back(ascending ? rows[i].mean : -rows[i].mean);
        const auto ranks = average_ranks(scores);
        for (std::size_t j = 0; j < members.size(); ++j) rows[members[j]].rank = ranks[j];
    }
    return rows;
}

std::vector<TopologyPoint> run_topology_sweep(const ExperimentConfig& cfg, std::size_t workers) {
    if (cfg.generator != GeneratorKind::LFR) throw ArgumentError("the topology sweep needs the lfr generator");
    if (cfg.replicates < 1 || cfg.mu_grid.empty() || cfg.seed_models.empty()) {
        throw ArgumentError("the topology sweep needs replicates, a mu grid and seed models");
    }
    if (workers == 0) workers = worker_count();
    const std::vector<Cell> cells = grid(cfg, cfg.seed_models.size());
    struct Sample {
        bool ok = false;
        std::optional<double> assortativity;
        double transitivity = 0.0, centralization = 0.0, realized = 0.0, limit = 0.0;
    };
    std::vector<Sample> samples(cells.size());
    parallel_for(cells.size(), workers, [&](std::size_t index) {
        try {
            const PlantedNetwork net = generate(cfg, cells[index], cell_seed(cfg.master_seed, cells[index]));
            Sample& s = samples[index];
            s.assortativity = assortativity(net.graph);
            s.transitivity = transitivity(net.graph);
            s.centralization = centralization(net.graph, CentralityKind::Degree);
            s.realized = net.realized_mu;
            s.limit = mixing_limit(net.planted, net.graph.node_count());
            s.ok = true;
        } catch (const GenerationError&) {
            // Counted as a missing sample.
        }
    });

    std::vector<TopologyPoint> points;
    auto mean_sd = [](const std::vector<double>& xs, double& mean, double& sd) {
        mean = sd = std::nan("");
        if (xs.empty()) return;
        double sum = 0.0;
        for (double x : xs) sum += x;
        mean = sum / static_cast<double>(xs.size());
        sd = sample_stddev(xs, mean);
    };
    for (std::size_t m = 0; m < cfg.seed_models.size(); ++m) {
        for (std::size_t u = 0; u < cfg.mu_grid.size(); ++u) {
            TopologyPoint pt;
            pt.seed_model = cfg.seed_models[m];
            pt.mu = cfg.mu_grid[u];
            std::vector<double> assort, trans, central, realized, limits;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (cells[i].model != m || cells[i].mu != u || !samples[i].ok) continue;
                if (samples[i].assortativity) assort.push_back(*samples[i].assortativity);
                trans.push_back(samples[i].transitivity);
                central.push_back(samples[i].centralization);
                realized.push_back(samples[i].realized);
                limits.push_back(samples[i].limit);
            }
            pt.samples = trans.size();
            mean_sd(assort, pt.assortativity_mean, pt.assortativity_sd);
            mean_sd(trans, pt.transitivity_mean, pt.transitivity_sd);
            mean_sd(central, pt.centralization_mean, pt.centralization_sd);
            double unused = 0.0;
            mean_sd(realized, pt.realized_mu_mean, unused);
            mean_sd(limits, pt.mixing_limit_mean, unused);
            points.push_back(pt);
        }
    }
    return points;
}

} // namespace commkit
