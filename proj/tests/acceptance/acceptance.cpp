// Acceptance checks. Prints one PASS/FAIL line per criterion; exits non-zero
// when any selected criterion fails.
//
//   acceptance                 run all criteria
//   acceptance --criterion N   run criterion N only
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "commkit/detect.hpp"
#include "commkit/error.hpp"
#include "commkit/experiment.hpp"
#include "commkit/generators.hpp"
#include "commkit/measures.hpp"
#include "commkit/topology.hpp"
#include "oracles.hpp"

using namespace commkit;
namespace fs = std::filesystem;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += "[fail] " + what + "; ";
        }
    }
    void note(const std::string& what) { detail += what + "; "; }
};

std::string fmt(double x, int digits = 3) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

// ---------------------------------------------------------------------------
// The desk-scale benchmark experiment shared by criteria 1, 6 and 7.

const std::vector<std::string> kBenchmarkDetectors{
    "infomap", "walktrap", "label_propagation", "spinglass", "louvain",
    "mcl",     "radetal",  "fastgreedy",        "leading_eigenvector"};

ExperimentConfig benchmark_config() {
    ExperimentConfig cfg;
    cfg.generator = GeneratorKind::LFR;
    cfg.lfr.n = 1000;
    cfg.lfr.k_avg = 20.0;
    cfg.lfr.k_max = 50;
    cfg.lfr.gamma = 3.0;
    cfg.lfr.beta = 2.0;
    cfg.lfr.c_min = 10;
    cfg.lfr.c_max = 50;
    cfg.seed_models = {SeedModel::CM};
    cfg.mu_grid = {0.2, 0.6};
    cfg.replicates = 5;
    cfg.master_seed = 1;
    cfg.measures = {"nmi", "ari", "rand"};
    for (const auto& name : kBenchmarkDetectors) cfg.detectors.push_back({name, {}});
    return cfg;
}

const ExperimentResult& benchmark_result() {
    static const ExperimentResult result = run_experiment(benchmark_config());
    return result;
}

std::map<std::pair<double, std::string>, double> means_of(const ExperimentResult& r, const std::string& measure) {
    std::map<std::pair<double, std::string>, double> out;
    for (const auto& row : r.summary) {
        if (row.measure == measure) out[{row.mu_target, row.detector}] = row.samples ? row.mean : NAN;
    }
    return out;
}

Verdict criterion_1() {
    Verdict v;
    const ExperimentResult& r = benchmark_result();
    std::size_t failures = 0;
    for (const auto& rec : r.records) failures += rec.status != "ok";
    if (failures) v.note(std::to_string(failures) + " non-ok records");
    auto nmi = means_of(r, "nmi");
    auto at = [&](double mu, const std::string& d) { return nmi[{mu, d}]; };
    auto mean_of = [&](double mu, std::initializer_list<const char*> ds) {
        double s = 0.0;
        for (const char* d : ds) s += at(mu, d);
        return s / static_cast<double>(ds.size());
    };
    std::string table;
    for (const auto& d : kBenchmarkDetectors) table += d + "=" + fmt(at(0.2, d)) + "/" + fmt(at(0.6, d)) + " ";
    v.note("nmi mu=0.2/0.6: " + table);

    for (const char* d : {"infomap", "walktrap", "label_propagation"}) {
        v.require(at(0.2, d) >= 0.90, std::string(d) + " at mu=0.2 is " + fmt(at(0.2, d)) + " < 0.90");
    }
    for (const char* d : {"fastgreedy", "leading_eigenvector"}) {
        v.require(at(0.2, d) <= 0.75, std::string(d) + " at mu=0.2 is " + fmt(at(0.2, d)) + " > 0.75");
    }
    const double top = mean_of(0.6, {"infomap", "walktrap", "label_propagation"});
    const double mid = mean_of(0.6, {"mcl", "radetal"});
    const double low = mean_of(0.6, {"fastgreedy", "leading_eigenvector"});
    v.note("mu=0.6 group means " + fmt(top) + " > " + fmt(mid) + " > " + fmt(low));
    v.require(top > mid, "mu=0.6 {infomap,walktrap,label_propagation} not above {mcl,radetal}");
    v.require(mid > low, "mu=0.6 {mcl,radetal} not above {fastgreedy,leading_eigenvector}");
    v.require(at(0.6, "infomap") >= 0.90, "infomap at mu=0.6 below 0.90");
    return v;
}

Verdict criterion_2() {
    Verdict v;
    RngStream rng(2024);
    const std::vector<std::size_t> bell{1, 1, 2, 5, 15, 52, 203, 877, 4140};
    const std::vector<std::string> optimizers{"fastgreedy", "louvain", "spinglass", "leading_eigenvector",
                                              "walktrap", "infomap", "edge_betweenness", "radetal"};
    std::size_t reached = 0, runs = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 4 + rng.uniform(5);
        const Graph g = oracle::random_connected_graph(n, 0.3 + 0.3 * rng.uniform_real(), rng);
        const oracle::BestSplit best = oracle::max_modularity(g);
        v.require(best.partitions_seen == bell[n], "enumeration count differs from Bell(" + std::to_string(n) + ")");
        v.require(std::fabs(modularity(g, Partition(best.labels)) - best.q) < 1e-12,
                  "library modularity disagrees with the double loop");
        for (const auto& name : optimizers) {
            RngStream det(static_cast<std::uint64_t>(trial));
            const double q = modularity(g, run_detector(name, g, {}, det).partition);
            v.require(q <= best.q + 1e-12, name + " exceeds the brute-force optimum");
            reached += q >= best.q - 1e-12;
            ++runs;
        }
    }
    v.note("detectors reached the optimum in " + std::to_string(reached) + "/" + std::to_string(runs) + " runs");

    const Graph g6 = oracle::two_triangles();
    const Partition ref = oracle::two_triangles_split();
    v.require(modularity(g6, ref) == 5.0 / 14.0, "modularity(G6, P_ref) != 5/14");
    for (const char* name : {"fastgreedy", "walktrap", "radetal"}) {
        RngStream det(1);
        v.require(run_detector(name, g6, {}, det).partition == ref, std::string(name) + " misses P_ref on G6");
    }
    for (const char* name : {"louvain", "infomap", "edge_betweenness", "spinglass"}) {
        std::size_t hits = 0;
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            RngStream det(seed);
            hits += run_detector(name, g6, {}, det).partition == ref;
        }
        const bool annealer = std::string(name) == "spinglass";
        v.note(std::string(name) + " P_ref in " + std::to_string(hits) + "/50 seeds");
        v.require(annealer ? hits >= 45 : hits == 50, std::string(name) + " misses P_ref on G6");
    }
    return v;
}

Verdict criterion_3() {
    Verdict v;
    RngStream rng(303);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = oracle::random_labels(12, 1 + rng.uniform(6), rng);
        const auto b = oracle::random_labels(12, 1 + rng.uniform(6), rng);
        const Partition pa(a), pb(b);
        const auto o = oracle::pair_loop(a, b);
        const double pairs = 66.0;
        const double ri = static_cast<double>(o.same_same + o.diff_diff) / pairs;
        const double jd = static_cast<double>(o.same_same + o.same_diff + o.diff_same);
        const double jac = jd == 0.0 ? 1.0 : static_cast<double>(o.same_same) / jd;
        // Hubert-Arabie from raw pair counts.
        const double s1 = static_cast<double>(o.same_same + o.same_diff);
        const double s2 = static_cast<double>(o.same_same + o.diff_same);
        const double expected = s1 * s2 / pairs;
        const double maximum = (s1 + s2) / 2.0;
        const auto ari = adjusted_rand_index(pa, pb);
        v.require(std::fabs(rand_index(pa, pb) - ri) < 1e-12, "rand index differs from the pair loop");
        v.require(std::fabs(jaccard_index(pa, pb) - jac) < 1e-12, "jaccard differs from the pair loop");
        if (std::fabs(maximum - expected) > 1e-12) {
            const double want = (static_cast<double>(o.same_same) - expected) / (maximum - expected);
            v.require(ari && std::fabs(*ari - want) < 1e-12, "ari differs from the pair loop");
        }
    }

    for (int trial = 0; trial < 100; ++trial) {
        const Partition a(oracle::random_labels(30, 1 + rng.uniform(8), rng));
        const Partition b(oracle::random_labels(30, 1 + rng.uniform(8), rng));
        const Partition c(oracle::random_labels(30, 1 + rng.uniform(8), rng));
        auto vi = [](const Partition& x, const Partition& y) { return mutual_information_stats(x, y).vi; };
        v.require(vi(a, b) >= 0.0, "vi negative");
        v.require(std::fabs(vi(a, a)) < 1e-12, "vi(a, a) != 0");
        v.require(a == b || vi(a, b) > 1e-12, "vi zero for distinct partitions");
        v.require(std::fabs(vi(a, b) - vi(b, a)) < 1e-12, "vi not symmetric");
        v.require(vi(a, c) <= vi(a, b) + vi(b, c) + 1e-12, "vi triangle inequality violated");
    }

    double sum = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const Partition a(oracle::random_labels(100, 5, rng));
        const Partition b(oracle::random_labels(100, 5, rng));
        sum += adjusted_rand_index(a, b).value_or(NAN);
    }
    v.note("mean random ari " + fmt(sum / 100.0, 4));
    v.require(std::fabs(sum / 100.0) <= 0.05, "mean ari of random pairs outside 0 +- 0.05");

    const Partition A(std::vector<community>{0, 0, 1}), B(std::vector<community>{0, 1, 1});
    const InformationStats s = mutual_information_stats(A, B);
    v.note("A/B mi " + fmt(s.mi, 4) + " vi " + fmt(s.vi, 4) + " nmi " + fmt(s.nmi, 4));
    v.require(std::fabs(s.mi - 0.2516) <= 1e-4, "A/B mutual information");
    v.require(std::fabs(s.vi - 1.3333) <= 1e-4, "A/B variation of information");
    v.require(std::fabs(s.nmi - 0.2740) <= 1e-4, "A/B normalized mutual information");
    return v;
}

Verdict criterion_4() {
    Verdict v;
    RngStream rng(404);
    std::size_t identical = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 50 + rng.uniform(450);
        const double k_avg = 3.0 + 7.0 * rng.uniform_real();
        const double gamma = 2.0 + rng.uniform_real();
        const auto degrees = powerlaw_degree_sequence(n, k_avg, std::min<std::size_t>(n - 1, 40), gamma, rng);
        identical += configuration_model(degrees, rng).degree_sequence() == degrees;
    }
    v.note("configuration model degree sequences identical " + std::to_string(identical) + "/1000");
    v.require(identical == 1000, "configuration model altered a degree sequence");

    RngStream ba_rng(405);
    const Graph ba = barabasi_albert(10000, 5, ba_rng);
    // Fit from twice the minimum degree, past the low-degree curvature.
    const TailFit fit = tail_exponent_fit(ba.degree_sequence(), 10);
    v.note("BA tail exponent " + fmt(fit.exponent) + " (residual " + fmt(fit.residual) + ")");
    v.require(std::fabs(fit.exponent - 3.0) <= 0.4, "BA tail exponent outside 3 +- 0.4");

    RngStream gn_rng(406);
    double worst_degree = 0.0, worst_mu = 0.0, mean_degree = 0.0, mean_mu = 0.0;
    for (int rep = 0; rep < 25; ++rep) {
        const PlantedNetwork net = girvan_newman(1.0, gn_rng);
        const double k = 2.0 * static_cast<double>(net.graph.edge_count()) / 128.0;
        mean_degree += k / 25.0;
        mean_mu += net.realized_mu / 25.0;
        worst_degree = std::max(worst_degree, std::fabs(k - 16.0));
        worst_mu = std::max(worst_mu, std::fabs(net.realized_mu - 1.0 / 16.0));
    }
    v.note("GN mean degree " + fmt(mean_degree) + " (worst |dev| " + fmt(worst_degree) + "), mu " +
           fmt(mean_mu, 4) + " (worst |dev| " + fmt(worst_mu, 4) + ")");
    v.require(worst_degree <= 1.0, "GN mean degree outside 16 +- 1");
    v.require(worst_mu <= 0.02, "GN realized mu outside 1/16 +- 0.02");

    double worst_lfr = 0.0;
    for (SeedModel model : {SeedModel::CM, SeedModel::BA, SeedModel::EV}) {
        for (int step = 1; step <= 8; ++step) {
            LfrParams p;
            p.mu = step / 10.0;
            p.seed_model = model;
            RngStream lfr_rng(407, static_cast<std::uint64_t>(step));
            try {
                const PlantedNetwork net = lfr(p, lfr_rng);
                worst_lfr = std::max(worst_lfr, std::fabs(net.realized_mu - p.mu));
            } catch (const GenerationError& e) {
                v.require(false, std::string("LFR-") + std::string(to_string(model)) + " mu=" + fmt(p.mu, 1) +
                                     " failed: " + e.what());
            }
        }
    }
    v.note("LFR worst |realized - target| " + fmt(worst_lfr, 4));
    v.require(worst_lfr <= 0.02, "LFR realized mu outside target +- 0.02");
    return v;
}

Verdict criterion_5() {
    Verdict v;
    ExperimentConfig cfg = benchmark_config();
    cfg.seed_models = {SeedModel::CM, SeedModel::BA, SeedModel::EV};
    cfg.mu_grid.clear();
    for (int step = 1; step <= 9; ++step) cfg.mu_grid.push_back(step / 10.0);
    cfg.master_seed = 5;
    const auto points = run_topology_sweep(cfg);

    std::map<SeedModel, std::vector<const TopologyPoint*>> by_model;
    for (const auto& p : points) by_model[p.seed_model].push_back(&p);
    for (auto& [model, series] : by_model) {
        std::sort(series.begin(), series.end(), [](auto* a, auto* b) { return a->mu < b->mu; });
        std::string line = std::string(to_string(model)) + " r/T/C:";
        for (auto* p : series) {
            line += " " + fmt(p->assortativity_mean, 2) + "/" + fmt(p->transitivity_mean, 2) + "/" +
                    fmt(p->centralization_mean, 3);
            v.require(p->samples == cfg.replicates,
                      std::string(to_string(model)) + " mu=" + fmt(p->mu, 1) + " lost replicates");
        }
        v.note(line);
    }
    auto series_of = [&](SeedModel m, double TopologyPoint::*field) {
        std::vector<double> out;
        for (auto* p : by_model[m]) out.push_back(p->*field);
        return out;
    };
    const std::vector<double> mus = series_of(SeedModel::CM, &TopologyPoint::mu);

    for (auto* p : by_model[SeedModel::CM]) {
        if (p->mu > 0.4) {
            v.require(std::fabs(p->assortativity_mean) < 0.1, "CM |assortativity| >= 0.1 at mu=" + fmt(p->mu, 1));
        }
    }
    const double ev_r = spearman(mus, series_of(SeedModel::EV, &TopologyPoint::assortativity_mean));
    const double ba_r = spearman(mus, series_of(SeedModel::BA, &TopologyPoint::assortativity_mean));
    v.note("assortativity rho EV " + fmt(ev_r) + ", BA " + fmt(ba_r));
    v.require(ev_r < -0.8, "EV assortativity trend not decreasing");
    v.require(ba_r > 0.8, "BA assortativity trend not increasing");
    for (SeedModel m : {SeedModel::CM, SeedModel::BA, SeedModel::EV}) {
        const double rho = spearman(mus, series_of(m, &TopologyPoint::transitivity_mean));
        v.note(std::string(to_string(m)) + " transitivity rho " + fmt(rho));
        v.require(rho < -0.8, std::string(to_string(m)) + " transitivity not decreasing");
    }
    for (std::size_t i = 0; i < mus.size(); ++i) {
        const double cm = by_model[SeedModel::CM][i]->centralization_mean;
        v.require(by_model[SeedModel::BA][i]->centralization_mean > cm, "BA centralization <= CM at mu=" + fmt(mus[i], 1));
        v.require(by_model[SeedModel::EV][i]->centralization_mean > cm, "EV centralization <= CM at mu=" + fmt(mus[i], 1));
    }
    return v;
}

Verdict criterion_6() {
    Verdict v;
    const ExperimentResult& r = benchmark_result();
    // Table-style ranking: each detector's rank at every grid point, averaged
    // over the grid, one ranking per measure.
    std::map<std::string, std::vector<double>> mean_rank;
    for (const char* measure : {"rand", "ari", "nmi"}) {
        std::map<std::string, double> total;
        for (const auto& row : r.summary) {
            if (row.measure == measure) total[row.detector] += row.rank;
        }
        for (const auto& d : kBenchmarkDetectors) mean_rank[measure].push_back(total[d] / 2.0);
    }
    for (auto [a, b] : {std::pair{"rand", "ari"}, std::pair{"rand", "nmi"}, std::pair{"ari", "nmi"}}) {
        const double rho = spearman(mean_rank[a], mean_rank[b]);
        v.note(std::string(a) + "~" + b + " rho " + fmt(rho));
        v.require(rho > 0.9, std::string(a) + "/" + b + " ranking correlation <= 0.9");
    }
    // Per grid point, for the record.
    for (double mu : {0.2, 0.6}) {
        std::map<std::string, std::vector<double>> ranks;
        for (const auto& d : kBenchmarkDetectors) {
            for (const auto& row : r.summary) {
                if (row.detector == d && row.mu_target == mu) ranks[row.measure].push_back(row.rank);
            }
        }
        std::string line = "mu=" + fmt(mu, 1) + " per-point rho";
        for (auto [a, b] : {std::pair{"rand", "ari"}, std::pair{"rand", "nmi"}, std::pair{"ari", "nmi"}}) {
            try {
                line += " " + std::string(a) + "~" + b + "=" + fmt(spearman(ranks[a], ranks[b]));
            } catch (const ArgumentError&) {
                line += " " + std::string(a) + "~" + b + "=n/a";
            }
        }
        v.note(line);
    }
    return v;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

Verdict criterion_7() {
    Verdict v;
    const fs::path base = fs::temp_directory_path() / "commkit_acceptance_determinism";
    fs::remove_all(base);
    std::vector<std::string> files;
    for (const char* threads : {"1", "4"}) {
        setenv("COMMKIT_THREADS", threads, 1);
        const fs::path dir = base / threads;
        emit_reports(run_experiment(benchmark_config()), dir);
        files.push_back(slurp(dir / "results.csv"));
        v.note(std::string("COMMKIT_THREADS=") + threads + " -> " + std::to_string(worker_count()) + " workers, " +
               std::to_string(files.back().size()) + " bytes");
    }
    unsetenv("COMMKIT_THREADS");
    v.require(!files[0].empty() && files[0] == files[1], "results.csv differs between worker counts");
    fs::remove_all(base);
    return v;
}

Verdict criterion_8() {
    Verdict v;
    std::size_t wins = 0;
    bool one_block_zero = true;
    double margin = INFINITY;
    for (std::uint64_t rep = 0; rep < 25; ++rep) {
        LfrParams p;
        p.mu = 0.2;
        RngStream rng(808, rep);
        const PlantedNetwork net = lfr(p, rng);
        std::vector<community> shuffled = net.planted.membership();
        rng.shuffle(std::span<community>(shuffled));
        const double planted = surprise(net.graph, net.planted);
        const double random = surprise(net.graph, Partition(shuffled));
        wins += planted > random;
        margin = std::min(margin, planted - random);
        one_block_zero &= surprise(net.graph, Partition::one_block(p.n)) == 0.0;
    }
    v.note("planted beats size-matched random in " + std::to_string(wins) + "/25 (smallest margin " +
           fmt(margin, 1) + ")");
    v.require(wins == 25, "planted surprise not always above random");
    v.require(one_block_zero, "surprise(one block) != 0");
    return v;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            selected.push_back(std::atoi(argv[++i]));
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]...\n", argv[0]);
            return 2;
        }
    }
    if (selected.empty()) selected = {1, 2, 3, 4, 5, 6, 7, 8};

    const std::map<int, std::pair<const char*, std::function<Verdict()>>> criteria{
        {1, {"benchmark ordering", criterion_1}},
        {2, {"modularity oracle", criterion_2}},
        {3, {"measure oracles", criterion_3}},
        {4, {"generator statistics", criterion_4}},
        {5, {"topology trends", criterion_5}},
        {6, {"measure rank agreement", criterion_6}},
        {7, {"determinism", criterion_7}},
        {8, {"surprise sanity", criterion_8}},
    };
    bool all = true;
    for (int id : selected) {
        const auto it = criteria.find(id);
        if (it == criteria.end()) {
            std::fprintf(stderr, "no criterion %d\n", id);
            return 2;
        }
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = it->second.second();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d (%s): %s [%.1fs]\n  %s\n", id, it->second.first, v.pass ? "PASS" : "FAIL",
                    seconds, v.detail.c_str());
        std::fflush(stdout);
        all &= v.pass;
    }
    return all ? 0 : 1;
}
