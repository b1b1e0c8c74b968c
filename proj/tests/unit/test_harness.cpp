#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "commkit/error.hpp"
#include "commkit/experiment.hpp"

using namespace commkit;
namespace fs = std::filesystem;

namespace {

ExperimentConfig small_config() {
    std::istringstream in(R"(# small grid
generator = lfr
seed_models = cm
mu = 0.2, 0.4
n = 200
k_avg = 10
k_max = 30
c_min = 10
c_max = 40
replicates = 2
master_seed = 9
measures = nmi, ari, rand
detector = walktrap
detector = label_propagation label_propagation.max_sweeps=50
)");
    return parse_config(in);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("commkit_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST(Config, ParsesEveryKey) {
    const ExperimentConfig cfg = small_config();
    EXPECT_EQ(cfg.generator, GeneratorKind::LFR);
    EXPECT_EQ(cfg.mu_grid, (std::vector<double>{0.2, 0.4}));
    EXPECT_EQ(cfg.lfr.n, 200u);
    EXPECT_EQ(cfg.lfr.k_max, 30u);
    EXPECT_EQ(cfg.replicates, 2u);
    EXPECT_EQ(cfg.master_seed, 9u);
    ASSERT_EQ(cfg.detectors.size(), 2u);
    EXPECT_EQ(cfg.detectors[1].params.label_propagation.max_sweeps, 50u);
    EXPECT_EQ(cfg.measures, (std::vector<std::string>{"nmi", "ari", "rand"}));
    EXPECT_FALSE(cfg.runtime_column);
}

TEST(Config, ErrorsCarryLineNumbers) {
    auto message = [](const std::string& text) {
        std::istringstream in(text);
        try {
            parse_config(in);
        } catch (const ArgumentError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_NE(message("detector = infomap\nreplicates = two\n").find("line 2"), std::string::npos);
    EXPECT_NE(message("detector = nosuch\n").find("line 1"), std::string::npos);
    EXPECT_NE(message("measures = nmi\nflavour = x\n").find("line 2"), std::string::npos);
    EXPECT_NE(message("no equals sign\n").find("line 1"), std::string::npos);
    EXPECT_THROW(load_config_file("/nonexistent/exp.cfg"), IoError);
}

TEST(Config, ValidationRejectsEmptyGrids) {
    ExperimentConfig cfg = small_config();
    cfg.replicates = 0;
    EXPECT_THROW(cfg.validate(), ArgumentError);
    cfg = small_config();
    cfg.detectors.clear();
    EXPECT_THROW(cfg.validate(), ArgumentError);
}

TEST(Diagnostics, MixingLimit) {
    std::vector<community> labels(128);
    for (node v = 0; v < 128; ++v) labels[v] = v / 32;
    EXPECT_DOUBLE_EQ(mixing_limit(Partition(labels), 128), 0.75);
    EXPECT_DOUBLE_EQ(mixing_limit(Partition::one_block(10), 10), 0.0);
}

TEST(Diagnostics, TailFitOnPowerLawSamples) {
    RngStream rng(5);
    const auto degrees = powerlaw_degree_sequence(100000, 6.0, 2000, 3.0, rng);
    const std::size_t k_min = *std::min_element(degrees.begin(), degrees.end());
    EXPECT_NEAR(tail_exponent_estimate(degrees, k_min), 3.0, 0.3);
}

TEST(Diagnostics, ExponentialTailDriftsAndFitsWorse) {
    RngStream rng(6);
    std::vector<std::size_t> geometric(100000);
    for (auto& k : geometric) {
        k = 1;
        while (rng.bernoulli(0.8)) ++k;
    }
    const TailFit low = tail_exponent_fit(geometric, 1);
    const TailFit high = tail_exponent_fit(geometric, 15);
    EXPECT_GT(std::fabs(high.exponent - low.exponent), 0.5);

    RngStream rng2(7);
    const auto power = powerlaw_degree_sequence(100000, 6.0, 2000, 3.0, rng2);
    const std::size_t k_min = *std::min_element(power.begin(), power.end());
    EXPECT_GT(low.residual, tail_exponent_fit(power, k_min).residual);
}

TEST(Diagnostics, TailFitRejectsDegenerateInput) {
    EXPECT_THROW(tail_exponent_estimate(std::vector<std::size_t>(500, 4), 1), ArgumentError);
    EXPECT_THROW(tail_exponent_estimate(std::vector<std::size_t>(50, 4), 1), ArgumentError);
}

TEST(Diagnostics, RanksAndSpearman) {
    EXPECT_EQ(average_ranks({3.0, 1.0, 3.0, 2.0}), (std::vector<double>{3.5, 1.0, 3.5, 2.0}));
    EXPECT_NEAR(spearman({1, 2, 3, 4}, {10, 20, 30, 40}), 1.0, 1e-12);
    EXPECT_NEAR(spearman({1, 2, 3, 4}, {4, 3, 2, 1}), -1.0, 1e-12);
    // d = (0, 1, -1, 0): rho = 1 - 6 * 2 / (4 * 15) = 0.8.
    EXPECT_NEAR(spearman({1, 2, 3, 4}, {1, 3, 2, 4}), 0.8, 1e-12);
    EXPECT_THROW(spearman({1, 1, 1}, {1, 2, 3}), ArgumentError);
}

TEST(Experiment, OneCellGivesOneRecordPerMeasure) {
    ExperimentConfig cfg = small_config();
    cfg.mu_grid = {0.2};
    cfg.replicates = 1;
    cfg.detectors.resize(1);
    const ExperimentResult r = run_experiment(cfg, 1);
    EXPECT_EQ(r.records.size(), 3u);
    for (const auto& rec : r.records) {
        EXPECT_EQ(rec.status, "ok");
        EXPECT_NEAR(rec.mu_realized, 0.2, cfg.lfr.mu_tolerance);
    }
}

TEST(Experiment, WorkerCountDoesNotChangeResults) {
    const ExperimentConfig cfg = small_config();
    const fs::path one = scratch("w1"), three = scratch("w3");
    emit_reports(run_experiment(cfg, 1), one);
    emit_reports(run_experiment(cfg, 3), three);
    EXPECT_EQ(slurp(one / "results.csv"), slurp(three / "results.csv"));
    EXPECT_EQ(slurp(one / "summary.csv"), slurp(three / "summary.csv"));
}

TEST(Experiment, SummaryMatchesRecords) {
    const ExperimentResult r = run_experiment(small_config(), 1);
    std::map<std::tuple<double, std::string, std::string>, std::vector<double>> groups;
    for (const auto& rec : r.records) {
        if (rec.value) groups[{rec.mu_target, rec.detector, rec.measure}].push_back(*rec.value);
    }
    ASSERT_EQ(r.summary.size(), groups.size());
    for (const auto& row : r.summary) {
        const auto& v = groups.at({row.mu_target, row.detector, row.measure});
        double mean = 0.0;
        for (double x : v) mean += x;
        mean /= static_cast<double>(v.size());
        double ss = 0.0;
        for (double x : v) ss += (x - mean) * (x - mean);
        EXPECT_EQ(row.samples, v.size());
        EXPECT_NEAR(row.mean, mean, 1e-12);
        EXPECT_NEAR(row.stddev, std::sqrt(ss / static_cast<double>(v.size() - 1)), 1e-12);
    }
}

TEST(Experiment, ReplicatesAreIndependent) {
    ExperimentConfig cfg = small_config();
    const ExperimentResult full = run_experiment(cfg, 1);
    cfg.replicates = 1;
    const ExperimentResult fewer = run_experiment(cfg, 1);
    std::vector<ResultRecord> kept;
    for (const auto& rec : full.records) {
        if (rec.replicate == 0) kept.push_back(rec);
    }
    ASSERT_EQ(kept.size(), fewer.records.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        EXPECT_EQ(kept[i].seed, fewer.records[i].seed);
        EXPECT_EQ(kept[i].value, fewer.records[i].value);
    }
    const auto a = summarize_records(kept);
    const auto b = fewer.summary;
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].mean, b[i].mean);
}

TEST(Experiment, RanksAverageTiesAndFavourLowVi) {
    std::vector<ResultRecord> records;
    auto add = [&](const std::string& det, const std::string& measure, double v) {
        ResultRecord r;
        r.generator = "lfr";
        r.seed_model = "cm";
        r.mu_target = 0.2;
        r.detector = det;
        r.measure = measure;
        r.value = v;
        records.push_back(r);
    };
    add("a", "nmi", 0.9);
    add("b", "nmi", 0.9);
    add("c", "nmi", 0.5);
    add("a", "vi", 0.1);
    add("b", "vi", 0.7);
    add("c", "vi", 0.4);
    std::map<std::pair<std::string, std::string>, double> rank;
    for (const auto& row : summarize_records(records)) rank[{row.detector, row.measure}] = row.rank;
    EXPECT_EQ((rank[{"a", "nmi"}]), 1.5);
    EXPECT_EQ((rank[{"c", "nmi"}]), 3.0);
    EXPECT_EQ((rank[{"a", "vi"}]), 1.0);
    EXPECT_EQ((rank[{"b", "vi"}]), 3.0);
}

TEST(Reports, HeaderRowsAndUndefinedValues) {
    ExperimentResult result;
    for (int i = 0; i < 10; ++i) {
        ResultRecord r;
        r.generator = "lfr";
        r.seed_model = "cm";
        r.mu_target = 0.2;
        r.replicate = static_cast<std::size_t>(i);
        r.detector = "mcl";
        r.measure = "ari";
        if (i == 3) r.status = "undefined";
        else r.value = 0.5;
        result.records.push_back(r);
    }
    result.summary = summarize_records(result.records);
    const fs::path dir = scratch("reports");
    emit_reports(result, dir);
    std::ifstream in(dir / "results.csv");
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    ASSERT_EQ(lines.size(), 11u);
    EXPECT_EQ(lines[0], kResultsHeader);
    // value is the second-to-last field; undefined is empty, not 0.
    EXPECT_NE(lines[4].find(",mcl,ari,,"), std::string::npos);
    EXPECT_NE(lines[1].find(",mcl,ari,0.5,"), std::string::npos);
    EXPECT_TRUE(fs::exists(dir / "summary.csv"));
    EXPECT_TRUE(fs::exists(dir / "series_cm_mcl_ari.tsv"));
}

TEST(Reports, UnwritableDirectoryFailsBeforeWriting) {
    ExperimentResult result;
    ResultRecord r;
    r.detector = "mcl";
    r.measure = "nmi";
    r.value = 1.0;
    result.records.push_back(r);
    const fs::path dir = scratch("readonly");
    fs::permissions(dir, fs::perms::owner_read | fs::perms::owner_exec);
    // Root ignores permission bits; only assert when the probe can fail.
    std::ofstream probe(dir / "probe");
    const bool writable = static_cast<bool>(probe);
    probe.close();
    fs::remove(dir / "probe");
    if (writable) {
        fs::permissions(dir, fs::perms::owner_all);
        fs::remove_all(dir);
        const fs::path file = scratch("notadir") / "plain";
        std::ofstream(file) << "x";
        EXPECT_THROW(emit_reports(result, file / "sub"), IoError);
        return;
    }
    EXPECT_THROW(emit_reports(result, dir), IoError);
    EXPECT_TRUE(fs::is_empty(dir));
    fs::permissions(dir, fs::perms::owner_all);
}

TEST(Reports, EmptyRecordsRejected) {
    EXPECT_THROW(emit_reports(ExperimentResult{}, scratch("empty")), ArgumentError);
}
