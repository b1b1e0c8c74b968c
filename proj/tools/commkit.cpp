// commkit: generate planted networks, detect communities, score partitions
// and run comparison experiments from the command line.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commkit/detect.hpp"
#include "commkit/error.hpp"
#include "commkit/experiment.hpp"
#include "commkit/generators.hpp"
#include "commkit/graph.hpp"
#include "commkit/measures.hpp"
#include "commkit/partition.hpp"
#include "commkit/topology.hpp"

using namespace commkit;

namespace {

std::string fmt_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string fmt_optional(const std::optional<double>& x) { return x ? fmt_real(*x) : ""; }

struct GenerateArgs {
    std::string model = "lfr";
    std::string out;
    std::uint64_t seed = 1;
    LfrParams lfr;
    std::string seed_model = "cm";
    double z_out = 1.0;
    std::size_t n = 1000;
    std::size_t m = 5;
    double p = 0.01;
};

void write_meta(const std::string& path, const std::vector<std::pair<std::string, std::string>>& fields) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    for (const auto& [k, v] : fields) out << k << '=' << v << '\n';
    if (!out) throw IoError("failed writing '" + path + "'");
}

void run_generate(const GenerateArgs& a) {
    RngStream rng(a.seed, 0);
    std::vector<std::pair<std::string, std::string>> meta{{"model", a.model}, {"seed", std::to_string(a.seed)}};
    std::optional<PlantedNetwork> planted;
    Graph g;
    if (a.model == "lfr") {
        LfrParams p = a.lfr;
        p.seed_model = parse_seed_model(a.seed_model);
        planted = lfr(p, rng);
        meta.insert(meta.end(), {{"seed_model", std::string(to_string(p.seed_model))},
                                 {"n", std::to_string(p.n)},
                                 {"k_avg", fmt_real(p.k_avg)},
                                 {"k_max", std::to_string(p.k_max)},
                                 {"gamma", fmt_real(p.gamma)},
                                 {"beta", fmt_real(p.beta)},
                                 {"c_min", std::to_string(p.c_min)},
                                 {"c_max", std::to_string(p.c_max)},
                                 {"mu", fmt_real(p.mu)},
                                 {"mu_tolerance", fmt_real(p.mu_tolerance)},
                                 {"ev_b", fmt_real(p.ev.temptation)},
                                 {"ev_epsilon", fmt_real(p.ev.selection_pressure)}});
    } else if (a.model == "gn") {
        planted = girvan_newman(a.z_out, rng);
        meta.push_back({"z_out", fmt_real(a.z_out)});
    } else if (a.model == "er") {
        g = erdos_renyi(a.n, a.p, rng);
        meta.insert(meta.end(), {{"n", std::to_string(a.n)}, {"p", fmt_real(a.p)}});
    } else if (a.model == "ba") {
        g = barabasi_albert(a.n, a.m, rng);
        meta.insert(meta.end(), {{"n", std::to_string(a.n)}, {"m", std::to_string(a.m)}});
    } else if (a.model == "ev") {
        g = evolutionary_pa(a.n, a.m, a.lfr.ev, rng);
        meta.insert(meta.end(), {{"n", std::to_string(a.n)},
                                 {"m", std::to_string(a.m)},
                                 {"ev_b", fmt_real(a.lfr.ev.temptation)},
                                 {"ev_epsilon", fmt_real(a.lfr.ev.selection_pressure)}});
    } else {
        throw ArgumentError("unknown model '" + a.model + "' (lfr, gn, er, ba, ev)");
    }
    if (planted) {
        g = planted->graph;
        write_membership_file(a.out + ".planted", planted->planted);
        meta.push_back({"realized_mu", fmt_real(planted->realized_mu)});
    }
    write_edge_list_file(a.out + ".edges", g);
    meta.push_back({"nodes", std::to_string(g.node_count())});
    meta.push_back({"edges", std::to_string(g.edge_count())});
    write_meta(a.out + ".meta", meta);
    std::cout << "nodes," << g.node_count() << "\nedges," << g.edge_count() << '\n';
    if (planted) std::cout << "realized_mu," << fmt_real(planted->realized_mu) << '\n';
}

struct DetectArgs {
    std::string algorithm;
    std::string graph;
    std::string out;
    std::uint64_t seed = 1;
    std::vector<std::string> params;
};

void run_detect(const DetectArgs& a) {
    const Graph g = read_edge_list_file(a.graph);
    DetectorParams params;
    for (const auto& kv : a.params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw ArgumentError("--param expects key=value, got '" + kv + "'");
        params.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    RngStream rng(a.seed, 0);
    const DetectionResult result = run_detector(a.algorithm, g, params, rng);
    if (result.hit_iteration_cap) std::cerr << "warning: " << a.algorithm << " stopped at its iteration cap\n";
    write_membership_file(a.out, result.partition);
    std::cout << "community_count," << result.partition.community_count() << '\n';
    std::cout << "modularity,"
              << (g.edge_count() ? fmt_real(modularity(g, result.partition)) : std::string()) << '\n';
}

struct EvaluateArgs {
    std::string graph;
    std::string found;
    std::string truth;
    std::vector<std::string> measures{"nmi"};
};

void run_evaluate(const EvaluateArgs& a) {
    const Graph g = read_edge_list_file(a.graph);
    const Partition found = read_membership_file(a.found, g.node_count());
    std::optional<Partition> truth;
    if (!a.truth.empty()) truth = read_membership_file(a.truth, g.node_count());
    for (const auto& m : a.measures) {
        if (!is_measure(m)) throw ArgumentError("unknown measure '" + m + "'");
    }
    for (const auto& m : a.measures) {
        std::cout << m << ',' << fmt_optional(evaluate_measure(m, g, found, truth ? &*truth : nullptr)) << '\n';
    }
}

struct ExperimentArgs {
    std::string config;
    std::string output;
    bool topology = false;
};

void run_experiment_cmd(const ExperimentArgs& a) {
    ExperimentConfig cfg = load_config_file(a.config);
    if (!a.output.empty()) cfg.output_dir = a.output;
    if (a.topology) {
        const auto points = run_topology_sweep(cfg);
        emit_topology_reports(points, cfg.output_dir);
        std::cout << "points," << points.size() << "\noutput," << cfg.output_dir.string() << '\n';
        return;
    }
    const ExperimentResult result = run_experiment(cfg);
    emit_reports(result, cfg.output_dir, cfg.runtime_column);
    std::size_t failed = 0;
    for (const auto& r : result.records) failed += r.status == "ok" || r.status == "undefined" ? 0 : 1;
    std::cout << "records," << result.records.size() << "\nfailed," << failed << "\noutput,"
              << cfg.output_dir.string() << '\n';
}

void run_diagnose(const std::string& path) {
    const Graph g = read_edge_list_file(path);
    const GraphSummary s = summarize(g);
    std::cout << "nodes," << s.node_count << "\nedges," << s.edge_count << "\ndensity," << fmt_real(s.density)
              << "\nmean_distance," << fmt_real(s.mean_distance) << "\ntransitivity," << fmt_real(s.transitivity)
              << "\nassortativity," << fmt_optional(s.assortativity) << "\ndegree_centralization,"
              << fmt_real(s.degree_centralization) << "\ncloseness_centralization,"
              << fmt_real(s.closeness_centralization) << "\nbetweenness_centralization,"
              << fmt_real(s.betweenness_centralization) << "\ncomponents," << s.component_count << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"commkit: planted-partition generators, community detectors and partition measures"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Generate a network (and planted partition)");
    generate->add_option("--model", gen.model, "lfr, gn, er, ba or ev")->capture_default_str();
    generate->add_option("--out", gen.out, "Output stem for .edges/.planted/.meta")->required();
    generate->add_option("--seed", gen.seed)->capture_default_str();
    generate->add_option("--seed-model", gen.seed_model, "LFR seed model: cm, ba or ev")->capture_default_str();
    generate->add_option("--n", gen.lfr.n, "LFR node count")->capture_default_str();
    generate->add_option("--k-avg", gen.lfr.k_avg)->capture_default_str();
    generate->add_option("--k-max", gen.lfr.k_max)->capture_default_str();
    generate->add_option("--gamma", gen.lfr.gamma)->capture_default_str();
    generate->add_option("--beta", gen.lfr.beta)->capture_default_str();
    generate->add_option("--c-min", gen.lfr.c_min)->capture_default_str();
    generate->add_option("--c-max", gen.lfr.c_max)->capture_default_str();
    generate->add_option("--mu", gen.lfr.mu)->capture_default_str();
    generate->add_option("--mu-tolerance", gen.lfr.mu_tolerance)->capture_default_str();
    generate->add_option("--ev-b", gen.lfr.ev.temptation)->capture_default_str();
    generate->add_option("--ev-epsilon", gen.lfr.ev.selection_pressure)->capture_default_str();
    generate->add_option("--z-out", gen.z_out, "GN inter-community degree")->capture_default_str();
    generate->add_option("--nodes", gen.n, "Node count for er/ba/ev")->capture_default_str();
    generate->add_option("--links", gen.m, "Links per newcomer for ba/ev")->capture_default_str();
    generate->add_option("--p", gen.p, "Edge probability for er")->capture_default_str();

    DetectArgs det;
    auto* detect = app.add_subcommand("detect", "Run a community detector");
    detect->add_option("--algorithm", det.algorithm)->required();
    detect->add_option("--graph", det.graph, "Edge-list file")->required();
    detect->add_option("--out", det.out, "Membership file to write")->required();
    detect->add_option("--seed", det.seed)->capture_default_str();
    detect->add_option("--param", det.params, "Tunable as key=value (repeatable)");

    EvaluateArgs ev;
    auto* evaluate = app.add_subcommand("evaluate", "Score a partition");
    evaluate->add_option("--graph", ev.graph)->required();
    evaluate->add_option("--found", ev.found)->required();
    evaluate->add_option("--truth", ev.truth);
    evaluate->add_option("--measures", ev.measures)->delimiter(',')->capture_default_str();

    ExperimentArgs ex;
    auto* experiment = app.add_subcommand("experiment", "Run a configured comparison experiment");
    experiment->add_option("--config", ex.config)->required();
    experiment->add_option("--output", ex.output, "Override output_dir");
    experiment->add_flag("--topology", ex.topology, "Run the topology sweep instead of detectors");

    std::string diagnose_graph;
    auto* diagnose = app.add_subcommand("diagnose", "Print a graph summary");
    diagnose->add_option("--graph", diagnose_graph)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*generate) run_generate(gen);
        else if (*detect) run_detect(det);
        else if (*evaluate) run_evaluate(ev);
        else if (*experiment) run_experiment_cmd(ex);
        else if (*diagnose) run_diagnose(diagnose_graph);
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
