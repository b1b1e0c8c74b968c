#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

#include "commkit/error.hpp"
#include "commkit/experiment.hpp"

namespace commkit {

namespace {

std::string number(double x) {
    if (std::isnan(x)) return "";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

// Files are written under a temporary name and renamed once all are done.
class Staging {
public:
    explicit Staging(std::filesystem::path dir) : dir_(std::move(dir)) {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        const auto probe = dir_ / ".commkit-probe";
        std::ofstream out(probe);
        if (ec || !out || !(out << "probe\n") || (out.close(), !out)) {
            throw IoError("output directory '" + dir_.string() + "' is not writable");
        }
        std::filesystem::remove(probe, ec);
    }

    std::ofstream open(const std::string& name) {
        const auto tmp = dir_ / (name + ".tmp");
        std::ofstream out(tmp);
        if (!out) throw IoError("cannot write '" + tmp.string() + "'");
        staged_.push_back(name);
        return out;
    }

    void commit() {
        for (const auto& name : staged_) {
            std::error_code ec;
            std::filesystem::rename(dir_ / (name + ".tmp"), dir_ / name, ec);
            if (ec) throw IoError("cannot move '" + name + "' into place: " + ec.message());
        }
        staged_.clear();
    }

    ~Staging() {
        for (const auto& name : staged_) {
            std::error_code ec;
            std::filesystem::remove(dir_ / (name + ".tmp"), ec);
        }
    }

private:
    std::filesystem::path dir_;
    std::vector<std::string> staged_;
};

void check(std::ofstream& out, const std::string& name) {
    out.flush();
    if (!out) throw IoError("failed writing '" + name + "'");
}

} // namespace

void write_results_csv(std::ostream& out, const std::vector<ResultRecord>& records, bool runtime_column) {
    out << kResultsHeader << '\n';
    for (const ResultRecord& r : records) {
        out << r.generator << ',' << r.seed_model << ',' << number(r.mu_target) << ','
            << number(r.mu_realized) << ',' << r.replicate << ',' << r.seed << ',' << r.detector << ','
            << r.measure << ',' << (r.value ? number(*r.value) : "") << ','
            << (runtime_column ? number(r.runtime_ms) : "") << '\n';
    }
}

void emit_reports(const ExperimentResult& result, const std::filesystem::path& out_dir, bool runtime_column) {
    if (result.records.empty()) throw ArgumentError("no records to report");
    Staging stage(out_dir);

    {
        auto out = stage.open("results.csv");
        write_results_csv(out, result.records, runtime_column);
        check(out, "results.csv");
    }
    {
        auto out = stage.open("timings.csv");
        out << "generator,seed_model,mu_target,replicate,detector,runtime_ms,status\n";
        std::set<std::tuple<std::string, double, std::size_t, std::string>> seen;
        for (const ResultRecord& r : result.records) {
            if (!seen.insert({r.seed_model, r.mu_target, r.replicate, r.detector}).second) continue;
            out << r.generator << ',' << r.seed_model << ',' << number(r.mu_target) << ',' << r.replicate
                << ',' << r.detector << ',' << number(r.runtime_ms) << ','
                << (r.status == "undefined" ? "ok" : r.status) << '\n';
        }
        check(out, "timings.csv");
    }
    {
        auto out = stage.open("summary.csv");
        out << "seed_model,mu_target,detector,measure,samples,mean,stddev,rank\n";
        for (const SummaryRow& s : result.summary) {
            out << s.seed_model << ',' << number(s.mu_target) << ',' << s.detector << ',' << s.measure << ','
                << s.samples << ',' << number(s.mean) << ',' << number(s.stddev) << ',' << number(s.rank)
                << '\n';
        }
        check(out, "summary.csv");
    }
    // One plot series per (seed model, detector, measure), rows in mu order.
    std::map<std::string, std::vector<const SummaryRow*>> series;
    for (const SummaryRow& s : result.summary) {
        series["series_" + s.seed_model + "_" + s.detector + "_" + s.measure + ".tsv"].push_back(&s);
    }
    for (auto& [name, rows] : series) {
        std::stable_sort(rows.begin(), rows.end(),
                         [](const SummaryRow* a, const SummaryRow* b) { return a->mu_target < b->mu_target; });
        auto out = stage.open(name);
        out << "mu\tmean\tstddev\n";
        for (const SummaryRow* s : rows) {
            out << number(s->mu_target) << '\t' << number(s->mean) << '\t' << number(s->stddev) << '\n';
        }
        check(out, name);
    }
    stage.commit();
}

void emit_topology_reports(const std::vector<TopologyPoint>& points, const std::filesystem::path& out_dir) {
    if (points.empty()) throw ArgumentError("no topology points to report");
    Staging stage(out_dir);
    {
        auto out = stage.open("topology.csv");
        out << "seed_model,mu,samples,assortativity_mean,assortativity_sd,transitivity_mean,transitivity_sd,"
               "centralization_mean,centralization_sd,realized_mu_mean,mixing_limit_mean\n";
        for (const TopologyPoint& p : points) {
            out << to_string(p.seed_model) << ',' << number(p.mu) << ',' << p.samples << ','
                << number(p.assortativity_mean) << ',' << number(p.assortativity_sd) << ','
                << number(p.transitivity_mean) << ',' << number(p.transitivity_sd) << ','
                << number(p.centralization_mean) << ',' << number(p.centralization_sd) << ','
                << number(p.realized_mu_mean) << ',' << number(p.mixing_limit_mean) << '\n';
        }
        check(out, "topology.csv");
    }
    struct Property {
        const char* name;
        double TopologyPoint::*mean;
        double TopologyPoint::*sd;
    };
    const Property properties[] = {
        {"assortativity", &TopologyPoint::assortativity_mean, &TopologyPoint::assortativity_sd},
        {"transitivity", &TopologyPoint::transitivity_mean, &TopologyPoint::transitivity_sd},
        {"centralization", &TopologyPoint::centralization_mean, &TopologyPoint::centralization_sd},
    };
    std::set<SeedModel> models;
    for (const TopologyPoint& p : points) models.insert(p.seed_model);
    for (SeedModel m : models) {
        for (const Property& prop : properties) {
            const std::string name = "topology_" + std::string(to_string(m)) + "_" + prop.name + ".tsv";
            auto out = stage.open(name);
            out << "mu\tmean\tstddev\n";
            for (const TopologyPoint& p : points) {
                if (p.seed_model != m) continue;
                out << number(p.mu) << '\t' << number(p.*prop.mean) << '\t' << number(p.*prop.sd) << '\n';
            }
            check(out, name);
        }
    }
    stage.commit();
}

} // namespace commkit
