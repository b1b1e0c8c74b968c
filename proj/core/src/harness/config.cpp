#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "commkit/error.hpp"
#include "commkit/experiment.hpp"
#include "commkit/measures.hpp"

namespace commkit {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto end = s.find(sep, start);
        const std::string item = trim(s.substr(start, end == std::string_view::npos ? end : end - start));
        if (!item.empty()) out.push_back(item);
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return out;
}

struct Line {
    std::size_t number;
    std::string key;

    [[noreturn]] void fail(const std::string& what) const {
        throw ArgumentError("config line " + std::to_string(number) + " (" + key + "): " + what);
    }

    double real(const std::string& v) const {
        try {
            std::size_t used = 0;
            const double x = std::stod(v, &used);
            if (used == v.size()) return x;
        } catch (const std::exception&) {
        }
        fail("expected a number, got '" + v + "'");
    }

    std::uint64_t integer(const std::string& v) const {
        std::uint64_t x = 0;
        const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
        if (ec != std::errc{} || ptr != v.data() + v.size()) {
            fail("expected a non-negative integer, got '" + v + "'");
        }
        return x;
    }

    bool flag(const std::string& v) const {
        if (v == "on" || v == "true" || v == "1" || v == "yes") return true;
        if (v == "off" || v == "false" || v == "0" || v == "no") return false;
        fail("expected on/off, got '" + v + "'");
    }
};

} // namespace

void ExperimentConfig::validate() const {
    if (replicates < 1) throw ArgumentError("replicates must be >= 1");
    if (mu_grid.empty()) throw ArgumentError("the mu grid is empty");
    if (detectors.empty()) throw ArgumentError("no detector configured");
    if (measures.empty()) throw ArgumentError("no measure configured");
    if (generator == GeneratorKind::LFR && seed_models.empty()) throw ArgumentError("no seed model configured");
    if (timeout.count() <= 0) throw ArgumentError("timeout_ms must be positive");
    for (double mu : mu_grid) {
        if (!(mu >= 0.0 && mu <= 1.0)) throw ArgumentError("mu values must lie in [0, 1]");
        if (generator == GeneratorKind::LFR) {
            LfrParams p = lfr;
            p.mu = mu;
            p.validate();
        }
    }
    for (const auto& d : detectors) {
        if (!is_detector(d.name)) throw ArgumentError("unknown detector '" + d.name + "'");
        d.params.validate();
    }
    for (const auto& m : measures) {
        if (!is_measure(m)) throw ArgumentError("unknown measure '" + m + "'");
    }
}

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig cfg;
    std::string raw;
    for (std::size_t number = 1; std::getline(in, raw); ++number) {
        const std::string text = trim(std::string_view(raw).substr(0, raw.find('#')));
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            throw ArgumentError("config line " + std::to_string(number) + ": expected key = value");
        }
        const Line line{number, trim(std::string_view(text).substr(0, eq))};
        const std::string value = trim(std::string_view(text).substr(eq + 1));
        const std::string& key = line.key;
        if (value.empty()) line.fail("missing value");

        if (key == "generator") {
            if (value == "lfr") cfg.generator = GeneratorKind::LFR;
            else if (value == "gn") cfg.generator = GeneratorKind::GN;
            else line.fail("expected lfr or gn");
        } else if (key == "seed_models") {
            cfg.seed_models.clear();
            try {
                for (const auto& s : split(value, ',')) cfg.seed_models.push_back(parse_seed_model(s));
            } catch (const ArgumentError& e) {
                line.fail(e.what());
            }
        } else if (key == "mu") {
            cfg.mu_grid.clear();
            for (const auto& s : split(value, ',')) cfg.mu_grid.push_back(line.real(s));
        } else if (key == "n") {
            cfg.lfr.n = line.integer(value);
        } else if (key == "k_avg") {
            cfg.lfr.k_avg = line.real(value);
        } else if (key == "k_max") {
            cfg.lfr.k_max = line.integer(value);
        } else if (key == "gamma") {
            cfg.lfr.gamma = line.real(value);
        } else if (key == "beta") {
            cfg.lfr.beta = line.real(value);
        } else if (key == "c_min") {
            cfg.lfr.c_min = line.integer(value);
        } else if (key == "c_max") {
            cfg.lfr.c_max = line.integer(value);
        } else if (key == "mu_tolerance") {
            cfg.lfr.mu_tolerance = line.real(value);
        } else if (key == "ev_b") {
            cfg.lfr.ev.temptation = line.real(value);
        } else if (key == "ev_epsilon") {
            cfg.lfr.ev.selection_pressure = line.real(value);
        } else if (key == "replicates") {
            cfg.replicates = line.integer(value);
        } else if (key == "master_seed") {
            cfg.master_seed = line.integer(value);
        } else if (key == "measures") {
            cfg.measures = split(value, ',');
        } else if (key == "detector") {
            std::istringstream words(value);
            DetectorSpec spec;
            words >> spec.name;
            if (!is_detector(spec.name)) line.fail("unknown detector '" + spec.name + "'");
            for (std::string override; words >> override;) {
                const auto at = override.find('=');
                if (at == std::string::npos) line.fail("detector override '" + override + "' is not key=value");
                try {
                    spec.params.set(override.substr(0, at), override.substr(at + 1));
                } catch (const ArgumentError& e) {
                    line.fail(e.what());
                }
            }
            cfg.detectors.push_back(std::move(spec));
        } else if (key == "timeout_ms") {
            cfg.timeout = std::chrono::milliseconds(line.integer(value));
        } else if (key == "runtime_column") {
            cfg.runtime_column = line.flag(value);
        } else if (key == "output_dir") {
            cfg.output_dir = value;
        } else {
            line.fail("unknown key");
        }
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path.string() + "'");
    return parse_config(in);
}

} // namespace commkit
