#include <charconv>
#include <cmath>
#include <string>

#include "commkit/detect.hpp"
#include "commkit/error.hpp"

namespace commkit {

namespace {

double parse_real(std::string_view key, std::string_view text) {
    try {
        std::size_t used = 0;
        const std::string s(text);
        const double v = std::stod(s, &used);
        if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ArgumentError("parameter '" + std::string(key) + "' expects a number, got '" +
                            std::string(text) + "'");
    }
}

std::size_t parse_count(std::string_view key, std::string_view text) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ArgumentError("parameter '" + std::string(key) +
                            "' expects a non-negative integer, got '" + std::string(text) + "'");
    }
    return v;
}

void require(bool ok, const char* what) {
    if (!ok) throw ArgumentError(std::string("invalid detector parameter: ") + what);
}

} // namespace

void DetectorParams::validate() const {
    require(spinglass.spins >= 2, "spinglass.spins must be >= 2");
    require(spinglass.cooling > 0.0 && spinglass.cooling < 1.0, "spinglass.cooling must be in (0, 1)");
    require(spinglass.sweeps_per_temperature >= 1, "spinglass.sweeps must be >= 1");
    require(spinglass.target_initial_acceptance > 0.0 && spinglass.target_initial_acceptance < 1.0,
            "spinglass.initial_acceptance must be in (0, 1)");
    require(spinglass.stop_acceptance > 0.0 && spinglass.stop_acceptance < spinglass.target_initial_acceptance,
            "spinglass.stop_acceptance must be in (0, initial_acceptance)");
    require(spinglass.gamma > 0.0, "spinglass.gamma must be > 0");
    require(mcl.inflation > 1.0, "mcl.inflation must be > 1");
    require(mcl.prune_threshold >= 0.0 && mcl.prune_threshold < 1.0, "mcl.prune must be in [0, 1)");
    require(mcl.epsilon > 0.0, "mcl.epsilon must be > 0");
    require(mcl.self_loop_weight >= 0.0, "mcl.self_loop must be >= 0");
    require(mcl.max_iterations >= 1, "mcl.max_iterations must be >= 1");
    require(walktrap.steps >= 1, "walktrap.steps must be >= 1");
    require(infomap.outer_loops >= 1, "infomap.outer_loops must be >= 1");
    require(infomap.max_sweeps >= 1, "infomap.max_sweeps must be >= 1");
    require(infomap.teleport >= 0.0 && infomap.teleport < 1.0, "infomap.teleport must be in [0, 1)");
    require(label_propagation.max_sweeps >= 1, "label_propagation.max_sweeps must be >= 1");
    require(leading_eigenvector.tolerance > 0.0, "leading_eigenvector.tolerance must be > 0");
    require(leading_eigenvector.max_iterations >= 1, "leading_eigenvector.max_iterations must be >= 1");
    require(louvain.max_levels >= 1, "louvain.max_levels must be >= 1");
    require(recompute_every >= 1, "recompute_every must be >= 1");
    require(!time_limit || time_limit->count() > 0, "time_limit must be positive");
}

void DetectorParams::set(std::string_view key, std::string_view value) {
    if (key == "spinglass.spins") spinglass.spins = parse_count(key, value);
    else if (key == "spinglass.cooling") spinglass.cooling = parse_real(key, value);
    else if (key == "spinglass.sweeps") spinglass.sweeps_per_temperature = parse_count(key, value);
    else if (key == "spinglass.initial_acceptance") spinglass.target_initial_acceptance = parse_real(key, value);
    else if (key == "spinglass.stop_acceptance") spinglass.stop_acceptance = parse_real(key, value);
    else if (key == "spinglass.gamma") spinglass.gamma = parse_real(key, value);
    else if (key == "mcl.inflation") mcl.inflation = parse_real(key, value);
    else if (key == "mcl.prune") mcl.prune_threshold = parse_real(key, value);
    else if (key == "mcl.epsilon") mcl.epsilon = parse_real(key, value);
    else if (key == "mcl.self_loop") mcl.self_loop_weight = parse_real(key, value);
    else if (key == "mcl.max_iterations") mcl.max_iterations = parse_count(key, value);
    else if (key == "walktrap.steps") walktrap.steps = parse_count(key, value);
    else if (key == "infomap.outer_loops") infomap.outer_loops = parse_count(key, value);
    else if (key == "infomap.max_sweeps") infomap.max_sweeps = parse_count(key, value);
    else if (key == "infomap.teleport") infomap.teleport = parse_real(key, value);
    else if (key == "label_propagation.max_sweeps") label_propagation.max_sweeps = parse_count(key, value);
    else if (key == "leading_eigenvector.tolerance") leading_eigenvector.tolerance = parse_real(key, value);
    else if (key == "leading_eigenvector.max_iterations") leading_eigenvector.max_iterations = parse_count(key, value);
    else if (key == "louvain.max_levels") louvain.max_levels = parse_count(key, value);
    else if (key == "recompute_every") recompute_every = parse_count(key, value);
    else if (key == "time_limit_ms") time_limit = std::chrono::milliseconds(parse_count(key, value));
    else throw ArgumentError("unknown detector parameter '" + std::string(key) + "'");
}

} // namespace commkit
