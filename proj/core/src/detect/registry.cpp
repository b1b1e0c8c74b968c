#include <algorithm>
#include <string>

#include "commkit/detect.hpp"
#include "commkit/error.hpp"

namespace commkit {

const std::vector<std::string>& detector_names() {
    static const std::vector<std::string> names = {
        "fastgreedy", "louvain", "spinglass", "leading_eigenvector", "mcl",
        "walktrap", "infomap", "label_propagation", "edge_betweenness", "radetal"};
    return names;
}

bool is_detector(std::string_view name) {
    const auto& names = detector_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

DetectionResult run_detector(std::string_view name, const Graph& g, const DetectorParams& params,
                             RngStream& rng) {
    params.validate();
    if (name == "fastgreedy") return detect_fastgreedy(g, params);
    if (name == "louvain") return detect_louvain(g, params, rng);
    if (name == "spinglass") return detect_spinglass(g, params, rng);
    if (name == "leading_eigenvector") return detect_leading_eigenvector(g, params);
    if (name == "mcl") return detect_mcl(g, params);
    if (name == "walktrap") return detect_walktrap(g, params);
    if (name == "infomap") return detect_infomap(g, params, rng);
    if (name == "label_propagation") return detect_label_propagation(g, params, rng);
    if (name == "edge_betweenness") return detect_edge_betweenness(g, params, rng);
    if (name == "radetal") return detect_radetal(g, params);
    throw ArgumentError("unknown detector '" + std::string(name) + "'");
}

} // namespace commkit
