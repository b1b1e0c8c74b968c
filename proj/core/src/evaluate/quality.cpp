#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "commkit/error.hpp"
#include "commkit/measures.hpp"

namespace commkit {

namespace {

void check_cover(const Graph& g, const Partition& p) {
    if (p.node_count() != g.node_count()) {
        throw ArgumentError("partition covers " + std::to_string(p.node_count()) +
                            " nodes but graph has " + std::to_string(g.node_count()));
    }
}

struct Tally {
    std::vector<count> internal;
    std::vector<count> boundary;
    std::vector<count> volume;
};

Tally tally(const Graph& g, const Partition& p) {
    Tally t;
    const std::size_t k = p.community_count();
    t.internal.assign(k, 0);
    t.boundary.assign(k, 0);
    t.volume.assign(k, 0);
    for (const Edge& e : g.edges()) {
        const community a = p[e.u];
        const community b = p[e.v];
        t.volume[a] += 1;
        t.volume[b] += 1;
        if (a == b) {
            t.internal[a] += 1;
        } else {
            t.boundary[a] += 1;
            t.boundary[b] += 1;
        }
    }
    return t;
}

double pairs(std::size_t s) { return 0.5 * static_cast<double>(s) * static_cast<double>(s - 1); }

double log_choose(double n, double k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

} // namespace

double modularity(const Graph& g, const Partition& p) {
    check_cover(g, p);
    if (g.edge_count() == 0) throw ArgumentError("modularity is undefined on a graph without edges");
    const Tally t = tally(g, p);
    // Q = (4m * sum l_c - sum d_c^2) / (4m^2) in integers, then one division:
    // the exact rational rounded once whenever 4m^2 < 2^53 (m below ~4.7e7).
    const auto m = static_cast<std::int64_t>(g.edge_count());
    std::int64_t internal = 0, squares = 0;
    for (std::size_t c = 0; c < t.internal.size(); ++c) {
        internal += static_cast<std::int64_t>(t.internal[c]);
        squares += static_cast<std::int64_t>(t.volume[c]) * static_cast<std::int64_t>(t.volume[c]);
    }
    return static_cast<double>(4 * m * internal - squares) / static_cast<double>(4 * m * m);
}

QualityReport quality_functions(const Graph& g, const Partition& p) {
    check_cover(g, p);
    const Tally t = tally(g, p);
    const auto sizes = p.community_sizes();
    const std::size_t n = g.node_count();
    QualityReport report;
    report.communities.resize(sizes.size());
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        CommunityQuality& q = report.communities[c];
        q.size = sizes[c];
        q.internal_edges = t.internal[c];
        q.boundary_edges = t.boundary[c];
        q.internal_density = q.size > 1 ? static_cast<double>(q.internal_edges) / pairs(q.size) : 0.0;
        const double outside = static_cast<double>(q.size) * static_cast<double>(n - q.size);
        q.cut_ratio = outside > 0.0 ? static_cast<double>(q.boundary_edges) / outside : 0.0;
        const double denom = 2.0 * static_cast<double>(q.internal_edges) + static_cast<double>(q.boundary_edges);
        q.conductance = denom > 0.0 ? static_cast<double>(q.boundary_edges) / denom : 0.0;
        const double w = static_cast<double>(q.size);
        report.internal_density += w * q.internal_density;
        report.cut_ratio += w * q.cut_ratio;
        report.conductance += w * q.conductance;
    }
    if (n > 0) {
        report.internal_density /= static_cast<double>(n);
        report.cut_ratio /= static_cast<double>(n);
        report.conductance /= static_cast<double>(n);
    }
    return report;
}

double surprise(const Graph& g, const Partition& p) {
    check_cover(g, p);
    const Tally t = tally(g, p);
    const std::size_t n = g.node_count();
    const count links = g.edge_count();
    if (n < 2) return 0.0;

    const count total_pairs = static_cast<count>(n) * (n - 1) / 2;
    count intra_pairs = 0;
    for (auto s : p.community_sizes()) intra_pairs += static_cast<count>(s) * (s - 1) / 2;
    count observed = 0;
    for (auto x : t.internal) observed += x;

    // Support of the hypergeometric: max(0, m - (F - M)) .. min(m, M).
    const count inter_pairs = total_pairs - intra_pairs;
    const count low = links > inter_pairs ? links - inter_pairs : 0;
    const count high = std::min(links, intra_pairs);
    if (observed <= low) return 0.0; // the tail is the whole support

    const double F = static_cast<double>(total_pairs);
    const double M = static_cast<double>(intra_pairs);
    const double m = static_cast<double>(links);
    const double log_norm = log_choose(F, m);
    std::vector<double> terms;
    terms.reserve(high - observed + 1);
    for (count i = observed; i <= high; ++i) {
        const double x = static_cast<double>(i);
        terms.push_back(log_choose(M, x) + log_choose(F - M, m - x) - log_norm);
    }
    const double top = *std::max_element(terms.begin(), terms.end());
    double acc = 0.0;
    for (double v : terms) acc += std::exp(v - top);
    const double log_p = top + std::log(acc);
    return std::max(0.0, -log_p / std::log(10.0));
}

CommunityProfile community_profile(const Graph& g, const Partition& p) {
    check_cover(g, p);
    const Tally t = tally(g, p);
    const auto sizes = p.community_sizes();
    const std::size_t n = g.node_count();
    CommunityProfile profile;
    profile.communities.resize(sizes.size());
    profile.embeddedness.assign(n, 0.0);

    std::vector<count> best_internal(sizes.size(), 0);
    for (node v = 0; v < n; ++v) {
        count inside = 0;
        for (node w : g.neighbors(v)) inside += p[w] == p[v] ? 1 : 0;
        const count k = g.degree_of(v);
        profile.embeddedness[v] = k > 0 ? static_cast<double>(inside) / static_cast<double>(k) : 0.0;
        best_internal[p[v]] = std::max(best_internal[p[v]], inside);
        profile.communities[p[v]].embeddedness_mean += profile.embeddedness[v];
    }
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        CommunityProfileEntry& e = profile.communities[c];
        e.size = sizes[c];
        e.internal_edges = t.internal[c];
        e.boundary_edges = t.boundary[c];
        e.embeddedness_mean /= static_cast<double>(e.size);
        if (e.size > 1) {
            e.scaled_density = static_cast<double>(e.size) * static_cast<double>(e.internal_edges) / pairs(e.size);
            e.hub_dominance = static_cast<double>(best_internal[c]) / static_cast<double>(e.size - 1);
        }
    }
    return profile;
}

const std::vector<std::string>& measure_names() {
    static const std::vector<std::string> names = {
        "rand", "ari", "jaccard", "purity", "van_dongen", "mi", "vi", "nmi",
        "modularity", "surprise", "internal_density", "cut_ratio", "conductance",
        "community_count"};
    return names;
}

bool is_measure(std::string_view name) {
    const auto& names = measure_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

bool measure_needs_truth(std::string_view name) {
    if (!is_measure(name)) throw ArgumentError("unknown measure '" + std::string(name) + "'");
    static const std::vector<std::string_view> graph_only = {
        "modularity", "surprise", "internal_density", "cut_ratio", "conductance", "community_count"};
    return std::find(graph_only.begin(), graph_only.end(), name) == graph_only.end();
}

std::optional<double> evaluate_measure(std::string_view name, const Graph& g,
                                       const Partition& found, const Partition* truth) {
    if (measure_needs_truth(name)) {
        if (truth == nullptr) {
            throw ArgumentError("measure '" + std::string(name) + "' needs a reference partition");
        }
        const Partition& ref = *truth;
        if (name == "rand") return rand_index(found, ref);
        if (name == "ari") return adjusted_rand_index(found, ref);
        if (name == "jaccard") return jaccard_index(found, ref);
        if (name == "purity") return purity(found, ref);
        if (name == "van_dongen") return van_dongen(found, ref);
        const InformationStats s = mutual_information_stats(found, ref);
        if (name == "mi") return s.mi;
        if (name == "vi") return s.vi;
        return s.nmi;
    }
    if (name == "community_count") return static_cast<double>(found.community_count());
    if (name == "modularity") {
        if (g.edge_count() == 0) return std::nullopt;
        return modularity(g, found);
    }
    if (name == "surprise") return surprise(g, found);
    const QualityReport q = quality_functions(g, found);
    if (name == "internal_density") return q.internal_density;
    if (name == "cut_ratio") return q.cut_ratio;
    return q.conductance;
}

} // namespace commkit
