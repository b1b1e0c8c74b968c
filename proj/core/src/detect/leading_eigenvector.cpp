// Newman's recursive spectral bisection on the generalized modularity matrix.
#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "internal.hpp"

namespace commkit {

namespace {

struct Bisector {
    const Graph& g;
    const DetectorParams::LeadingEigenvector& p;
    detail::Deadline& deadline;
    double two_m;
    std::vector<std::int64_t> local; // node -> index in the current group, or -1

    // y = B^(g) x for the group `members`.
    void apply(const std::vector<node>& members, const std::vector<double>& internal_degree,
               double group_volume, const std::vector<double>& x, std::vector<double>& y) const {
        double kx = 0.0;
        for (std::size_t i = 0; i < members.size(); ++i) {
            kx += static_cast<double>(g.degree_of(members[i])) * x[i];
        }
        for (std::size_t i = 0; i < members.size(); ++i) {
            const node v = members[i];
            const double k = static_cast<double>(g.degree_of(v));
            double ax = 0.0;
            for (node w : g.neighbors(v)) {
                if (local[w] >= 0) ax += x[static_cast<std::size_t>(local[w])];
            }
            y[i] = ax - k * kx / two_m - x[i] * (internal_degree[i] - k * group_volume / two_m);
        }
    }

    // Returns the two halves, or nothing when the group is indivisible.
    std::optional<std::pair<std::vector<node>, std::vector<node>>> split(const std::vector<node>& members) {
        const std::size_t size = members.size();
        if (size < 2) return std::nullopt;
        for (std::size_t i = 0; i < size; ++i) local[members[i]] = static_cast<std::int64_t>(i);

        std::vector<double> internal_degree(size, 0.0);
        double group_volume = 0.0;
        for (std::size_t i = 0; i < size; ++i) {
            for (node w : g.neighbors(members[i])) internal_degree[i] += local[w] >= 0 ? 1.0 : 0.0;
            group_volume += static_cast<double>(g.degree_of(members[i]));
        }
        // Gershgorin-style bound on the spectral radius; the shift makes the
        // most positive eigenvalue dominant.
        double shift = 0.0;
        for (std::size_t i = 0; i < size; ++i) {
            const double k = static_cast<double>(g.degree_of(members[i]));
            shift = std::max(shift, 2.0 * (internal_degree[i] + k * group_volume / two_m));
        }

        // Deterministic pseudo-random start: a symmetric start vector would be
        // orthogonal to antisymmetric eigenvectors of symmetric graphs.
        RngStream start(0x5eed, size);
        std::vector<double> x(size), y(size);
        for (auto& xi : x) xi = 0.5 + start.uniform_real();
        // B^(g) maps the all-ones vector to zero. Projecting it out removes a
        // competitor that is nearly degenerate with small positive leading
        // eigenvalues; every other eigenvector is orthogonal to it anyway.
        auto normalize = [](std::vector<double>& v) {
            double mean = 0.0;
            for (double e : v) mean += e;
            mean /= static_cast<double>(v.size());
            for (double& e : v) e -= mean;
            double norm = 0.0;
            for (double e : v) norm += e * e;
            norm = std::sqrt(norm);
            if (norm == 0.0) return false;
            for (double& e : v) e /= norm;
            return true;
        };
        double lambda = 0.0;
        bool converged = !normalize(x);
        for (std::size_t it = 0; !converged && it < p.max_iterations; ++it) {
            apply(members, internal_degree, group_volume, x, y);
            double rayleigh = 0.0;
            for (std::size_t i = 0; i < size; ++i) rayleigh += x[i] * y[i];
            for (std::size_t i = 0; i < size; ++i) y[i] += shift * x[i];
            if (!normalize(y)) {
                // Only reachable when B^(g) vanishes off the ones vector.
                lambda = 0.0;
                converged = true;
                break;
            }
            double change = 0.0;
            for (std::size_t i = 0; i < size; ++i) change = std::max(change, std::fabs(y[i] - x[i]));
            x.swap(y);
            const bool settled = it > 0 && std::fabs(rayleigh - lambda) <= p.tolerance * std::max(1.0, std::fabs(rayleigh));
            lambda = rayleigh;
            if (change <= p.tolerance || settled) {
                converged = true;
                break;
            }
            if ((it & 63u) == 0) deadline.check();
        }
        if (!converged) {
            for (node v : members) local[v] = -1;
            throw DetectorError("leading_eigenvector: power iteration did not converge on a subgraph of " +
                                std::to_string(size) + " nodes");
        }

        std::optional<std::pair<std::vector<node>, std::vector<node>>> out;
        if (lambda > p.tolerance) {
            std::vector<double> s(size);
            for (std::size_t i = 0; i < size; ++i) s[i] = x[i] >= 0.0 ? 1.0 : -1.0;
            apply(members, internal_degree, group_volume, s, y);
            double gain = 0.0;
            for (std::size_t i = 0; i < size; ++i) gain += s[i] * y[i];
            gain /= 2.0 * two_m; // s^T B s / 4m
            if (gain > p.tolerance) {
                std::pair<std::vector<node>, std::vector<node>> halves;
                for (std::size_t i = 0; i < size; ++i) {
                    (s[i] > 0.0 ? halves.first : halves.second).push_back(members[i]);
                }
                if (!halves.first.empty() && !halves.second.empty()) out = std::move(halves);
            }
        }
        for (node v : members) local[v] = -1;
        return out;
    }
};

} // namespace

DetectionResult detect_leading_eigenvector(const Graph& g, const DetectorParams& params) {
    detail::Deadline deadline(params, "leading_eigenvector");
    const std::size_t n = g.node_count();
    if (g.edge_count() == 0) return {Partition::singletons(n), std::nullopt, false};

    Bisector bisector{g, params.leading_eigenvector, deadline,
                      2.0 * static_cast<double>(g.edge_count()),
                      std::vector<std::int64_t>(n, -1)};
    std::vector<node> all(n);
    for (node v = 0; v < n; ++v) all[v] = v;
    std::deque<std::vector<node>> pending{std::move(all)};
    std::vector<std::vector<node>> done;
    while (!pending.empty()) {
        std::vector<node> group = std::move(pending.front());
        pending.pop_front();
        if (auto halves = bisector.split(group)) {
            pending.push_back(std::move(halves->first));
            pending.push_back(std::move(halves->second));
        } else {
            done.push_back(std::move(group));
        }
    }
    std::vector<community> labels(n);
    for (std::size_t c = 0; c < done.size(); ++c) {
        for (node v : done[c]) labels[v] = static_cast<community>(c);
    }
    return {detail::isolate_degree_zero(g, Partition(labels)), std::nullopt, false};
}

} // namespace commkit
