// Markov cluster process on a sparse column-stochastic matrix.
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "internal.hpp"

namespace commkit {

namespace {

struct Entry {
    std::uint32_t row;
    double value;
};
using Column = std::vector<Entry>; // sorted by row
using Matrix = std::vector<Column>;

void normalize(Column& col) {
    double sum = 0.0;
    for (const Entry& e : col) sum += e.value;
    if (sum > 0.0) {
        for (Entry& e : col) e.value /= sum;
    }
}

} // namespace

DetectionResult detect_mcl(const Graph& g, const DetectorParams& params) {
    detail::Deadline deadline(params, "mcl");
    const auto& p = params.mcl;
    const std::size_t n = g.node_count();

    Matrix m(n);
    for (node v = 0; v < n; ++v) {
        Column& col = m[v];
        bool placed = false;
        for (node w : g.neighbors(v)) {
            if (!placed && w > v && p.self_loop_weight > 0.0) {
                col.push_back({v, p.self_loop_weight});
                placed = true;
            }
            col.push_back({w, 1.0});
        }
        if (!placed && p.self_loop_weight > 0.0) col.push_back({v, p.self_loop_weight});
        if (col.empty()) col.push_back({v, 1.0}); // isolated node keeps its own flow
        normalize(col);
    }

    std::vector<double> acc(n, 0.0);
    std::vector<std::uint32_t> rows;
    bool converged = false;
    for (std::size_t it = 0; it < p.max_iterations && !converged; ++it) {
        deadline.check();
        Matrix next(n);
        double change = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            // Expansion: column j of M * M.
            rows.clear();
            for (const Entry& kj : m[j]) {
                for (const Entry& ik : m[kj.row]) {
                    if (acc[ik.row] == 0.0) rows.push_back(ik.row);
                    acc[ik.row] += ik.value * kj.value;
                }
            }
            std::sort(rows.begin(), rows.end());
            // Inflation, pruning, renormalization.
            Column col;
            col.reserve(rows.size());
            double sum = 0.0;
            for (std::uint32_t r : rows) {
                const double v = std::pow(acc[r], p.inflation);
                acc[r] = 0.0;
                col.push_back({r, v});
                sum += v;
            }
            Column kept;
            kept.reserve(col.size());
            for (const Entry& e : col) {
                if (e.value > 0.0 && e.value / sum >= p.prune_threshold) kept.push_back({e.row, e.value});
            }
            normalize(kept);
            // Change against the previous column (both sorted by row).
            std::size_t a = 0, b = 0;
            const Column& old = m[j];
            while (a < old.size() || b < kept.size()) {
                if (b == kept.size() || (a < old.size() && old[a].row < kept[b].row)) {
                    change = std::max(change, old[a++].value);
                } else if (a == old.size() || kept[b].row < old[a].row) {
                    change = std::max(change, kept[b++].value);
                } else {
                    change = std::max(change, std::fabs(old[a++].value - kept[b++].value));
                }
            }
            next[j] = std::move(kept);
        }
        m.swap(next);
        converged = change < p.epsilon;
    }
    if (!converged) {
        throw DetectorError("mcl did not converge within " + std::to_string(p.max_iterations) +
                            " iterations");
    }

    // Communities: connected components of the attractor support.
    std::vector<std::uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t j = 0; j < n; ++j) {
        for (const Entry& e : m[j]) parent[find(e.row)] = find(static_cast<std::uint32_t>(j));
    }
    std::vector<community> labels(n);
    for (std::size_t v = 0; v < n; ++v) labels[v] = find(static_cast<std::uint32_t>(v));
    return {Partition(labels), std::nullopt, false};
}

} // namespace commkit
