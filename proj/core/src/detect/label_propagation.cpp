// Asynchronous label propagation with random tie breaking.
#include <algorithm>
#include <numeric>

#include "internal.hpp"

namespace commkit {

DetectionResult detect_label_propagation(const Graph& g, const DetectorParams& params, RngStream& rng) {
    detail::Deadline deadline(params, "label_propagation");
    const std::size_t n = g.node_count();
    std::vector<community> label(n);
    std::iota(label.begin(), label.end(), community{0});

    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::vector<std::uint32_t> tally(n, 0);
    std::vector<community> seen, majority;

    // Fills `majority` with the most frequent neighbor labels of v.
    auto majority_of = [&](node v) {
        seen.clear();
        majority.clear();
        std::uint32_t top = 0;
        for (node w : g.neighbors(v)) {
            if (tally[label[w]]++ == 0) seen.push_back(label[w]);
            top = std::max(top, tally[label[w]]);
        }
        for (community c : seen) {
            if (tally[c] == top) majority.push_back(c);
            tally[c] = 0;
        }
    };

    bool stable = false;
    for (std::size_t sweep = 0; sweep < params.label_propagation.max_sweeps && !stable; ++sweep) {
        rng.shuffle(std::span<std::uint32_t>(order));
        for (std::uint32_t v : order) {
            deadline.tick();
            if (g.degree_of(v) == 0) continue;
            majority_of(v);
            // `seen` order follows the sorted neighbor list, so the draw
            // depends only on the graph and the stream.
            label[v] = majority.size() == 1 ? majority[0] : majority[rng.uniform(majority.size())];
        }
        stable = true;
        for (node v = 0; v < n && stable; ++v) {
            if (g.degree_of(v) == 0) continue;
            majority_of(v);
            stable = std::find(majority.begin(), majority.end(), label[v]) != majority.end();
        }
    }
    return {Partition(label), std::nullopt, !stable};
}

} // namespace commkit
